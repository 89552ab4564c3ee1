#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "nlosc/verify.hpp"

using namespace nlosc;

TEST(BuiltinCases, SatisfyTheirEquations) {
    std::mt19937 rng(5);
    for (const AnalyticCase& c : builtin_cases()) {
        const Expression dp = differentiate(c.exact, static_cast<unsigned>(c.ivp.order));
        std::uniform_real_distribution<double> td(c.ivp.a, c.ivp.b);
        for (int i = 0; i < 20; ++i) {
            const double t = td(rng);
            const double g = evaluate(c.ivp.g, t);
            const double r = evaluate(dp, t) + evaluate(c.ivp.f, t) * evaluate(c.exact, t) - g;
            EXPECT_LE(std::abs(r), 1e-9 * (1 + std::abs(g))) << c.name << " t=" << t;
        }
        ASSERT_EQ(c.ivp.u.size(), static_cast<std::size_t>(c.ivp.order));
        ASSERT_EQ(c.u_text.size(), c.ivp.u.size());
        for (int k = 0; k < c.ivp.order; ++k) {
            EXPECT_NEAR(c.ivp.u[k], evaluate(differentiate(c.exact, static_cast<unsigned>(k)), c.ivp.a), 1e-14)
                << c.name << " k=" << k;
            EXPECT_EQ(c.ivp.u[k], evaluate(parse(c.u_text[k]), 0.0)) << c.name << " k=" << k;
        }
    }
}

TEST(BuiltinCases, Examples) {
    const AnalyticCase c1 = builtin_case(1);
    EXPECT_EQ(c1.ivp.a, -1.0);
    EXPECT_EQ(c1.ivp.b, 1.0);
    EXPECT_EQ(c1.ivp.order, 4);
    EXPECT_EQ(builtin_case(2).ivp.u, (std::vector<double>{0, 1, 0, -3}));
    EXPECT_EQ(evaluate(builtin_case(3).exact, 1.0), 0.0);
    EXPECT_EQ(builtin_case(4).ivp.order, 6);
    EXPECT_THROW(builtin_case(0), std::out_of_range);
    EXPECT_THROW(builtin_case(5), std::out_of_range);
}

TEST(MaxAbsError, Examples) {
    const AnalyticCase c = builtin_case(1);
    GridSolution exact;
    exact.n = 24;
    exact.t = uniform_grid(c.ivp.a, c.ivp.b, 24);
    for (double t : exact.t) exact.y.push_back(evaluate(c.exact, t));
    EXPECT_EQ(max_abs_error(exact, c.exact), 0.0);

    GridSolution bumped = exact;
    bumped.y[7] += 1e-3;
    EXPECT_NEAR(max_abs_error(bumped, c.exact), 1e-3, 1e-15);
    EXPECT_NEAR(max_abs_error(bumped, exact), 1e-3, 1e-15);

    const double e = max_abs_error(solve(c.ivp, 24, make_method("improved4", "")), c.exact);
    EXPECT_NEAR(e, 7.19e-8, 0.01e-8);

    GridSolution shorter = exact;
    shorter.y.pop_back();
    EXPECT_THROW(max_abs_error(shorter, exact), std::invalid_argument);
}

TEST(ConvergenceSlopes, Examples) {
    EXPECT_NEAR(convergence_slopes({12, 24}, {1e-2, 2.5e-3})[0], 2.0, 1e-12);
    EXPECT_NEAR(convergence_slopes({12, 24}, {1.17e-5, 7.19e-8})[0], 7.346, 1e-3);
    EXPECT_NEAR(convergence_slopes({16, 32}, {7.50e-5, 5.45e-6})[0], 3.783, 1e-3);
    // unequal ratios use the general log ratio
    EXPECT_NEAR(convergence_slopes({10, 30}, {9.0, 1.0})[0], 2.0, 1e-12);
    EXPECT_THROW(convergence_slopes({12, 12}, {1, 1}), std::invalid_argument);
    EXPECT_THROW(convergence_slopes({12, 24}, {1}), std::invalid_argument);
}

TEST(Methods, Factory) {
    EXPECT_EQ(method_order(make_method("standard4", "")), 4);
    EXPECT_EQ(method_order(make_method("spline6", "table5-col2")), 6);
    EXPECT_EQ(minimum_n(make_method("improved4", "")), 6);
    EXPECT_EQ(minimum_n(make_method("spline6", "")), 8);
    EXPECT_EQ(label(make_method("improved4", "")), preset4("improved4", EndVariant::Improved).label());
    EXPECT_THROW(make_method("spline8", ""), std::invalid_argument);
    EXPECT_THROW(make_method("spline6", "improved4"), std::invalid_argument);
}

TEST(RkOracle, MatchesAnalyticSolutions) {
    const AnalyticCase c1 = builtin_case(1);
    EXPECT_LE(max_abs_error(rk_oracle(c1.ivp, 100000), c1.exact), 1e-10);
    const AnalyticCase c3 = builtin_case(3);
    EXPECT_LE(max_abs_error(rk_oracle(c3.ivp, 100000), c3.exact), 1e-9);
}

TEST(RkOracle, ConstantSolution) {
    HighOrderIVP ivp;
    ivp.order = 4;
    ivp.f = Expression::constant(0.0);
    ivp.g = Expression::constant(0.0);
    ivp.u = {1, 0, 0, 0};
    const GridSolution s = rk_oracle(ivp, 100, 10);
    ASSERT_EQ(s.y.size(), 11u);
    for (double v : s.y) EXPECT_EQ(v, 1.0);
}

TEST(RkOracle, SubsamplingRules) {
    const AnalyticCase c = builtin_case(2);
    EXPECT_THROW(rk_oracle(c.ivp, 1000, 7), std::invalid_argument);
    const GridSolution fine = rk_oracle(c.ivp, 120);
    const GridSolution coarse = subsample(fine, 12);
    ASSERT_EQ(coarse.y.size(), 13u);
    for (int i = 0; i <= 12; ++i) {
        EXPECT_EQ(coarse.y[i], fine.y[10 * i]);
        EXPECT_NEAR(coarse.t[i], fine.t[10 * i], 1e-15);
    }
    EXPECT_EQ(oracle_steps_for({6, 12, 24, 48}), 100032);
    EXPECT_EQ(oracle_steps_for({8, 16, 32}, 100), 128);
}

TEST(RkOracle, SelfConvergesAtFourthOrder) {
    for (int id : {1, 4}) {
        const AnalyticCase c = builtin_case(id);
        const double coarse = max_abs_error(rk_oracle(c.ivp, 64), c.exact);
        const double fine = max_abs_error(rk_oracle(c.ivp, 128, 64), c.exact);
        EXPECT_GE(coarse / fine, 12.0) << c.name;
    }
}

TEST(RkOracle, AgreesWithAnalyticErrorOnEveryTableCell) {
    for (int id = 1; id <= 8; ++id) {
        const ErrorTable table = table_layout(id);
        const AnalyticCase c = builtin_case(table.case_id);
        const GridSolution fine = rk_oracle(c.ivp, oracle_steps_for(table.ns));
        for (const ErrorColumn& col : table.columns) {
            for (int n : table.ns) {
                const GridSolution sol = solve(c.ivp, n, col.method);
                const double analytic = max_abs_error(sol, c.exact);
                const double oracle = max_abs_error(sol, subsample(fine, n));
                EXPECT_LE(std::abs(analytic - oracle), 1e-8 + 1e-3 * analytic)
                    << "table " << id << " " << col.key << " n=" << n;
            }
        }
    }
}

TEST(Tables, Layouts) {
    EXPECT_THROW(table_layout(0), std::out_of_range);
    EXPECT_THROW(table_layout(9), std::out_of_range);
    for (int id = 1; id <= 8; ++id) {
        const ErrorTable t = table_layout(id);
        EXPECT_EQ(t.id, id);
        EXPECT_FALSE(t.columns.empty());
        for (const ErrorColumn& col : t.columns) {
            EXPECT_EQ(col.published.size(), t.ns.size()) << id << " " << col.key;
            EXPECT_TRUE(col.errors.empty());
        }
    }
    EXPECT_EQ(table_layout(2).ns, (std::vector<int>{6, 12, 24, 48}));
    EXPECT_EQ(table_layout(2).case_id, 1);
    EXPECT_EQ(table_layout(8).case_id, 4);
}

TEST(Tables, ReproduceTableTwo) {
    const ErrorTable t = reproduce_table(2);
    ASSERT_EQ(t.columns.size(), 1u);
    const ErrorColumn& col = t.columns[0];
    ASSERT_EQ(col.errors.size(), 4u);
    for (std::size_t r = 0; r < 4; ++r) {
        ASSERT_TRUE(col.published[r].has_value());
        EXPECT_LE(col.errors[r], 5 * *col.published[r]) << "n=" << t.ns[r];
        EXPECT_GE(col.errors[r], *col.published[r] / 5) << "n=" << t.ns[r];
    }
}

TEST(Tables, ReproduceTablesFourAndFive) {
    const ErrorTable t4 = reproduce_table(4);
    EXPECT_NEAR(t4.columns[0].errors[2], 1.049e-9, 0.01e-9);
    const ErrorTable t5 = reproduce_table(5);
    ASSERT_EQ(t5.columns.size(), 3u);
    EXPECT_NEAR(t5.columns[0].errors[1], 7.498e-5, 0.01e-5);
    for (const ErrorColumn& col : t5.columns)
        for (std::size_t r = 0; r + 1 < col.errors.size(); ++r) EXPECT_LT(col.errors[r + 1], col.errors[r]) << col.key;
}

TEST(Tables, Formatting) {
    const ErrorTable t = reproduce_table(3);
    const std::string text = format_table(t);
    EXPECT_NE(text.find("n"), std::string::npos);
    for (int n : t.ns) EXPECT_NE(text.find(std::to_string(n)), std::string::npos);

    const std::string csv = table_csv(t);
    EXPECT_EQ(csv.rfind("table,n,column,computed,published\n", 0), 0u);
    std::size_t lines = 0;
    for (char ch : csv) lines += ch == '\n';
    EXPECT_EQ(lines, 1 + t.ns.size() * t.columns.size());
}
