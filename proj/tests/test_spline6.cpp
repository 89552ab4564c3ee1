#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "nlosc/spline6.hpp"
#include "nlosc/verify.hpp"
#include "oracles.hpp"

using namespace nlosc;

namespace {

HighOrderIVP homogeneous6() {
    HighOrderIVP ivp;
    ivp.order = 6;
    ivp.f = Expression::constant(0.0);
    ivp.g = Expression::constant(0.0);
    ivp.a = 0.0;
    ivp.b = 1.0;
    ivp.u = std::vector<double>(6, 0.0);
    return ivp;
}

const std::vector<const char*> kPresets{"table5-col1", "table5-col2", "table5-col3",
                                        "improved6",   "derived6-h4", "derived6-h6"};

Rational normalization(const CoefficientSet6& s) {
    return s.alpha() + s.beta() + s.gamma() + s.delta() / Rational(2);
}

}  // namespace

TEST(CoefficientSet6, EnforcesNormalization) {
    EXPECT_THROW(CoefficientSet6(Rational(1), Rational(0), Rational(0), Rational(0)), std::invalid_argument);
    EXPECT_NO_THROW(CoefficientSet6(Rational(1), Rational(0), Rational(0), Rational(0), unchecked));
    for (const char* name : kPresets) EXPECT_EQ(normalization(preset6(name)), Rational(1, 2)) << name;
    EXPECT_THROW(preset6("table5-col4"), std::invalid_argument);
}

TEST(ThetaCoefficients6, FrozenValues) {
    const ThetaCoefficients6 a = theta_coefficients6(std::numbers::pi / 2);
    EXPECT_NEAR(a.alpha, 0.048047704073139581, 1e-15);
    EXPECT_NEAR(a.beta, 0.033078451625884594, 1e-15);
    EXPECT_NEAR(a.gamma, 0.30388031080650299, 1e-15);
    EXPECT_NEAR(a.delta, 0.59871957757924556, 1e-15);
    EXPECT_NEAR(a.defect, 0.18436625529514994, 1e-15);

    const ThetaCoefficients6 b = theta_coefficients6(1.0);
    EXPECT_NEAR(b.alpha, 0.089362180296611115, 1e-15);
    EXPECT_NEAR(b.beta, 0.02691757772394431, 1e-15);
    EXPECT_NEAR(b.gamma, 0.25917813384738999, 1e-15);
    EXPECT_NEAR(b.delta, 0.51994846181840837, 1e-15);
    EXPECT_NEAR(b.defect, 0.1354321227771496, 1e-15);

    // near the upper end the weights blow up but stay finite
    const ThetaCoefficients6 c = theta_coefficients6(std::numbers::pi - 0.01 - 1e-12);
    EXPECT_NEAR(c.alpha, 2.4493691590266124, 1e-8);
    EXPECT_NEAR(c.beta, 4.6225605937934705, 1e-8);
    EXPECT_NEAR(c.gamma, 31.861369289072824, 1e-7);
    EXPECT_NEAR(c.delta, 54.652845716898286, 1e-7);
    EXPECT_NEAR(c.defect, 65.75972190034205, 1e-7);
}

TEST(ThetaCoefficients6, Domain) {
    EXPECT_THROW(theta_coefficients6(3.2), std::domain_error);
    EXPECT_THROW(theta_coefficients6(0.001), std::domain_error);
}

TEST(TruncationSeries6, Examples) {
    const auto imp = truncation_series6(preset6("improved6"));
    for (int k = 0; k < 4; ++k) EXPECT_EQ(imp[k], Rational(0)) << "h^" << 6 + 2 * k;
    EXPECT_NE(imp[4], Rational(0));

    const auto col1 = truncation_series6(preset6("table5-col1"));
    EXPECT_EQ(col1[0], Rational(0));
    EXPECT_EQ(col1[1], Rational(23, 40));

    const auto zero = truncation_series6(
        CoefficientSet6(Rational(0), Rational(0), Rational(0), Rational(0), unchecked));
    EXPECT_EQ(zero[0], Rational(-1));
}

TEST(TruncationSeries6, MatchesExactTaylorResidualOfInteriorRelation) {
    // bracket k multiplies h^(6+2k) y^(6+2k); with h = 1 and a centred monomial
    // t^d/d! only the bracket with 6+2k = d survives.
    for (const char* name : kPresets) {
        const CoefficientSet6 s = preset6(name);
        const std::array<Rational, 7> w{s.alpha(), s.beta(), s.gamma(), s.delta(), s.gamma(), s.beta(), s.alpha()};
        const StencilRow row = consistency_row(-3, w);
        const auto series = truncation_series6(s);
        for (int k = 0; k < 6; ++k)
            EXPECT_EQ(oracle::taylor_residual(row, 6, 6 + 2 * k), oracle::exact(series[k])) << name << " k=" << k;
        for (int d : {0, 1, 2, 3, 4, 5, 7, 9}) EXPECT_EQ(oracle::taylor_residual(row, 6, d), 0) << name << " d=" << d;
    }
}

TEST(DeriveParameters6, ExactValues) {
    auto check = [](int order, Rational a, Rational b, Rational g, Rational d) {
        const CoefficientSet6 s = derive_parameters6(order);
        EXPECT_EQ(s.alpha(), a) << order;
        EXPECT_EQ(s.beta(), b) << order;
        EXPECT_EQ(s.gamma(), g) << order;
        EXPECT_EQ(s.delta(), d) << order;
    };
    check(8, Rational(1, 30240), Rational(41, 5040), Rational(2189, 10080), Rational(4153, 7560));
    check(6, Rational(0), Rational(1, 120), Rational(13, 60), Rational(11, 20));
    check(4, Rational(0), Rational(1, 16), Rational(0), Rational(7, 8));
    check(2, Rational(0), Rational(0), Rational(1, 4), Rational(1, 2));
    EXPECT_THROW(derive_parameters6(3), std::invalid_argument);
    EXPECT_THROW(derive_parameters6(10), std::invalid_argument);
}

TEST(DeriveParameters6, CancelsTheRequestedBrackets) {
    for (int order : {2, 4, 6, 8}) {
        const auto series = truncation_series6(derive_parameters6(order));
        for (int k = 0; k < order / 2; ++k) EXPECT_EQ(series[k], Rational(0)) << order << " k=" << k;
        // the order-2 tie-break happens to cancel the h^8 bracket as well
        if (order > 2) {
            EXPECT_NE(series[order / 2], Rational(0)) << order;
        }
    }
    EXPECT_EQ(label(preset6("improved6")), derive_parameters6(8).label());
}

TEST(EndConditions6, ExactThroughDegreeSeven) {
    const std::vector<StencilRow> rows = end_conditions6();
    ASSERT_EQ(rows.size(), 5u);
    const std::vector<oracle::Exact> first_failure{oracle::Exact(19, 4), oracle::Exact(221885, 43966),
                                                   oracle::Exact(11205595, 1870428),
                                                   oracle::Exact(541031731, 43914388),
                                                   oracle::Exact(1068761292, 44930599)};
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (int deg = 0; deg < 8; ++deg) EXPECT_EQ(oracle::taylor_residual(rows[r], 6, deg), 0) << "row " << r;
        EXPECT_EQ(oracle::taylor_residual(rows[r], 6, 8), first_failure[r]) << "row " << r;
    }
}

TEST(AssembleSystem6, RowsByHand) {
    const HighOrderIVP ivp = builtin_case(3).ivp;  // f = -1
    const double h6 = std::pow(1.0 / 8, 6);
    const DenseSystem s = assemble_system6(ivp, 8, preset6("table5-col1"));
    EXPECT_EQ(s.size(), 8);
    // consistency row i = 6 at its centre y_3
    EXPECT_NEAR(s.matrix(5, 2), -20.0 - h6 * 28.0 / 120, 1e-14);
    EXPECT_NEAR(s.matrix(5, 5), 1.0 - h6 / 120, 1e-15);
    EXPECT_EQ(s.matrix(5, 6), 0.0);
    // second end row at y_1
    EXPECT_NEAR(s.matrix(1, 0), 797790.0 / 21983 - (1 + 40167.0 / 21983) * h6, 1e-12);
}

TEST(AssembleSystem6, Preconditions) {
    EXPECT_THROW(assemble_system6(builtin_case(3).ivp, 7, preset6("improved6")), std::invalid_argument);
    EXPECT_THROW(assemble_system6(builtin_case(1).ivp, 8, preset6("improved6")), std::invalid_argument);
    const DenseSystem z = assemble_system6(homogeneous6(), 10, preset6("improved6"));
    EXPECT_EQ(z.rhs.lpNorm<Eigen::Infinity>(), 0.0);
}

TEST(Solve6, ZeroProblem) {
    const GridSolution sol = solve6(homogeneous6(), 16, preset6("improved6"));
    ASSERT_EQ(sol.y.size(), 17u);
    for (double v : sol.y) EXPECT_EQ(v, 0.0);
}

TEST(Solve6, TableFiveCell) {
    const AnalyticCase c = builtin_case(3);
    const double e = max_abs_error(solve6(c.ivp, 16, preset6("table5-col1")), c.exact);
    EXPECT_NEAR(e, 7.50e-5, 0.01e-5);
}

TEST(Solve6, ExactForQuintics) {
    HighOrderIVP ivp = homogeneous6();
    const Expression y = parse("0.5-t+2*t^2-t^3+0.25*t^4-0.3*t^5");
    ivp.u.clear();
    for (unsigned k = 0; k < 6; ++k) ivp.u.push_back(evaluate(differentiate(y, k), ivp.a));
    for (const char* name : kPresets)
        for (int n : {8, 13, 16}) EXPECT_LE(max_abs_error(solve6(ivp, n, preset6(name)), y), 1e-9) << name << " n=" << n;
}

TEST(Solve6, TableFiveSetsConvergeAtLeastSecondOrder) {
    for (const char* name : {"table5-col1", "table5-col2", "table5-col3"}) {
        const std::vector<double> slopes = convergence_order(builtin_case(3), preset6(name), {16, 32, 64});
        for (double s : slopes) EXPECT_GE(s, 1.8) << name;
    }
}
