#include "nlosc/spline6.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace nlosc {

namespace {

using R = Rational;

void require_normalized6(const R& a, const R& b, const R& g, const R& d) {
    if (a + b + g + d / R(2) != R(1, 2))
        throw std::invalid_argument("coefficient set violates alpha + beta + gamma + delta/2 = 1/2: (" +
                                    a.to_string() + ", " + b.to_string() + ", " + g.to_string() + ", " +
                                    d.to_string() + ")");
}

// Rows of the interior truncation series, as coefficients of
// (1, alpha, beta, gamma, delta) inside each bracket, and the bracket scale.
struct Bracket {
    R scale;
    std::array<std::int64_t, 5> terms;
};

constexpr int kBrackets = 6;

const std::array<Bracket, kBrackets>& brackets() {
    static const std::array<Bracket, kBrackets> table{{
        {R(1), {-1, 2, 2, 2, 1}},
        {R(1, 4), {-1, 36, 16, 4, 0}},
        {R(1, 240), {-7, 1620, 320, 20, 0}},
        {R(1, 7560), {-16, 15309, 1344, 21, 0}},
        {R(1, 120960), {-13, 39366, 1536, 6, 0}},
        {R(1, 159667200), {-651, 5196312, 90112, 88, 0}},
    }};
    return table;
}

}  // namespace

CoefficientSet6::CoefficientSet6(Rational alpha, Rational beta, Rational gamma, Rational delta)
    : alpha_(alpha), beta_(beta), gamma_(gamma), delta_(delta) {
    require_normalized6(alpha_, beta_, gamma_, delta_);
}

CoefficientSet6::CoefficientSet6(Rational alpha, Rational beta, Rational gamma, Rational delta, Unchecked)
    : alpha_(alpha), beta_(beta), gamma_(gamma), delta_(delta) {}

std::string CoefficientSet6::label() const {
    return "spline6(" + alpha_.to_string() + "," + beta_.to_string() + "," + gamma_.to_string() + "," +
           delta_.to_string() + ")";
}

CoefficientSet6 preset6(std::string_view name) {
    if (name == "table5-col1") return {R(1, 120), R(15, 120), R(1, 4), R(28, 120)};
    if (name == "table5-col2") return {R(1, 720), R(1, 36), R(219, 720), R(240, 720)};
    if (name == "table5-col3") return {R(1, 5040), R(6, 504), R(1250, 5040), R(2418, 5040)};
    if (name == "improved6") return {R(1, 30240), R(41, 5040), R(2189, 10080), R(4153, 7560)};
    if (name == "derived6-h4") return derive_parameters6(4);
    if (name == "derived6-h6") return derive_parameters6(6);
    throw std::invalid_argument("unknown sixth-order coefficient preset '" + std::string(name) + "'");
}

ThetaCoefficients6 theta_coefficients6(double theta) {
    if (!(theta > 1e-2 && theta < std::numbers::pi - 1e-2))
        throw std::domain_error("theta_coefficients6: theta must lie in (1e-2, pi - 1e-2)");
    const double s = std::sin(theta);
    const double c = std::cos(theta);
    const double t3 = theta * theta * theta;
    const double t5 = t3 * theta * theta;
    const double t6 = t5 * theta;
    ThetaCoefficients6 r{};
    r.alpha = (theta - s) / (t6 * s) - 1.0 / (6.0 * t3 * s) + 1.0 / (12.0 * theta * s);
    r.beta = 6.0 / t6 - 2.0 * (c + 2.0) / (t5 * s) + (c - 1.0) / (3.0 * t3 * s) - (c - 13.0) / (60.0 * theta * s);
    r.gamma = (8.0 * c + 7.0) / (t5 * s) - 15.0 / t6 + (4.0 * c + 5.0) / (6.0 * t3 * s) -
              (52.0 * c - 67.0) / (120.0 * theta * s);
    r.delta = 20.0 / t6 - 2.0 * (6.0 * c + 4.0) / (t5 * s) - 2.0 * (3.0 * c + 1.0) / (3.0 * t3 * s) -
              (33.0 * c - 13.0) / (30.0 * theta * s);
    r.defect = r.alpha + r.beta + r.gamma + r.delta / 2.0 - 0.5;
    return r;
}

std::vector<StencilRow> end_conditions6() {
    return {
        // L0 + L4
        StencilRow{{{0, 1}, {4, 1}},
                   {{0, R(2905, 12)}, {1, -336}, {2, 126}, {3, R(-112, 3)}, {4, R(21, 4)}},
                   {{1, 175}, {2, 42}},
                   {{0, R(-4, 5)}}},
        // L1 + L5, with the h^6 y_1^(6) term of the bracket
        StencilRow{{{1, 1}, {5, 1}},
                   {{1, R(797790, 21983)},
                    {2, R(-1660890, 21983)},
                    {3, R(1299060, 21983)},
                    {4, R(-523110, 21983)},
                    {5, R(87150, 21983)}},
                   {{1, R(283500, 21983)}, {2, R(172620, 21983)}},
                   {{1, R(-40167, 21983)}}},
        // L2 + L6
        StencilRow{{{2, 1}, {6, 1}},
                   {{2, R(605725, 22267)},
                    {3, R(-108239440, 1803627)},
                    {4, R(1103910, 22267)},
                    {5, R(-446800, 22267)},
                    {6, R(5949805, 1803627)}},
                   {{1, R(675200, 85887)}, {2, R(700180, 66801)}, {3, R(851440, 200403)}},
                   {}},
        // L3 + L7
        StencilRow{{{3, 1}, {7, 1}},
                   {{3, R(-670672000, 42346017)},
                    {4, R(44149995, 1568371)},
                    {5, R(-23862240, 1568371)},
                    {6, R(122902615, 42346017)}},
                   {{1, R(-12961750, 2016477)},
                    {2, R(-25078370, 1568371)},
                    {3, R(-77684300, 4705113)},
                    {4, R(-11492010, 1568371)}},
                   {}},
        // L4 + L8
        StencilRow{{{4, 1}, {8, 1}},
                   {{4, R(49567095, 12837314)}, {5, R(-34289280, 6418657)}, {6, R(19011465, 12837314)}},
                   {{1, R(2182545, 916951)},
                    {2, R(59244435, 6418657)},
                    {3, R(107795790, 6418657)},
                    {4, R(115282605, 6418657)},
                    {5, R(65492262, 6418657)}},
                   {}},
    };
}

DenseSystem assemble_system6(const HighOrderIVP& ivp, int n, const CoefficientSet6& set) {
    if (ivp.order != 6) throw std::invalid_argument("assemble_system6: ivp.order must be 6");
    if (n < 8) throw std::invalid_argument("assemble_system6: n must be at least 8");
    std::vector<StencilRow> rows = end_conditions6();
    rows.reserve(n);
    const std::array<Rational, 7> w{set.alpha(), set.beta(), set.gamma(), set.delta(),
                                    set.gamma(), set.beta(), set.alpha()};
    for (int i = 6; i <= n; ++i) rows.push_back(consistency_row(i - 6, w));
    return assemble_rows(ivp, n, rows);
}

GridSolution solve6(const HighOrderIVP& ivp, int n, const CoefficientSet6& set) {
    const Eigen::VectorXd y = lu_solve(assemble_system6(ivp, n, set));
    GridSolution sol;
    sol.t = uniform_grid(ivp.a, ivp.b, n);
    sol.y.resize(sol.t.size());
    sol.y[0] = ivp.u[0];
    for (int i = 1; i <= n; ++i) sol.y[i] = y(i - 1);
    sol.method = set.label();
    sol.n = n;
    sol.h = (ivp.b - ivp.a) / n;
    return sol;
}

std::array<Rational, 6> truncation_series6(const CoefficientSet6& set) {
    const std::array<Rational, 5> x{R(1), set.alpha(), set.beta(), set.gamma(), set.delta()};
    std::array<Rational, 6> out;
    for (int k = 0; k < kBrackets; ++k) {
        Rational acc(0);
        for (int j = 0; j < 5; ++j) acc += Rational(brackets()[k].terms[j]) * x[j];
        out[k] = brackets()[k].scale * acc;
    }
    return out;
}

CoefficientSet6 derive_parameters6(int target_order) {
    if (target_order != 2 && target_order != 4 && target_order != 6 && target_order != 8)
        throw std::invalid_argument("derive_parameters6: target order must be 2, 4, 6 or 8");
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    // Kill the first target_order/2 brackets: sum terms[1..4] x = -terms[0].
    for (int k = 0; k < target_order / 2; ++k) {
        const auto& t = brackets()[k].terms;
        a.push_back({R(t[1]), R(t[2]), R(t[3]), R(t[4])});
        b.push_back(R(-t[0]));
    }
    auto pin = [&](int column, Rational value) {
        std::vector<Rational> row(4, R(0));
        row[column] = R(1);
        a.push_back(row);
        b.push_back(value);
    };
    switch (target_order) {
        case 2:
            pin(0, R(0));
            pin(1, R(0));
            pin(2, R(1, 4));
            break;
        case 4:
            pin(0, R(0));
            pin(2, R(0));
            break;
        case 6: pin(0, R(0)); break;
        default: break;
    }
    const std::vector<Rational> x = solve_exact(a, b);
    return CoefficientSet6(x[0], x[1], x[2], x[3]);
}

}  // namespace nlosc
