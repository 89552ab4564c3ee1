#include "nlosc/spline4.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace nlosc {

namespace {

using R = Rational;

void require_normalized4(const R& a, const R& b, const R& g) {
    if (R(2) * a + R(2) * b + g != R(1))
        throw std::invalid_argument("coefficient set violates 2*alpha + 2*beta + gamma = 1: (" + a.to_string() +
                                    ", " + b.to_string() + ", " + g.to_string() + ")");
}

std::vector<StencilRow> standard_rows() {
    return {
        // N0 + N4
        StencilRow{{{0, 1}, {4, 1}},
                   {{0, R(-220, 9)}, {1, 40}, {2, -20}, {3, R(40, 9)}},
                   {{1, R(-40, 3)}},
                   {{0, R(-4, 3)}}},
        // N1 + N5
        StencilRow{{{1, 1}, {5, 1}},
                   {{1, R(18336, 575)}, {2, R(-22992, 575)}, {3, R(4656, 575)}},
                   {{1, R(2736, 115)}, {2, R(15864, 575)}, {3, R(6648, 575)}},
                   {}},
        // N2 + N6
        StencilRow{{{2, 1}, {6, 1}},
                   {{2, R(8157, 865)}, {3, R(-11424, 865)}, {4, R(3267, 865)}},
                   {{1, R(978, 173)}, {2, R(8958, 865)}, {3, R(5684, 865)}},
                   {}},
    };
}

std::vector<StencilRow> improved_rows() {
    constexpr std::int64_t d1 = 2081, e1 = 18729, f1 = 6243;
    constexpr std::int64_t d2 = 158360705, e2 = 31672141;
    constexpr std::int64_t d3 = 1252977040745, e3 = 250595408149;
    return {
        StencilRow{{{0, 1}, {1, R(843268, d1)}, {2, R(330342, d1)}, {3, R(-16892, d1)}, {4, 1}},
                   {{0, R(-68397280, e1)}, {1, R(13366080, d1)}, {2, R(-7408800, d1)}, {3, R(14781760, e1)}},
                   {{1, R(-10427200, f1)}, {2, R(743680, d1)}, {3, R(259840, d1)}},
                   {}},
        StencilRow{{{1, 1},
                    {2, R(-156090207332, d2)},
                    {3, R(-40456201386, d2)},
                    {4, R(-600708692, d2)},
                    {5, 1}},
                   {{1, R(180155114496, e2)},
                    {2, R(-340726283352, e2)},
                    {3, R(210168798336, e2)},
                    {4, R(-49597629480, e2)}},
                   {{1, R(69181575120, e2)}, {2, R(42396452784, e2)}, {3, R(7557647328, e2)}},
                   {}},
        StencilRow{{{2, 1},
                    {3, R(-85514900495708, d3)},
                    {4, R(3759590586966, d3)},
                    {5, R(-7418340285788, d3)},
                    {6, 1}},
                   {{2, R(43463161469952, e3)},
                    {3, R(-94491207986112, e3)},
                    {4, R(68699611790208, e3)},
                    {5, R(-17671565274048, e3)}},
                   {{1, R(10106680227840, e3)}, {2, R(9581784601536, e3)}, {3, R(2621304758016, e3)}},
                   {}},
    };
}

}  // namespace

std::string to_string(EndVariant v) { return v == EndVariant::Standard ? "standard" : "improved"; }

CoefficientSet4::CoefficientSet4(Rational alpha, Rational beta, Rational gamma, EndVariant variant)
    : alpha_(alpha), beta_(beta), gamma_(gamma), variant_(variant) {
    require_normalized4(alpha_, beta_, gamma_);
}

CoefficientSet4::CoefficientSet4(Rational alpha, Rational beta, Rational gamma, EndVariant variant, Unchecked)
    : alpha_(alpha), beta_(beta), gamma_(gamma), variant_(variant) {}

std::string CoefficientSet4::label() const {
    return "spline4-" + to_string(variant_) + "(" + alpha_.to_string() + "," + beta_.to_string() + "," +
           gamma_.to_string() + ")";
}

CoefficientSet4 preset4(std::string_view name, EndVariant variant) {
    if (name == "table1-col1") return {R(0), R(0), R(1), variant};
    if (name == "table1-col2") return {R(1, 2), R(1, 2), R(-1), variant};
    if (name == "table1-col3") return {R(1, 6), R(1, 6), R(1, 3), variant};
    if (name == "improved4") return {R(-1, 720), R(31, 180), R(79, 120), variant};
    throw std::invalid_argument("unknown fourth-order coefficient preset '" + std::string(name) + "'");
}

ThetaCoefficients4 theta_coefficients4(double theta) {
    if (!(theta > 1e-2 && theta < std::numbers::pi - 1e-2))
        throw std::domain_error("theta_coefficients4: theta must lie in (1e-2, pi - 1e-2)");
    const double s = std::sin(theta);
    const double c = std::cos(theta);
    const double t3 = theta * theta * theta;
    const double t4 = t3 * theta;
    ThetaCoefficients4 r{};
    r.alpha = 1.0 / (6.0 * theta * s) - 1.0 / (t3 * s) + 1.0 / t4;
    r.beta = 2.0 * (1.0 + c) / (t3 * s) - (c - 2.0) / (3.0 * theta) - 4.0 / t4;
    r.gamma = -2.0 * (1.0 + 2.0 * c) / (t3 * s) + (1.0 - 4.0 * c) / (3.0 * theta * s) + 6.0 / t4;
    r.defect = 2.0 * r.alpha + 2.0 * r.beta + r.gamma - 1.0;
    return r;
}

std::vector<StencilRow> end_conditions4(EndVariant variant) {
    return variant == EndVariant::Standard ? standard_rows() : improved_rows();
}

DenseSystem assemble_system4(const HighOrderIVP& ivp, int n, const CoefficientSet4& set) {
    if (ivp.order != 4) throw std::invalid_argument("assemble_system4: ivp.order must be 4");
    if (n < 6) throw std::invalid_argument("assemble_system4: n must be at least 6");
    std::vector<StencilRow> rows = end_conditions4(set.variant());
    rows.reserve(n);
    const std::array<Rational, 5> w{set.alpha(), set.beta(), set.gamma(), set.beta(), set.alpha()};
    for (int i = 4; i <= n; ++i) rows.push_back(consistency_row(i - 4, w));
    return assemble_rows(ivp, n, rows);
}

GridSolution solve4(const HighOrderIVP& ivp, int n, const CoefficientSet4& set) {
    const Eigen::VectorXd y = lu_solve(assemble_system4(ivp, n, set));
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

LeadingTerm truncation_leading4(const CoefficientSet4& set) {
    const Rational c6 = Rational(1, 6) * (Rational(-1) + Rational(24) * set.alpha() + Rational(6) * set.beta());
    if (c6 != Rational(0)) return {6, c6};
    const Rational c10 =
        Rational(1, 30240) * (Rational(-17) + Rational(5376) * set.alpha() + Rational(84) * set.beta());
    return {10, c10};
}

}  // namespace nlosc
