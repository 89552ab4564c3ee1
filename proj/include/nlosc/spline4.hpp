#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "nlosc/ivp.hpp"
#include "nlosc/linsys.hpp"
#include "nlosc/rational.hpp"
#include "nlosc/stencil.hpp"

namespace nlosc {

/// Which three boundary relations close the fourth-order system: the
/// standard ones (truncation O(h^6)) or the improved ones (O(h^10)).
enum class EndVariant { Standard, Improved };

std::string to_string(EndVariant v);

/// Tag that skips the normalization check of a coefficient set.
struct Unchecked {};
inline constexpr Unchecked unchecked{};

/// Weights (alpha, beta, gamma) of the five-point fourth-order consistency
/// relation, plus the end-condition variant to pair them with. The checked
/// constructor enforces 2 alpha + 2 beta + gamma = 1 exactly.
class CoefficientSet4 {
public:
    CoefficientSet4(Rational alpha, Rational beta, Rational gamma, EndVariant variant = EndVariant::Standard);
    CoefficientSet4(Rational alpha, Rational beta, Rational gamma, EndVariant variant, Unchecked);

    const Rational& alpha() const noexcept { return alpha_; }
    const Rational& beta() const noexcept { return beta_; }
    const Rational& gamma() const noexcept { return gamma_; }
    EndVariant variant() const noexcept { return variant_; }

    /// e.g. "spline4-improved(-1/720,31/180,79/120)"
    std::string label() const;

private:
    Rational alpha_, beta_, gamma_;
    EndVariant variant_;
};

/// Named coefficient presets: "table1-col1" (0,0,1), "table1-col2"
/// (1/2,1/2,-1), "table1-col3" (1/6,1/6,1/3) and "improved4"
/// (-1/720,31/180,79/120). Throws std::invalid_argument for unknown names.
CoefficientSet4 preset4(std::string_view name, EndVariant variant);

struct ThetaCoefficients4 {
    double alpha, beta, gamma;
    double defect;  ///< 2 alpha + 2 beta + gamma - 1
};

/// Evaluates the trigonometric (alpha, beta, gamma) formulas of the
/// non-polynomial spline for theta = omega h. The beta term
/// (cos(theta) - 2)/(3 theta) is kept without a sin(theta) divisor, so the
/// normalization defect is generally nonzero. Domain: 1e-2 < theta < pi - 1e-2.
ThetaCoefficients4 theta_coefficients4(double theta);

/// The three end-condition rows of the selected variant.
std::vector<StencilRow> end_conditions4(EndVariant variant);

/// n x n system in y_1..y_n: three end-condition rows, then the consistency
/// relation for i = 4..n. Requires ivp.order == 4 and n >= 6.
DenseSystem assemble_system4(const HighOrderIVP& ivp, int n, const CoefficientSet4& set);

GridSolution solve4(const HighOrderIVP& ivp, int n, const CoefficientSet4& set);

struct LeadingTerm {
    int power;              ///< exponent of h
    Rational coefficient;   ///< multiplies h^power y^(power)
};

/// Leading local truncation term of the interior relation:
/// (1/6)(-1 + 24 alpha + 6 beta) h^6 y^(6), or, when that vanishes,
/// (1/30240)(-17 + 5376 alpha + 84 beta) h^10 y^(10).
LeadingTerm truncation_leading4(const CoefficientSet4& set);

}  // namespace nlosc
