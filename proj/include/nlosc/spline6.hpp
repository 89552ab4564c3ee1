#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "nlosc/ivp.hpp"
#include "nlosc/linsys.hpp"
#include "nlosc/rational.hpp"
#include "nlosc/spline4.hpp"
#include "nlosc/stencil.hpp"

namespace nlosc {

/// Weights (alpha, beta, gamma, delta) of the seven-point sixth-order
/// consistency relation. The checked constructor enforces
/// alpha + beta + gamma + delta/2 = 1/2 exactly.
class CoefficientSet6 {
public:
    CoefficientSet6(Rational alpha, Rational beta, Rational gamma, Rational delta);
    CoefficientSet6(Rational alpha, Rational beta, Rational gamma, Rational delta, Unchecked);

    const Rational& alpha() const noexcept { return alpha_; }
    const Rational& beta() const noexcept { return beta_; }
    const Rational& gamma() const noexcept { return gamma_; }
    const Rational& delta() const noexcept { return delta_; }

    std::string label() const;

private:
    Rational alpha_, beta_, gamma_, delta_;
};

/// Named presets: "table5-col1" (1/120,15/120,1/4,28/120), "table5-col2"
/// (1/720,1/36,219/720,240/720), "table5-col3" (1/5040,6/504,1250/5040,2418/5040),
/// "improved6" (1/30240,41/5040,2189/10080,4153/7560), and the canonical
/// derived sets "derived6-h4" and "derived6-h6".
CoefficientSet6 preset6(std::string_view name);

struct ThetaCoefficients6 {
    double alpha, beta, gamma, delta;
    double defect;  ///< alpha + beta + gamma + delta/2 - 1/2
};

/// Evaluates the trigonometric weight formulas as given, no correction; domain
/// 1e-2 < theta < pi - 1e-2.
ThetaCoefficients6 theta_coefficients6(double theta);

/// The five end-condition rows.
std::vector<StencilRow> end_conditions6();

/// n x n system: five end-condition rows then the consistency relation for
/// i = 6..n. Requires ivp.order == 6 and n >= 8.
DenseSystem assemble_system6(const HighOrderIVP& ivp, int n, const CoefficientSet6& set);

GridSolution solve6(const HighOrderIVP& ivp, int n, const CoefficientSet6& set);

/// Bracket coefficients of h^6, h^8, ..., h^16 in the interior local
/// truncation error series.
std::array<Rational, 6> truncation_series6(const CoefficientSet6& set);

/// Exact weights that cancel the leading truncation brackets for a method of
/// the given order (2, 4, 6 or 8). Free parameters are fixed by the
/// canonical tie-break: alpha = 0 for orders 4 and 6, additionally gamma = 0
/// for order 4, and alpha = beta = 0, gamma = 1/4 for order 2. Order 8 is
/// fully determined.
CoefficientSet6 derive_parameters6(int target_order);

}  // namespace nlosc
