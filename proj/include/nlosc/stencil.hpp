#pragma once

#include <span>
#include <vector>

#include "nlosc/ivp.hpp"
#include "nlosc/linsys.hpp"
#include "nlosc/rational.hpp"

namespace nlosc {

struct StencilTerm {
    int index;
    Rational coefficient;
};

/// A linear relation between grid values y_j and the values D_j of the
/// order-p derivative at grid points, written in the form
///
///   sum_j lhs[j] D_j = h^-p [ sum_j values[j] y_j
///                            + sum_k initial[k] h^k y_0^(k)
///                            + sum_j bracket[j] h^p D_j ]
///
/// which covers both the interior consistency relations and the end
/// conditions. Indices in `initial` are derivative orders 1..p-1; the order-p
/// derivative at t_0 appears as bracket index 0.
struct StencilRow {
    std::vector<StencilTerm> lhs;
    std::vector<StencilTerm> values;
    std::vector<StencilTerm> initial;
    std::vector<StencilTerm> bracket;
};

/// The interior relation sum_k weights[k] h^p D_{first+k} = Delta^p y_first,
/// with Delta^p the p-th forward difference (binomial coefficients with
/// alternating signs) and p = weights.size() - 1.
StencilRow consistency_row(int first, std::span<const Rational> weights);

/// Builds the n x n system in the unknowns y_1..y_n from one row per
/// equation. Every D_j is replaced by g(t_j) - f(t_j) y_j; y_0 and the
/// initial derivatives come from ivp.u, and D_0 from the ODE at t_0. Each
/// equation is multiplied through by h^p.
DenseSystem assemble_rows(const HighOrderIVP& ivp, int n, std::span<const StencilRow> rows);

}  // namespace nlosc
