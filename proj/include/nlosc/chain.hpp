#pragma once

#include <vector>

#include "nlosc/expr.hpp"
#include "nlosc/ivp.hpp"

namespace nlosc {

/// Ring of N oscillators where oscillator k is driven by the position of
/// oscillator k+1 (and N by 1):
///
///   y_k'' + omega_k^2 y_{k+1} = g_k(t),   k = 1..N (cyclic).
///
/// Vectors are 0-based: omegas[0] is omega_1.
class OscillatorChain {
public:
    OscillatorChain(std::vector<double> omegas, std::vector<Expression> forces, double a, double b,
                    std::vector<double> positions, std::vector<double> velocities);

    int size() const noexcept { return static_cast<int>(omegas_.size()); }
    const std::vector<double>& omegas() const noexcept { return omegas_; }
    const std::vector<Expression>& forces() const noexcept { return forces_; }
    double a() const noexcept { return a_; }
    double b() const noexcept { return b_; }
    const std::vector<double>& positions() const noexcept { return positions_; }
    const std::vector<double>& velocities() const noexcept { return velocities_; }

private:
    std::vector<double> omegas_;
    std::vector<Expression> forces_;
    double a_, b_;
    std::vector<double> positions_;
    std::vector<double> velocities_;
};

/// Eliminates oscillators 1..N-1 and returns the order-2N equation
/// y_N^(2N) + f y_N = g with f = (-1)^(N+1) prod omega_k^2 and g a
/// combination of force derivatives, highest derivative first.
HighOrderIVP reduce(const OscillatorChain& chain);

/// y_N^(m)(a) for m = 0..2N-1.
std::vector<double> initial_derivatives(const OscillatorChain& chain);

struct TrajectorySet {
    std::vector<double> t;
    std::vector<std::vector<double>> y;  ///< y[k][i] is oscillator k+1 at t_i
};

/// Copies y_N from sol and walks the ring backwards to recover the other
/// oscillators, y_{k+1} = (g_k - y_k'') / omega_k^2, with grid second
/// derivatives from grid_second_derivative. Each step of the walk costs two
/// orders of h, so the neighbour next to y_N is O(h^4) and the one after it
/// O(h^2). Throws std::invalid_argument if sol.n < 4 or the grid does not
/// match.
TrajectorySet recover_trajectories(const OscillatorChain& chain, const GridSolution& sol);

/// Second derivative of grid values with spacing h, fourth-order accurate:
/// centred five-point differences inside and six-point one-sided stencils
/// at the two points nearest each end. With only five points (n = 4) the
/// end stencils use five points and are third order.
std::vector<double> grid_second_derivative(const std::vector<double>& y, double h);

}  // namespace nlosc
