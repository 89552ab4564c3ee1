#pragma once

#include <string>
#include <vector>

#include "nlosc/expr.hpp"

namespace nlosc {

/// y^(order) + f(t) y = g(t) on [a, b], with y^(k)(a) = u[k] for k < order.
struct HighOrderIVP {
    int order = 0;
    Expression f;
    Expression g;
    double a = 0.0;
    double b = 1.0;
    std::vector<double> u;

    /// Throws std::invalid_argument unless order is even and >= 2,
    /// u.size() == order, and a < b.
    void validate() const;
};

/// Approximate solution values on the uniform grid t_i = a + i h, i = 0..n.
struct GridSolution {
    std::vector<double> t;
    std::vector<double> y;
    std::string method;
    int n = 0;
    double h = 0.0;
};

/// t_i = a + i*(b-a)/n, computed without accumulation.
std::vector<double> uniform_grid(double a, double b, int n);

}  // namespace nlosc
