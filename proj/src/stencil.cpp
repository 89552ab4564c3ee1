#include "nlosc/stencil.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace nlosc {

void HighOrderIVP::validate() const {
    if (order < 2 || order % 2 != 0)
        throw std::invalid_argument("ivp.order must be an even integer >= 2, got " + std::to_string(order));
    if (static_cast<int>(u.size()) != order)
        throw std::invalid_argument("ivp.u must hold " + std::to_string(order) + " initial derivatives, got " +
                                    std::to_string(u.size()));
    if (!(a < b)) throw std::invalid_argument("ivp interval must satisfy a < b");
}

std::vector<double> uniform_grid(double a, double b, int n) {
    if (n < 1) throw std::invalid_argument("uniform_grid: n must be positive");
    const double h = (b - a) / n;
    std::vector<double> t(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) t[i] = a + i * h;
    return t;
}

StencilRow consistency_row(int first, std::span<const Rational> weights) {
    const int p = static_cast<int>(weights.size()) - 1;
    if (p < 1) throw std::invalid_argument("consistency_row: need at least two weights");
    StencilRow row;
    std::int64_t binom = 1;
    for (int k = 0; k <= p; ++k) {
        const std::int64_t sign = (p - k) % 2 == 0 ? 1 : -1;
        row.values.push_back({first + k, Rational(sign * binom)});
        binom = binom * (p - k) / (k + 1);
        row.lhs.push_back({first + k, weights[k]});
    }
    return row;
}

DenseSystem assemble_rows(const HighOrderIVP& ivp, int n, std::span<const StencilRow> rows) {
    ivp.validate();
    if (static_cast<int>(rows.size()) != n)
        throw std::invalid_argument("assemble_rows: need exactly n rows");
    const int p = ivp.order;
    const double h = (ivp.b - ivp.a) / n;
    const double hp = std::pow(h, p);
    const std::vector<double> t = uniform_grid(ivp.a, ivp.b, n);

    std::vector<double> f(t.size()), g(t.size());
    for (std::size_t j = 0; j < t.size(); ++j) {
        f[j] = evaluate(ivp.f, t[j]);
        g[j] = evaluate(ivp.g, t[j]);
    }
    const double y0 = ivp.u[0];
    const double d0 = g[0] - f[0] * y0;

    DenseSystem sys(n);
    auto check = [n](int j) {
        if (j < 0 || j > n) throw std::invalid_argument("assemble_rows: stencil index outside the grid");
    };
    // Scaled form: sum c_j y_j + sum b_k h^k u_k + h^p sum w_j D_j = 0 with
    // w = bracket - lhs and D_j = g_j - f_j y_j.
    auto add_derivative = [&](int r, int j, double w) {
        check(j);
        if (j == 0) {
            sys.rhs(r) -= w * hp * d0;
        } else {
            sys.matrix(r, j - 1) -= w * hp * f[j];
            sys.rhs(r) -= w * hp * g[j];
        }
    };
    for (int r = 0; r < n; ++r) {
        const StencilRow& row = rows[r];
        for (const auto& [j, c] : row.values) {
            check(j);
            if (j == 0)
                sys.rhs(r) -= c.to_double() * y0;
            else
                sys.matrix(r, j - 1) += c.to_double();
        }
        for (const auto& [k, c] : row.initial) {
            if (k < 1 || k >= p) throw std::invalid_argument("assemble_rows: initial derivative order out of range");
            sys.rhs(r) -= c.to_double() * std::pow(h, k) * ivp.u[k];
        }
        for (const auto& [j, c] : row.bracket) add_derivative(r, j, c.to_double());
        for (const auto& [j, c] : row.lhs) add_derivative(r, j, -c.to_double());
    }
    return sys;
}

}  // namespace nlosc
