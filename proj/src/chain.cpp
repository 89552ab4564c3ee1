#include "nlosc/chain.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace nlosc {

namespace {

// y_N^(m) written as sum p_k y_k + sum v_k y_k' + sum c[k][j] g_k^(j).
struct Combination {
    std::vector<double> p, v;
    std::vector<std::vector<double>> c;
};

// Coefficients of y_N^(m) for m = 0..2N.
std::vector<Combination> expand(const OscillatorChain& chain) {
    const int n = chain.size();
    const auto& w = chain.omegas();
    Combination cur{std::vector<double>(n, 0.0), std::vector<double>(n, 0.0),
                    std::vector<std::vector<double>>(n, std::vector<double>(2 * n, 0.0))};
    cur.p[n - 1] = 1.0;
    std::vector<Combination> out{cur};
    for (int m = 1; m <= 2 * n; ++m) {
        Combination next{std::vector<double>(n, 0.0), cur.p,
                         std::vector<std::vector<double>>(n, std::vector<double>(2 * n, 0.0))};
        for (int k = 0; k < n; ++k) {
            // y_k'' = g_k - omega_k^2 y_{k+1}
            next.p[(k + 1) % n] += -w[k] * w[k] * cur.v[k];
            next.c[k][0] += cur.v[k];
            for (int j = 0; j + 1 < 2 * n; ++j) next.c[k][j + 1] += cur.c[k][j];
        }
        out.push_back(next);
        cur = std::move(next);
    }
    return out;
}

// e, e', ..., e^(count-1), each differentiated from the previous one.
std::vector<Expression> derivatives(const Expression& e, int count) {
    std::vector<Expression> out{e};
    while (static_cast<int>(out.size()) < count) out.push_back(differentiate(out.back()));
    return out;
}

// Fornberg's weights for the order-`deriv` derivative at x0 from samples at
// 0, 1, ..., count-1.
std::vector<double> fd_weights(double x0, int count, int deriv) {
    std::vector<std::vector<double>> c(count, std::vector<double>(deriv + 1, 0.0));
    double c1 = 1.0, c4 = -x0;
    c[0][0] = 1.0;
    for (int i = 1; i < count; ++i) {
        const int mn = std::min(i, deriv);
        double c2 = 1.0;
        const double c5 = c4;
        c4 = i - x0;
        for (int j = 0; j < i; ++j) {
            const double c3 = i - j;
            c2 *= c3;
            if (j == i - 1) {
                for (int k = mn; k >= 1; --k) c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
                c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
            }
            for (int k = mn; k >= 1; --k) c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
            c[j][0] = c4 * c[j][0] / c3;
        }
        c1 = c2;
    }
    std::vector<double> w(count);
    for (int i = 0; i < count; ++i) w[i] = c[i][deriv];
    return w;
}

}  // namespace

OscillatorChain::OscillatorChain(std::vector<double> omegas, std::vector<Expression> forces, double a, double b,
                                 std::vector<double> positions, std::vector<double> velocities)
    : omegas_(std::move(omegas)),
      forces_(std::move(forces)),
      a_(a),
      b_(b),
      positions_(std::move(positions)),
      velocities_(std::move(velocities)) {
    const std::size_t n = omegas_.size();
    if (n < 2) throw std::invalid_argument("chain needs at least 2 oscillators");
    if (forces_.size() != n || positions_.size() != n || velocities_.size() != n)
        throw std::invalid_argument("chain forces, positions and velocities must each have " + std::to_string(n) +
                                    " entries");
    for (std::size_t k = 0; k < n; ++k)
        if (!(omegas_[k] > 0.0) || !std::isfinite(omegas_[k]))
            throw std::invalid_argument("omega_" + std::to_string(k + 1) + " must be positive");
    if (!(a_ < b_)) throw std::invalid_argument("chain interval must satisfy a < b");
}

HighOrderIVP reduce(const OscillatorChain& chain) {
    const int n = chain.size();
    const Combination top = expand(chain).back();

    HighOrderIVP ivp;
    ivp.order = 2 * n;
    ivp.a = chain.a();
    ivp.b = chain.b();
    ivp.f = Expression::constant(-top.p[n - 1]);

    std::vector<std::vector<Expression>> gd(n);
    for (int k = 0; k < n; ++k) gd[k] = derivatives(chain.forces()[k], 2 * n - 1);
    Expression g;
    for (int j = 2 * n - 2; j >= 0; --j) {
        for (int k = 0; k < n; ++k) {
            const double c = top.c[k][j];
            if (c == 0.0 || chain.forces()[k].is_constant(0.0)) continue;
            g = g + Expression::constant(c) * gd[k][j];
        }
    }
    ivp.g = g;
    ivp.u = initial_derivatives(chain);
    return ivp;
}

std::vector<double> initial_derivatives(const OscillatorChain& chain) {
    const int n = chain.size();
    const std::vector<Combination> rows = expand(chain);
    // g_k^(j)(a)
    std::vector<std::vector<double>> gd(n, std::vector<double>(2 * n, 0.0));
    for (int k = 0; k < n; ++k) {
        const std::vector<Expression> d = derivatives(chain.forces()[k], 2 * n - 1);
        for (int j = 0; j < 2 * n - 1; ++j) gd[k][j] = evaluate(d[j], chain.a());
    }
    std::vector<double> u(2 * n, 0.0);
    for (int m = 0; m < 2 * n; ++m) {
        const Combination& r = rows[m];
        double s = 0.0;
        for (int k = 0; k < n; ++k) {
            s += r.p[k] * chain.positions()[k] + r.v[k] * chain.velocities()[k];
            for (int j = 0; j < 2 * n; ++j)
                if (r.c[k][j] != 0.0) s += r.c[k][j] * gd[k][j];
        }
        u[m] = s;
    }
    return u;
}

std::vector<double> grid_second_derivative(const std::vector<double>& y, double h) {
    const int m = static_cast<int>(y.size());
    if (m < 5) throw std::invalid_argument("second derivative stencil needs at least 5 grid points");
    const int width = std::min(m, 6);
    std::vector<double> d(m);
    for (int i = 0; i < m; ++i) {
        // centred five points where they fit, otherwise the `width` points
        // nearest the boundary
        int first = i - 2, count = 5;
        if (i < 2 || i > m - 3) {
            count = width;
            first = i < 2 ? 0 : m - width;
        }
        const std::vector<double> w = fd_weights(static_cast<double>(i - first), count, 2);
        double s = 0.0;
        for (int k = 0; k < count; ++k) s += w[k] * y[first + k];
        d[i] = s / (h * h);
    }
    return d;
}

TrajectorySet recover_trajectories(const OscillatorChain& chain, const GridSolution& sol) {
    if (sol.n < 4) throw std::invalid_argument("trajectory recovery needs n >= 4, got " + std::to_string(sol.n));
    if (sol.y.size() != static_cast<std::size_t>(sol.n) + 1 || sol.t.size() != sol.y.size())
        throw std::invalid_argument("grid solution arrays must have n + 1 entries");
    const int n = chain.size();
    TrajectorySet out;
    out.t = sol.t;
    out.y.assign(n, {});
    out.y[n - 1] = sol.y;

    auto next_from = [&](int k) {
        // oscillator k drives y_{k+1}: y_{k+1} = (g_k - y_k'') / omega_k^2
        const std::vector<double> d2 = grid_second_derivative(out.y[k], sol.h);
        const double w2 = chain.omegas()[k] * chain.omegas()[k];
        std::vector<double> r(out.t.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = (evaluate(chain.forces()[k], out.t[i]) - d2[i]) / w2;
        return r;
    };
    out.y[0] = next_from(n - 1);
    for (int k = 0; k + 2 < n; ++k) out.y[k + 1] = next_from(k);
    return out;
}

}  // namespace nlosc
