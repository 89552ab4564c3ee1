#include "nlosc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace nlosc {

namespace {

AnalyticCase make_case(int id, std::string name, int order, const char* f, const char* g, double a, double b,
                       std::vector<std::string> u_text, const char* exact, std::vector<int> tables) {
    AnalyticCase c;
    c.id = id;
    c.name = std::move(name);
    c.ivp.order = order;
    c.ivp.f = parse(f);
    c.ivp.g = parse(g);
    c.ivp.a = a;
    c.ivp.b = b;
    for (const auto& s : u_text) c.ivp.u.push_back(evaluate(parse(s), 0.0));
    c.u_text = std::move(u_text);
    c.exact = parse(exact);
    c.tables = std::move(tables);
    return c;
}

}  // namespace

std::vector<AnalyticCase> builtin_cases() {
    return {
        make_case(1, "y'''' - y = 4 cos t", 4, "-1", "4*cos(t)", -1.0, 1.0,
                  {"-2*sin(1)", "2*cos(1)+sin(1)", "-2*cos(1)+2*sin(1)", "-2*cos(1)-3*sin(1)"},
                  "(1-t)*sin(t)", {1, 2}),
        make_case(2, "y'''' + t y = -e^t (8 + 7t + t^3)", 4, "t", "-exp(t)*(8+7*t+t^3)", 0.0, 1.0,
                  {"0", "1", "0", "-3"}, "t*(1-t)*exp(t)", {3, 4}),
        make_case(3, "y^(6) - y = -6 e^t", 6, "-1", "-6*exp(t)", 0.0, 1.0, {"1", "0", "-1", "-2", "-3", "-4"},
                  "(1-t)*exp(t)", {5, 6}),
        make_case(4, "y^(6) + y = 6 (2t cos t + 5 sin t)", 6, "1", "6*(2*t*cos(t)+5*sin(t))", -1.0, 1.0,
                  {"0", "2*sin(1)", "-4*cos(1)-2*sin(1)", "6*cos(1)-6*sin(1)", "8*cos(1)+12*sin(1)",
                   "-20*cos(1)+10*sin(1)"},
                  "(t^2-1)*sin(t)", {7, 8}),
    };
}

AnalyticCase builtin_case(int id) {
    if (id < 1 || id > 4) throw std::out_of_range("no built-in case " + std::to_string(id) + " (expected 1..4)");
    return builtin_cases()[id - 1];
}

GridSolution solve(const HighOrderIVP& ivp, int n, const Method& method) {
    return std::visit(
        [&](const auto& set) {
            if constexpr (std::is_same_v<std::decay_t<decltype(set)>, CoefficientSet4>)
                return solve4(ivp, n, set);
            else
                return solve6(ivp, n, set);
        },
        method);
}

std::string label(const Method& method) {
    return std::visit([](const auto& set) { return set.label(); }, method);
}

int method_order(const Method& method) { return std::holds_alternative<CoefficientSet4>(method) ? 4 : 6; }

int minimum_n(const Method& method) { return std::holds_alternative<CoefficientSet4>(method) ? 6 : 8; }

Method make_method(const std::string& kind, const std::string& preset) {
    if (kind == "standard4") return preset4(preset.empty() ? "table1-col1" : preset, EndVariant::Standard);
    if (kind == "improved4") return preset4(preset.empty() ? "improved4" : preset, EndVariant::Improved);
    if (kind == "spline6") return preset6(preset.empty() ? "improved6" : preset);
    throw std::invalid_argument("unknown method '" + kind + "' (expected standard4, improved4 or spline6)");
}

double max_abs_error(const GridSolution& sol, const Expression& exact) {
    double e = 0.0;
    for (std::size_t i = 1; i < sol.y.size(); ++i) e = std::max(e, std::abs(evaluate(exact, sol.t[i]) - sol.y[i]));
    return e;
}

double max_abs_error(const GridSolution& sol, const GridSolution& reference) {
    if (reference.y.size() != sol.y.size())
        throw std::invalid_argument("max_abs_error: reference grid has a different size");
    double e = 0.0;
    for (std::size_t i = 1; i < sol.y.size(); ++i) e = std::max(e, std::abs(reference.y[i] - sol.y[i]));
    return e;
}

std::vector<double> convergence_slopes(const std::vector<int>& ns, const std::vector<double>& errors) {
    if (ns.size() != errors.size()) throw std::invalid_argument("convergence_slopes: size mismatch");
    std::vector<double> s;
    for (std::size_t k = 0; k + 1 < ns.size(); ++k) {
        if (ns[k + 1] <= ns[k]) throw std::invalid_argument("convergence_slopes: n must be strictly increasing");
        s.push_back(std::log(errors[k] / errors[k + 1]) / std::log(double(ns[k + 1]) / ns[k]));
    }
    return s;
}

std::vector<double> convergence_order(const AnalyticCase& c, const Method& method, const std::vector<int>& ns) {
    std::vector<double> errors;
    for (std::size_t k = 0; k < ns.size(); ++k) {
        if (k > 0 && ns[k] <= ns[k - 1])
            throw std::invalid_argument("convergence_order: n must be strictly increasing");
        errors.push_back(max_abs_error(solve(c.ivp, ns[k], method), c.exact));
    }
    return convergence_slopes(ns, errors);
}

GridSolution rk_oracle(const HighOrderIVP& ivp, int steps) {
    ivp.validate();
    if (steps < 1) throw std::invalid_argument("rk_oracle: steps must be positive");
    const int p = ivp.order;
    const double h = (ivp.b - ivp.a) / steps;

    // z = (y, y', ..., y^(p-1)), z' = (z_1, ..., z_{p-1}, g - f z_0)
    std::vector<double> z(ivp.u), k1(p), k2(p), k3(p), k4(p), tmp(p);
    auto rhs = [&](double t, const std::vector<double>& s, std::vector<double>& out) {
        for (int i = 0; i + 1 < p; ++i) out[i] = s[i + 1];
        out[p - 1] = evaluate(ivp.g, t) - evaluate(ivp.f, t) * s[0];
    };

    GridSolution sol;
    sol.t = uniform_grid(ivp.a, ivp.b, steps);
    sol.y.resize(sol.t.size());
    sol.y[0] = z[0];
    for (int s = 0; s < steps; ++s) {
        const double t = sol.t[s];
        rhs(t, z, k1);
        for (int i = 0; i < p; ++i) tmp[i] = z[i] + 0.5 * h * k1[i];
        rhs(t + 0.5 * h, tmp, k2);
        for (int i = 0; i < p; ++i) tmp[i] = z[i] + 0.5 * h * k2[i];
        rhs(t + 0.5 * h, tmp, k3);
        for (int i = 0; i < p; ++i) tmp[i] = z[i] + h * k3[i];
        rhs(t + h, tmp, k4);
        for (int i = 0; i < p; ++i) z[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        sol.y[s + 1] = z[0];
    }
    sol.method = "rk4-oracle";
    sol.n = steps;
    sol.h = h;
    return sol;
}

GridSolution subsample(const GridSolution& fine, int n) {
    if (n < 1 || fine.n % n != 0)
        throw std::invalid_argument("oracle steps (" + std::to_string(fine.n) + ") must be a multiple of n (" +
                                    std::to_string(n) + ")");
    const int stride = fine.n / n;
    GridSolution out;
    out.n = n;
    out.h = fine.h * stride;
    out.method = fine.method;
    out.t = uniform_grid(fine.t.front(), fine.t.back(), n);
    out.y.resize(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) out.y[i] = fine.y[static_cast<std::size_t>(i) * stride];
    return out;
}

GridSolution rk_oracle(const HighOrderIVP& ivp, int steps, int n) {
    if (n < 1 || steps % n != 0)
        throw std::invalid_argument("oracle steps (" + std::to_string(steps) + ") must be a multiple of n (" +
                                    std::to_string(n) + ")");
    return subsample(rk_oracle(ivp, steps), n);
}

int oracle_steps_for(const std::vector<int>& ns, int steps) {
    long long l = 1;
    for (int n : ns) {
        if (n < 1) throw std::invalid_argument("oracle_steps_for: n must be positive");
        l = std::lcm(l, static_cast<long long>(n));
    }
    const long long m = (std::max<long long>(steps, 1) + l - 1) / l * l;
    if (m > 100000000) throw std::invalid_argument("oracle_steps_for: grid sizes need too many oracle steps");
    return static_cast<int>(m);
}

}  // namespace nlosc
