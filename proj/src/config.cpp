#include "nlosc/config.hpp"

#include <fstream>
#include <sstream>

namespace nlosc {

ConfigError::ConfigError(std::string path, const std::string& message)
    : std::runtime_error(path + ": " + message), path_(std::move(path)) {}

namespace {

using nlohmann::json;

std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

const json& field(const json& j, const std::string& key) {
    if (!j.contains(key)) throw ConfigError(key, "missing required field");
    return j.at(key);
}

Expression expression(const json& v, const std::string& path) {
    if (v.is_number()) return Expression::constant(v.get<double>());
    if (!v.is_string()) throw ConfigError(path, "expected an expression string or a number");
    try {
        return parse(v.get<std::string>());
    } catch (const ParseError& e) {
        throw ConfigError(path, e.what());
    }
}

// A number, or a formula without t such as "2*cos(1)+sin(1)".
double real(const json& v, const std::string& path) {
    if (v.is_number()) return v.get<double>();
    const Expression e = expression(v, path);
    if (depends_on_time(e)) throw ConfigError(path, "constant expected, formula depends on t");
    try {
        return evaluate(e, 0.0);
    } catch (const EvaluationError& err) {
        throw ConfigError(path, err.what());
    }
}

std::vector<double> reals(const json& j, const std::string& key) {
    const json& v = field(j, key);
    if (!v.is_array()) throw ConfigError(key, "expected an array");
    std::vector<double> out;
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(real(v[i], at(key, i)));
    return out;
}

std::pair<double, double> interval(const json& j) {
    const json& v = field(j, "interval");
    if (!v.is_array() || v.size() != 2) throw ConfigError("interval", "expected [a, b]");
    const double a = real(v[0], "interval[0]");
    const double b = real(v[1], "interval[1]");
    if (!(a < b)) throw ConfigError("interval", "need a < b");
    return {a, b};
}

int integer(const json& j, const std::string& key) {
    const json& v = field(j, key);
    if (!v.is_number_integer()) throw ConfigError(key, "expected an integer");
    return v.get<int>();
}

Rational rational(const json& v, const std::string& path) {
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
    if (!v.is_string()) throw ConfigError(path, "expected a rational string \"p/q\"");
    try {
        return Rational::parse(v.get<std::string>());
    } catch (const std::exception& e) {
        throw ConfigError(path, e.what());
    }
}

Method weights(const std::string& method, const json& set) {
    if (set.is_null() || set.is_string()) {
        try {
            return make_method(method, set.is_null() ? "" : set.get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw ConfigError("set", e.what());
        }
    }
    if (!set.is_array()) throw ConfigError("set", "expected a preset name or an array of rationals");
    std::vector<Rational> w;
    for (std::size_t i = 0; i < set.size(); ++i) w.push_back(rational(set[i], at("set", i)));
    try {
        if (method == "spline6") {
            if (w.size() != 4) throw ConfigError("set", "spline6 needs 4 weights (alpha, beta, gamma, delta)");
            return CoefficientSet6(w[0], w[1], w[2], w[3]);
        }
        if (w.size() != 3) throw ConfigError("set", method + " needs 3 weights (alpha, beta, gamma)");
        return CoefficientSet4(w[0], w[1], w[2],
                               method == "improved4" ? EndVariant::Improved : EndVariant::Standard);
    } catch (const std::invalid_argument& e) {
        throw ConfigError("set", e.what());
    }
}

}  // namespace

RunConfig parse_config(const json& j) {
    if (!j.is_object()) throw ConfigError("<root>", "expected a JSON object");
    RunConfig cfg;
    const json& mode = field(j, "mode");
    if (mode == "chain") {
        cfg.mode = Mode::Chain;
        const std::vector<double> omegas = reals(j, "omegas");
        const json& f = field(j, "forces");
        if (!f.is_array()) throw ConfigError("forces", "expected an array");
        std::vector<Expression> forces;
        for (std::size_t i = 0; i < f.size(); ++i) forces.push_back(expression(f[i], at("forces", i)));
        const auto [a, b] = interval(j);
        const std::vector<double> pos = reals(j, "positions");
        const std::vector<double> vel = reals(j, "velocities");
        if (omegas.size() < 2) throw ConfigError("omegas", "need at least 2 oscillators");
        if (j.contains("N") && integer(j, "N") != static_cast<int>(omegas.size()))
            throw ConfigError("N", "does not match the number of omegas");
        for (std::size_t i = 0; i < omegas.size(); ++i)
            if (!(omegas[i] > 0.0)) throw ConfigError(at("omegas", i), "frequency must be positive");
        if (forces.size() != omegas.size()) throw ConfigError("forces", "need one force per oscillator");
        if (pos.size() != omegas.size()) throw ConfigError("positions", "need one position per oscillator");
        if (vel.size() != omegas.size()) throw ConfigError("velocities", "need one velocity per oscillator");
        cfg.chain.emplace(omegas, forces, a, b, pos, vel);
        cfg.ivp = reduce(*cfg.chain);
    } else if (mode == "ivp") {
        cfg.mode = Mode::Ivp;
        cfg.ivp.order = integer(j, "order");
        if (cfg.ivp.order < 2 || cfg.ivp.order % 2 != 0) throw ConfigError("order", "must be an even integer >= 2");
        cfg.ivp.f = expression(field(j, "f"), "f");
        cfg.ivp.g = expression(field(j, "g"), "g");
        std::tie(cfg.ivp.a, cfg.ivp.b) = interval(j);
        cfg.ivp.u = reals(j, "u");
        if (static_cast<int>(cfg.ivp.u.size()) != cfg.ivp.order)
            throw ConfigError("u", "need " + std::to_string(cfg.ivp.order) + " initial derivatives");
    } else {
        throw ConfigError("mode", "expected \"chain\" or \"ivp\"");
    }

    const json& method = field(j, "method");
    if (!method.is_string()) throw ConfigError("method", "expected a string");
    cfg.method = method.get<std::string>();
    cfg.set = j.value("set", json());
    cfg.n = integer(j, "n");
    if (cfg.method == "oracle") {
        if (cfg.n < 1) throw ConfigError("n", "must be positive");
    } else {
        if (cfg.method != "standard4" && cfg.method != "improved4" && cfg.method != "spline6")
            throw ConfigError("method", "expected standard4, improved4, spline6 or oracle");
        cfg.weights = weights(cfg.method, cfg.set);
        if (method_order(*cfg.weights) != cfg.ivp.order)
            throw ConfigError("method", cfg.method + " solves order " + std::to_string(method_order(*cfg.weights)) +
                                            " problems, this one has order " + std::to_string(cfg.ivp.order));
        if (cfg.n < minimum_n(*cfg.weights))
            throw ConfigError("n", "must be at least " + std::to_string(minimum_n(*cfg.weights)));
    }
    if (cfg.mode == Mode::Chain && cfg.n < 4) throw ConfigError("n", "trajectory recovery needs n >= 4");
    if (j.contains("exact") && !j.at("exact").is_null()) cfg.exact = expression(j.at("exact"), "exact");
    return cfg;
}

RunConfig load_config(const std::string& file) {
    std::ifstream in(file);
    if (!in) throw ConfigError(file, "cannot open config file");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError(file, std::string("malformed JSON: ") + e.what());
    }
    return parse_config(j);
}

json reduced_config(const RunConfig& cfg) {
    json j;
    j["mode"] = "ivp";
    j["order"] = cfg.ivp.order;
    j["f"] = to_string(cfg.ivp.f);
    j["g"] = to_string(cfg.ivp.g);
    j["interval"] = {cfg.ivp.a, cfg.ivp.b};
    j["u"] = cfg.ivp.u;
    j["method"] = cfg.method;
    if (!cfg.set.is_null()) j["set"] = cfg.set;
    j["n"] = cfg.n;
    if (cfg.exact) j["exact"] = to_string(*cfg.exact);
    return j;
}

}  // namespace nlosc
