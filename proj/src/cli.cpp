#include "nlosc/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "nlosc/config.hpp"

namespace nlosc {

namespace {

class SolveFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

GridSolution solve_config(const RunConfig& cfg) {
    try {
        if (cfg.method == "oracle") {
            const int steps = oracle_steps_for({cfg.n}, oracle_steps_from_env());
            return rk_oracle(cfg.ivp, steps, cfg.n);
        }
        return solve(cfg.ivp, cfg.n, *cfg.weights);
    } catch (const std::exception& e) {
        throw SolveFailure(e.what());
    }
}

std::string solution_csv(const RunConfig& cfg, const GridSolution& sol) {
    std::optional<TrajectorySet> traj;
    if (cfg.chain) traj = recover_trajectories(*cfg.chain, sol);
    std::ostringstream os;
    os << "t,y";
    if (traj)
        for (std::size_t k = 0; k < traj->y.size(); ++k) os << ",y" << k + 1;
    if (cfg.exact) os << ",error";
    os << '\n';
    for (std::size_t i = 0; i < sol.t.size(); ++i) {
        os << num(sol.t[i]) << ',' << num(sol.y[i]);
        if (traj)
            for (const auto& y : traj->y) os << ',' << num(y[i]);
        if (cfg.exact) os << ',' << num(std::abs(evaluate(*cfg.exact, sol.t[i]) - sol.y[i]));
        os << '\n';
    }
    return os.str();
}

std::vector<int> parse_n_list(const std::string& text) {
    std::vector<int> ns;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size() || v < 1) throw ConfigError("--n", "expected a comma-separated list of positive integers");
        ns.push_back(v);
    }
    if (ns.size() < 2) throw ConfigError("--n", "need at least two grid sizes");
    return ns;
}

}  // namespace

int oracle_steps_from_env() {
    if (const char* s = std::getenv("NLOSC_ORACLE_STEPS")) {
        char* end = nullptr;
        const long v = std::strtol(s, &end, 10);
        if (end != s && *end == '\0' && v > 0 && v <= 100000000) return static_cast<int>(v);
    }
    return kDefaultOracleSteps;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"High-order spline solver for nonlocal oscillator chains"};
    app.require_subcommand(1);

    std::string config_file, out_file, method, set, n_list, format = "both";
    int table_id = 0, case_id = 0;

    auto* reduce_cmd = app.add_subcommand("reduce", "Print the reduced high-order IVP of a config as JSON");
    reduce_cmd->add_option("--config", config_file, "JSON run config")->required();

    auto* solve_cmd = app.add_subcommand("solve", "Solve a config and write the grid as CSV");
    solve_cmd->add_option("--config", config_file, "JSON run config")->required();
    solve_cmd->add_option("--out", out_file, "CSV file (default: standard output)");

    auto* table_cmd = app.add_subcommand("table", "Reproduce an error table");
    table_cmd->add_option("--id", table_id, "Table number")->required()->check(CLI::Range(1, 8));
    table_cmd->add_option("--format", format, "text, csv or both")
        ->check(CLI::IsMember({"text", "csv", "both"}));

    auto* conv_cmd = app.add_subcommand("convergence", "Observed convergence slopes on a built-in case");
    conv_cmd->add_option("--case", case_id, "Built-in case 1..4")->required()->check(CLI::Range(1, 4));
    conv_cmd->add_option("--method", method, "standard4, improved4 or spline6")->required();
    conv_cmd->add_option("--n", n_list, "Comma-separated grid sizes, e.g. 6,12,24")->required();
    conv_cmd->add_option("--set", set, "Coefficient preset");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*reduce_cmd) {
            const RunConfig cfg = load_config(config_file);
            out << reduced_config(cfg).dump(2) << '\n';
        } else if (*solve_cmd) {
            const RunConfig cfg = load_config(config_file);
            const GridSolution sol = solve_config(cfg);
            const std::string csv = solution_csv(cfg, sol);
            if (out_file.empty()) {
                out << csv;
            } else {
                std::ofstream f(out_file, std::ios::binary);
                if (!f) throw ConfigError("--out", "cannot write " + out_file);
                f << csv;
            }
        } else if (*table_cmd) {
            ErrorTable t;
            try {
                t = reproduce_table(table_id);
            } catch (const std::exception& e) {
                throw SolveFailure(e.what());
            }
            if (format != "csv") out << format_table(t);
            if (format == "both") out << '\n';
            if (format != "text") out << table_csv(t);
        } else if (*conv_cmd) {
            const std::vector<int> ns = parse_n_list(n_list);
            Method m = [&]() -> Method {
                try {
                    return make_method(method, set);
                } catch (const std::invalid_argument& e) {
                    throw ConfigError(set.empty() ? "--method" : "--set", e.what());
                }
            }();
            const AnalyticCase c = builtin_case(case_id);
            if (method_order(m) != c.ivp.order)
                throw ConfigError("--method", method + " does not match the order of case " + std::to_string(case_id));
            for (int n : ns)
                if (n < minimum_n(m)) throw ConfigError("--n", "grid sizes must be at least " + std::to_string(minimum_n(m)));
            for (std::size_t k = 1; k < ns.size(); ++k)
                if (ns[k] <= ns[k - 1]) throw ConfigError("--n", "grid sizes must be strictly increasing");
            std::vector<double> errors;
            try {
                for (int n : ns) errors.push_back(max_abs_error(solve(c.ivp, n, m), c.exact));
            } catch (const std::exception& e) {
                throw SolveFailure(e.what());
            }
            const std::vector<double> slopes = convergence_slopes(ns, errors);
            out << "case " << case_id << ", " << label(m) << '\n';
            char buf[96];
            for (std::size_t k = 0; k < ns.size(); ++k) {
                if (k == 0)
                    std::snprintf(buf, sizeof buf, "n=%-6d error=%.6e\n", ns[k], errors[k]);
                else
                    std::snprintf(buf, sizeof buf, "n=%-6d error=%.6e slope=%.4f\n", ns[k], errors[k], slopes[k - 1]);
                out << buf;
            }
        }
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return 2;
    } catch (const SolveFailure& e) {
        err << "solve failed: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace nlosc
