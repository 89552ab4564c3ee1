#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "nlosc/expr.hpp"
#include "nlosc/ivp.hpp"
#include "nlosc/spline4.hpp"
#include "nlosc/spline6.hpp"

namespace nlosc {

/// A benchmark IVP with a closed-form solution.
struct AnalyticCase {
    int id = 0;                       ///< 1..4
    std::string name;
    HighOrderIVP ivp;
    Expression exact;
    std::vector<std::string> u_text;  ///< initial data as written, e.g. "2*cos(1)+sin(1)"
    std::vector<int> tables;
};

/// The four benchmark problems: two fourth-order (ids 1, 2) and two
/// sixth-order (ids 3, 4).
std::vector<AnalyticCase> builtin_cases();

/// One case by id; throws std::out_of_range for ids outside 1..4.
AnalyticCase builtin_case(int id);

using Method = std::variant<CoefficientSet4, CoefficientSet6>;

GridSolution solve(const HighOrderIVP& ivp, int n, const Method& method);
std::string label(const Method& method);
int method_order(const Method& method);
int minimum_n(const Method& method);

/// Method names accepted by the CLI: "standard4", "improved4" (with a
/// fourth-order preset) and "spline6" (with a sixth-order preset). An
/// empty preset picks the natural default for the method.
Method make_method(const std::string& kind, const std::string& preset);

/// max over i = 1..n of |exact(t_i) - y_i|.
double max_abs_error(const GridSolution& sol, const Expression& exact);

/// Same metric against reference values on the same grid.
double max_abs_error(const GridSolution& sol, const GridSolution& reference);

/// log(E_k / E_{k+1}) / log(n_{k+1} / n_k) for consecutive entries.
std::vector<double> convergence_slopes(const std::vector<int>& ns, const std::vector<double>& errors);

/// Solves the case for every n (strictly increasing) and returns the
/// observed slopes.
std::vector<double> convergence_order(const AnalyticCase& c, const Method& method, const std::vector<int>& ns);

/// Classical four-stage Runge-Kutta on the first-order companion system
/// of y^(p) + f y = g with `steps` uniform steps. Returns every step.
GridSolution rk_oracle(const HighOrderIVP& ivp, int steps);

/// As above, subsampled to n intervals. Throws std::invalid_argument if
/// steps is not a multiple of n.
GridSolution rk_oracle(const HighOrderIVP& ivp, int steps, int n);

/// Every (fine.n / n)-th value of a fine grid solution.
GridSolution subsample(const GridSolution& fine, int n);

/// Default oracle resolution.
inline constexpr int kDefaultOracleSteps = 100000;

/// Smallest multiple of lcm(ns) that is at least `steps`.
int oracle_steps_for(const std::vector<int>& ns, int steps = kDefaultOracleSteps);

struct ErrorColumn {
    std::string key;    ///< preset or method name
    std::string title;  ///< column heading
    Method method;
    std::vector<std::optional<double>> published;  ///< reference values per row, empty where there is none
    std::vector<double> errors;                    ///< filled by reproduce_table
    bool canonical = false;  ///< weights chosen here, the published ones are not listed
};

struct ErrorTable {
    int id = 0;
    int case_id = 0;
    std::string title;
    std::vector<int> ns;
    std::vector<ErrorColumn> columns;
};

/// The (case, n, method) matrix of table `id` (1..8) with published values
/// and no computed errors.
ErrorTable table_layout(int id);

/// Runs every cell of the table against the analytic solution.
ErrorTable reproduce_table(int id);

/// Aligned plain-text rendering of a table, computed next to published.
std::string format_table(const ErrorTable& table);

/// CSV: table,n,column,computed,published.
std::string table_csv(const ErrorTable& table);

}  // namespace nlosc
