#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "nlosc/verify.hpp"

namespace nlosc {

namespace {

using Published = std::vector<std::optional<double>>;

ErrorColumn column(std::string key, std::string title, Method m, Published p, bool canonical = false) {
    return ErrorColumn{std::move(key), std::move(title), std::move(m), std::move(p), {}, canonical};
}

std::vector<ErrorColumn> table1_columns(EndVariant v, const Published& c1, const Published& c2,
                                        const Published& c3) {
    return {
        column("table1-col1", "a=0 b=0 g=1", preset4("table1-col1", v), c1),
        column("table1-col2", "a=1/2 b=1/2 g=-1", preset4("table1-col2", v), c2),
        column("table1-col3", "a=1/6 b=1/6 g=1/3", preset4("table1-col3", v), c3),
    };
}

std::vector<ErrorColumn> table5_columns(const Published& c1, const Published& c2, const Published& c3) {
    return {
        column("table5-col1", "1/120 15/120 1/4 28/120", preset6("table5-col1"), c1),
        column("table5-col2", "1/720 1/36 219/720 240/720", preset6("table5-col2"), c2),
        column("table5-col3", "1/5040 6/504 1250/5040 2418/5040", preset6("table5-col3"), c3),
    };
}

std::vector<ErrorColumn> order_columns(const Published& c4, const Published& c6, const Published& c8) {
    return {
        column("derived6-h4", "O(h^4)", preset6("derived6-h4"), c4, true),
        column("derived6-h6", "O(h^6)", preset6("derived6-h6"), c6, true),
        column("improved6", "O(h^8)", preset6("improved6"), c8),
    };
}

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

}  // namespace

ErrorTable table_layout(int id) {
    ErrorTable t;
    t.id = id;
    switch (id) {
        // Table 1 pairs the three weight sets with the improved end
        // conditions: that is the configuration that reproduces its values.
        case 1:
            t.case_id = 1;
            t.title = "Example 1, fourth-order weight sets";
            t.ns = {6, 12, 24, 48};
            t.columns = table1_columns(EndVariant::Improved, {6.74e-1, 5.77e-2, 3.3e-3, 1.48e-4},
                                       {3.6e0, 7.3e-1, 4.5e-2, 2.1e-3}, {1.73e0, 2.22e-1, 1.3e-2, 5.93e-4});
            break;
        case 2:
            t.case_id = 1;
            t.title = "Example 1, improved fourth-order method";
            t.ns = {6, 12, 24, 48};
            t.columns = {column("improved4", "improved",
                                preset4("improved4", EndVariant::Improved),
                                {1.7e-3, 1.17e-5, 7.19e-8, 7.72e-11})};
            break;
        case 3:
            t.case_id = 2;
            t.title = "Example 2, fourth-order weight sets";
            t.ns = {6, 12, 24, 48};
            t.columns = table1_columns(EndVariant::Standard, {1.14e-1, 1.14e-2, 1.4e-3, 2.18e-4},
                                       {2.31e-2, 1.55e-2, 4.8e-3, 1.3e-3}, {6.86e-2, 2.4e-3, 6.40e-4, 2.87e-4});
            break;
        case 4:
            t.case_id = 2;
            t.title = "Example 2, improved fourth-order method";
            t.ns = {6, 12, 24, 48};
            t.columns = {column("improved4", "improved",
                                preset4("improved4", EndVariant::Improved),
                                {2.53e-5, 1.53e-7, 1.06e-9, 1.09e-10})};
            break;
        case 5:
            t.case_id = 3;
            t.title = "Example 3, sixth-order weight sets";
            t.ns = {8, 16, 32, 64};
            t.columns = table5_columns({7.98e-4, 7.50e-5, 5.45e-6, 1.28e-7}, {9.13e-4, 9.64e-5, 1.02e-5, 9.42e-7},
                                       {9.51e-4, 1.03e-4, 1.18e-5, 1.37e-6});
            break;
        case 6:
            t.case_id = 3;
            t.title = "Example 3, sixth-order method by order";
            t.ns = {8, 16};
            t.columns = order_columns({4.04e-5, 1.10e-6}, {2.07e-1, 8.99e-9}, {2.13e-1, 4.80e-7});
            break;
        case 7:
            t.case_id = 4;
            t.title = "Example 4, sixth-order weight sets";
            t.ns = {16, 32, 64, 128};
            t.columns = table5_columns({7.35e-2, 1.01e-2, 4.51e-4, 1.98e-4}, {9.64e-2, 1.62e-2, 2.0e-3, 1.79e-4},
                                       {1.03e-1, 1.82e-2, 2.5e-3, 3.05e-4});
            break;
        case 8:
            t.case_id = 4;
            t.title = "Example 4, sixth-order method by order";
            t.ns = {8, 16};
            t.columns = order_columns({2.31e-2, 8.6e-3}, {2.87e-1, 7.98e-5}, {2.98e-1, 9.93e-8});
            break;
        default: throw std::out_of_range("no table " + std::to_string(id) + " (expected 1..8)");
    }
    return t;
}

ErrorTable reproduce_table(int id) {
    ErrorTable t = table_layout(id);
    const AnalyticCase c = builtin_case(t.case_id);
    for (auto& col : t.columns) {
        col.errors.clear();
        for (int n : t.ns) col.errors.push_back(max_abs_error(solve(c.ivp, n, col.method), c.exact));
    }
    return t;
}

std::string format_table(const ErrorTable& table) {
    std::ostringstream os;
    os << "Table " << table.id << ": " << table.title << "\n";
    char buf[128];
    std::snprintf(buf, sizeof buf, "%6s", "n");
    os << buf;
    for (const auto& col : table.columns) {
        std::snprintf(buf, sizeof buf, "  %-24s", (col.key + (col.canonical ? "*" : "")).c_str());
        os << buf;
    }
    os << "\n";
    for (std::size_t r = 0; r < table.ns.size(); ++r) {
        std::snprintf(buf, sizeof buf, "%6d", table.ns[r]);
        os << buf;
        for (const auto& col : table.columns) {
            const std::string comp = r < col.errors.size() ? sci(col.errors[r]) : "-";
            const std::string pub = r < col.published.size() && col.published[r] ? sci(*col.published[r]) : "-";
            std::snprintf(buf, sizeof buf, "  %-10s (%-10s)  ", comp.c_str(), pub.c_str());
            os << buf;
        }
        os << "\n";
    }
    os << "computed (published)";
    for (const auto& col : table.columns)
        if (col.canonical) {
            os << "; * canonical weights, published ones not listed";
            break;
        }
    os << "\n";
    return os.str();
}

std::string table_csv(const ErrorTable& table) {
    std::ostringstream os;
    os << "table,n,column,computed,published\n";
    char buf[64];
    for (std::size_t r = 0; r < table.ns.size(); ++r)
        for (const auto& col : table.columns) {
            os << table.id << ',' << table.ns[r] << ',' << col.key << ',';
            if (r < col.errors.size()) {
                std::snprintf(buf, sizeof buf, "%.17g", col.errors[r]);
                os << buf;
            }
            os << ',';
            if (r < col.published.size() && col.published[r]) {
                std::snprintf(buf, sizeof buf, "%.17g", *col.published[r]);
                os << buf;
            }
            os << '\n';
        }
    return os.str();
}

}  // namespace nlosc
