// Command-line front end: solve first/second-order linear ODEs as truncated
// power series, verify the equation catalog, and list it.
//
// Exit codes: 0 success (and all checks passed for `verify`), 1 failed
// checks or numeric failure, 2 malformed input, 3 singular expansion point.

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tpsolve/catalog.hpp"
#include "tpsolve/errors.hpp"
#include "tpsolve/first_order.hpp"
#include "tpsolve/second_order.hpp"
#include "tpsolve/serialize.hpp"

namespace {

using nlohmann::json;
using namespace tps;

constexpr int kExitChecksFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitSingularPoint = 3;

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::vector<double> parse_coeff_list(const std::string& text, const std::string& flag) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                             : comma - pos);
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (used != item.size())
                throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw ContractError(flag + ": '" + item + "' is not a number");
        }
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    return out;
}

std::map<std::string, double> parse_params(const std::vector<std::string>& items) {
    std::map<std::string, double> params;
    for (const std::string& item : items) {
        const std::size_t eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw ContractError("--param: expected k=v, got '" + item + "'");
        try {
            params[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
        } catch (const std::exception&) {
            throw ContractError("--param: '" + item.substr(eq + 1) + "' is not a number");
        }
    }
    return params;
}

struct EvalGrid {
    double start = 0.0;
    double stop = 0.0;
    int count = 0;

    double point(int i) const {
        if (count == 1)
            return start;
        return start + i * (stop - start) / (count - 1);
    }
};

EvalGrid parse_eval_grid(const std::string& text) {
    const std::size_t c1 = text.find(':');
    const std::size_t c2 = c1 == std::string::npos ? std::string::npos : text.find(':', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw ContractError("--eval: expected start:stop:count, got '" + text + "'");
    EvalGrid g;
    try {
        g.start = std::stod(text.substr(0, c1));
        g.stop = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
        g.count = std::stoi(text.substr(c2 + 1));
    } catch (const std::exception&) {
        throw ContractError("--eval: could not parse '" + text + "'");
    }
    if (g.count < 1 || g.count > 10000)
        throw ContractError("--eval: count must lie in [1, 10000]");
    return g;
}

Series padded_series(const std::vector<double>& prefix, double base_point, int order) {
    if (static_cast<int>(prefix.size()) > order + 1)
        throw ContractError("coefficient list has " + std::to_string(prefix.size()) +
                            " entries but the order admits only " + std::to_string(order + 1));
    std::vector<double> c(static_cast<std::size_t>(order) + 1, 0.0);
    std::copy(prefix.begin(), prefix.end(), c.begin());
    return Series(base_point, std::move(c));
}

json series_json(const Series& s) { return json::parse(series_to_json(s)); }

json residual_json(const ResidualReport& rep) {
    return json{{"max_residual", rep.max_residual},
                {"verified_degree", rep.verified_degree},
                {"tolerance", rep.tolerance_used},
                {"scale", rep.scale},
                {"pass", rep.passed()}};
}

struct SolveOptions {
    std::string catalog_name;
    std::vector<std::string> raw_params;
    std::string p_list, q_list, f_list;
    double base_point = 0.0;
    bool base_point_given = false;
    int order = 32;
    double tol = 1e-10;
    std::string format = "json";
    std::string eval_spec;
    std::optional<double> c1, c2;
    bool verbose = false;
};

void emit_csv_coefficients(const std::vector<std::pair<std::string, const Series*>>& columns) {
    std::cout << "degree";
    for (const auto& [name, _] : columns)
        std::cout << ',' << name;
    std::cout << '\n';
    const int order = columns.front().second->order();
    for (int k = 0; k <= order; ++k) {
        std::cout << k;
        for (const auto& [_, s] : columns)
            std::cout << ',' << format_double((*s)[k]);
        std::cout << '\n';
    }
}

void emit_csv_evaluation(const EvalGrid& grid,
                         const std::vector<std::pair<std::string, const Series*>>& columns) {
    std::cout << "x";
    for (const auto& [name, _] : columns)
        std::cout << ',' << name;
    std::cout << '\n';
    for (int i = 0; i < grid.count; ++i) {
        const double x = grid.point(i);
        std::cout << format_double(x);
        for (const auto& [_, s] : columns)
            std::cout << ',' << format_double(s->eval(x));
        std::cout << '\n';
    }
}

int run_solve_second_order(const SolveOptions& opt, const SecondOrderProblem& prob,
                           const std::optional<EvalGrid>& grid) {
    const auto [sol, fac] = solve_with_factors(prob);
    const SecondOrderProblem hom = prob.homogeneous();

    std::optional<Series> combined;
    if (opt.c1 || opt.c2)
        combined = sol.y1 * opt.c1.value_or(0.0) + sol.y2 * opt.c2.value_or(0.0) + sol.yp;

    std::vector<std::pair<std::string, const Series*>> columns{
        {"y1", &sol.y1}, {"y2", &sol.y2}, {"yp", &sol.yp}};
    if (opt.verbose) {
        columns.emplace_back("alpha", &fac.alpha);
        columns.emplace_back("beta", &fac.beta);
    }
    if (combined)
        columns.emplace_back("y", &*combined);

    if (opt.format == "csv") {
        if (grid)
            emit_csv_evaluation(*grid, columns);
        else
            emit_csv_coefficients(columns);
        return 0;
    }

    json out;
    out["kind"] = "second-order";
    out["order"] = prob.order();
    out["base_point"] = prob.base_point();
    out["y1"] = series_json(sol.y1);
    out["y2"] = series_json(sol.y2);
    out["yp"] = series_json(sol.yp);
    if (opt.verbose) {
        out["alpha"] = series_json(fac.alpha);
        out["beta"] = series_json(fac.beta);
        out["alpha_iterations"] = fac.alpha_iterations;
        out["abel_reference"] = series_json(sol.abel_reference);
    }
    if (combined) {
        out["c1"] = opt.c1.value_or(0.0);
        out["c2"] = opt.c2.value_or(0.0);
        out["y"] = series_json(*combined);
    }
    out["residuals"] = json{{"y1", residual_json(residual_second_order(hom, sol.y1, opt.tol))},
                            {"y2", residual_json(residual_second_order(hom, sol.y2, opt.tol))},
                            {"yp", residual_json(residual_second_order(prob, sol.yp, opt.tol))}};
    if (grid) {
        json rows = json::array();
        for (int i = 0; i < grid->count; ++i) {
            const double x = grid->point(i);
            json row{{"x", x}, {"y1", sol.y1.eval(x)}, {"y2", sol.y2.eval(x)}, {"yp", sol.yp.eval(x)}};
            if (combined)
                row["y"] = combined->eval(x);
            rows.push_back(std::move(row));
        }
        out["evaluation"] = std::move(rows);
    }
    std::cout << out.dump(2) << '\n';
    return 0;
}

int run_solve_first_order(const SolveOptions& opt, const FirstOrderProblem& prob,
                          const std::optional<EvalGrid>& grid) {
    const Series y = solve_integrating_factor(prob);
    const auto [y_rec, iterations] = solve_recursive(prob, prob.order() + 1);
    const SeriesMatch agreement = approx_equal(y, y_rec, 1e-12, prob.order());

    std::vector<std::pair<std::string, const Series*>> columns{{"y", &y}};
    if (opt.format == "csv") {
        if (grid)
            emit_csv_evaluation(*grid, columns);
        else
            emit_csv_coefficients(columns);
        return 0;
    }

    json out;
    out["kind"] = "first-order";
    out["order"] = prob.order();
    out["base_point"] = prob.base_point();
    out["c1"] = prob.c1;
    out["y"] = series_json(y);
    out["iterations"] = iterations;
    out["methods_agree"] = agreement.equal;
    out["residual"] = residual_json(residual_first_order(prob, y, opt.tol));
    if (grid) {
        json rows = json::array();
        for (int i = 0; i < grid->count; ++i) {
            const double x = grid->point(i);
            rows.push_back(json{{"x", x}, {"y", y.eval(x)}});
        }
        out["evaluation"] = std::move(rows);
    }
    std::cout << out.dump(2) << '\n';
    return 0;
}

int run_solve(const SolveOptions& opt) {
    if (opt.order < 4 || opt.order > 256)
        throw ContractError("--order must lie in [4, 256]");

    std::optional<EvalGrid> grid;
    if (!opt.eval_spec.empty())
        grid = parse_eval_grid(opt.eval_spec);

    if (!opt.catalog_name.empty()) {
        if (!opt.p_list.empty() || !opt.q_list.empty())
            throw ContractError("--catalog cannot be combined with --p/--q");
        const CatalogEntry entry = make_entry(opt.catalog_name, parse_params(opt.raw_params),
                                              opt.f_list.empty()
                                                  ? std::vector<double>{}
                                                  : parse_coeff_list(opt.f_list, "--f"));
        const double bp = opt.base_point_given ? opt.base_point : entry.base_point;
        return run_solve_second_order(opt, entry.make_problem(opt.order, bp), grid);
    }

    const double bp = opt.base_point;
    const auto list_or_zero = [&](const std::string& text, const char* flag) {
        return text.empty() ? Series::zero(bp, opt.order)
                            : padded_series(parse_coeff_list(text, flag), bp, opt.order);
    };
    const Series p = list_or_zero(opt.p_list, "--p");
    const Series f = list_or_zero(opt.f_list, "--f");
    if (!opt.q_list.empty()) {
        const Series q = padded_series(parse_coeff_list(opt.q_list, "--q"), bp, opt.order);
        return run_solve_second_order(opt, SecondOrderProblem(p, q, f), grid);
    }
    return run_solve_first_order(opt, FirstOrderProblem(p, f, opt.c1.value_or(0.0)), grid);
}

struct VerifyOptions {
    std::vector<std::string> names{"all"};
    std::vector<std::string> raw_params;
    int order = 32;
    double tol = 1e-10;
    std::string format = "csv";
};

int run_verify(const VerifyOptions& opt) {
    if (opt.order < 12 || opt.order > 256)
        throw ContractError("verify needs --order in [12, 256]");

    std::vector<CatalogEntry> entries;
    const bool all = opt.names.size() == 1 && opt.names[0] == "all";
    if (all) {
        if (!opt.raw_params.empty())
            throw ContractError("--param requires a specific entry name, not 'all'");
        entries = default_catalog();
    } else {
        if (!opt.raw_params.empty() && opt.names.size() != 1)
            throw ContractError("--param requires exactly one entry name");
        for (const std::string& name : opt.names)
            entries.push_back(make_entry(name, parse_params(opt.raw_params)));
    }

    std::vector<VerificationReport> reports;
    reports.reserve(entries.size());
    for (const CatalogEntry& entry : entries)
        reports.push_back(verify_entry(entry, opt.order, opt.tol));

    if (opt.format == "json") {
        json arr = json::array();
        for (const VerificationReport& rep : reports) {
            json rows = json::array();
            for (const CheckRow& row : rep.rows)
                rows.push_back(json{{"check", row.check},
                                    {"worst_error", row.worst_error},
                                    {"tolerance", row.tolerance},
                                    {"pass", row.pass}});
            arr.push_back(json{{"name", rep.entry}, {"rows", std::move(rows)}});
        }
        std::cout << arr.dump(2) << '\n';
    } else {
        std::cout << "name,check,worst_error,pass\n";
        for (const VerificationReport& rep : reports)
            for (const CheckRow& row : rep.rows)
                std::cout << rep.entry << ',' << row.check << ',' << format_double(row.worst_error)
                          << ',' << (row.pass ? "pass" : "fail") << '\n';
    }
    return all_passed(reports) ? 0 : kExitChecksFailed;
}

int run_list(const std::string& format) {
    const std::vector<CatalogEntry> entries = default_catalog();
    if (format == "csv") {
        std::cout << "name,params,base_point,interval_start,interval_end\n";
        for (const CatalogEntry& e : entries) {
            std::string params;
            for (const auto& [key, value] : e.params) {
                if (!params.empty())
                    params += ';';
                params += key + '=' + format_double(value);
            }
            std::cout << e.name << ',' << params << ',' << format_double(e.base_point) << ','
                      << format_double(e.interval[0]) << ',' << format_double(e.interval[1])
                      << '\n';
        }
    } else {
        std::cout << catalog_listing_json(entries) << '\n';
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Truncated power-series solver for first and second order linear ODEs"};
    app.require_subcommand(1);

    SolveOptions solve_opt;
    CLI::App* solve_cmd = app.add_subcommand("solve", "Solve one problem and print the series");
    solve_cmd->add_option("--catalog", solve_opt.catalog_name, "Catalog entry name");
    solve_cmd->add_option("--param", solve_opt.raw_params, "Catalog parameter k=v (repeatable)");
    solve_cmd->add_option("--p", solve_opt.p_list, "Coefficients of p, comma separated");
    solve_cmd->add_option("--q", solve_opt.q_list,
                          "Coefficients of q, comma separated (its presence selects second order)");
    solve_cmd->add_option("--f", solve_opt.f_list, "Coefficients of f, comma separated");
    auto* bp_opt = solve_cmd->add_option("--base-point", solve_opt.base_point, "Expansion point x0");
    solve_cmd->add_option("--order", solve_opt.order, "Truncation order, 4..256");
    solve_cmd->add_option("--tol", solve_opt.tol, "Residual tolerance (relative to scale)");
    solve_cmd->add_option("--format", solve_opt.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    solve_cmd->add_option("--eval", solve_opt.eval_spec, "Evaluation grid start:stop:count");
    double c1_val = 0.0, c2_val = 0.0;
    auto* c1_opt = solve_cmd->add_option("--c1", c1_val, "Coefficient of y1 (or C1 of a first-order problem)");
    auto* c2_opt = solve_cmd->add_option("--c2", c2_val, "Coefficient of y2 in the combined solution");
    solve_cmd->add_flag("--verbose", solve_opt.verbose, "Also print alpha, beta, iteration counts");

    VerifyOptions verify_opt;
    CLI::App* verify_cmd = app.add_subcommand("verify", "Run the catalog verification checks");
    verify_cmd->add_option("names", verify_opt.names, "Entry names, or 'all'");
    verify_cmd->add_option("--param", verify_opt.raw_params, "Catalog parameter k=v (repeatable)");
    verify_cmd->add_option("--order", verify_opt.order, "Truncation order, 4..256");
    verify_cmd->add_option("--tol", verify_opt.tol, "Residual/identity tolerance (relative to scale)");
    verify_cmd->add_option("--format", verify_opt.format, "csv or json")
        ->check(CLI::IsMember({"json", "csv"}));

    std::string list_format = "json";
    CLI::App* list_cmd = app.add_subcommand("list", "Print the catalog listing");
    list_cmd->add_option("--format", list_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e); // --help
        app.exit(e);
        return kExitBadInput;
    }

    try {
        if (solve_cmd->parsed()) {
            if (*c1_opt)
                solve_opt.c1 = c1_val;
            if (*c2_opt)
                solve_opt.c2 = c2_val;
            solve_opt.base_point_given = static_cast<bool>(*bp_opt);
            return run_solve(solve_opt);
        }
        if (verify_cmd->parsed())
            return run_verify(verify_opt);
        return run_list(list_format);
    } catch (const SingularPointError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitSingularPoint;
    } catch (const ContractError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const InvalidParameterError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitChecksFailed;
    }
}
