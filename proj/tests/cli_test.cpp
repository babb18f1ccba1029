// End-to-end checks of the command-line tool. argv[1] is the path to the
// built binary; every command is run through the shell with stdout captured.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tpsolve/catalog.hpp"
#include "tpsolve/second_order.hpp"
#include "tpsolve/serialize.hpp"

namespace {

using nlohmann::json;

int g_failures = 0;

#define EXPECT(cond, what)                                                          \
    do {                                                                            \
        if (!(cond)) {                                                              \
            std::cerr << "[FAIL] " << __FILE__ << ":" << __LINE__ << " " << (what)  \
                      << "\n";                                                      \
            ++g_failures;                                                           \
        }                                                                           \
    } while (0)

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& cli, const std::string& args) {
    const std::string cmd = "'" + cli + "' " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        std::cerr << "popen failed for: " << cmd << "\n";
        std::exit(2);
    }
    RunResult result;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0)
        result.out.append(buf, got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

int count_lines(const std::string& text) {
    int n = 0;
    for (char c : text)
        if (c == '\n')
            ++n;
    return n;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_tests <path-to-cli>\n";
        return 2;
    }
    const std::string cli = argv[1];

    // list
    {
        const RunResult r = run(cli, "list");
        EXPECT(r.exit_code == 0, "list exits 0");
        const json listing = json::parse(r.out, nullptr, false);
        EXPECT(!listing.is_discarded() && listing.is_array() && listing.size() == 6,
               "list prints 6 JSON entries");
        for (const auto& item : listing)
            EXPECT(item.contains("name") && item.contains("params") &&
                       item.contains("base_point") && item.contains("interval"),
                   "listing entries carry the declared fields");
    }
    {
        const RunResult r = run(cli, "list --format csv");
        EXPECT(r.exit_code == 0, "list csv exits 0");
        EXPECT(count_lines(r.out) == 7, "csv listing is header + 6 rows");
        EXPECT(r.out.rfind("name,params,base_point", 0) == 0, "csv header");
    }

    // solve, catalog entry
    {
        const RunResult r = run(cli, "solve --catalog airy --order 24 --format json");
        EXPECT(r.exit_code == 0, "solve airy exits 0");
        const json out = json::parse(r.out);
        EXPECT(std::abs(out["y1"]["coeffs"][3].get<double>() - 1.0 / 6.0) < 1e-15,
               "airy y1 degree-3 coefficient is 1/6");
        EXPECT(out["residuals"]["y1"]["pass"].get<bool>(), "airy y1 residual passes");
        EXPECT(out["y1"]["coeffs"].size() == 25, "order 24 means 25 coefficients");

        // Round trip: the parsed series reproduces the printed residual exactly.
        const tps::Series y1 = tps::series_from_json(out["y1"].dump());
        const tps::CatalogEntry entry = tps::make_airy();
        const tps::SecondOrderProblem prob = entry.make_problem(24, entry.base_point);
        const tps::ResidualReport rep =
            tps::residual_second_order(prob.homogeneous(), y1, 1e-10);
        EXPECT(rep.max_residual == out["residuals"]["y1"]["max_residual"].get<double>(),
               "re-running the residual on the parsed series matches the printed value");
    }

    // solve, trivial second-order equation
    {
        const RunResult r = run(cli, "solve --p 0 --q 0 --f 0 --order 8");
        EXPECT(r.exit_code == 0, "trivial solve exits 0");
        const json out = json::parse(r.out);
        EXPECT(out["y1"]["coeffs"][0] == 1.0 && out["y1"]["coeffs"][1] == 0.0, "y1 = 1");
        EXPECT(out["y2"]["coeffs"][0] == 0.0 && out["y2"]["coeffs"][1] == 1.0, "y2 = x");
    }

    // solve, catalog parameter
    {
        const RunResult r = run(cli, "solve --catalog hermite --param a=3 --order 16 --verbose");
        EXPECT(r.exit_code == 0, "hermite solve exits 0");
        const json out = json::parse(r.out);
        EXPECT(std::abs(out["alpha"]["coeffs"][2].get<double>() + 2.0) < 1e-14,
               "hermite a=3 alpha degree-2 coefficient is -2");
    }

    // combined solution and evaluation grid
    {
        const RunResult r = run(cli,
                                "solve --catalog constant_coefficients --order 32 "
                                "--c1 1 --c2 0.5 --eval 0:1:5 --format json");
        EXPECT(r.exit_code == 0, "combined solve exits 0");
        const json out = json::parse(r.out);
        EXPECT(out.contains("y") && out["evaluation"].size() == 5, "y and 5 grid rows present");
        const double y_at_1 = out["evaluation"][4]["y"].get<double>();
        EXPECT(std::abs(y_at_1 - std::exp(-1.0)) < 1e-10,
               "y1 + y2/2 reproduces exp(-x) for roots -1,-2 at x=1");
    }

    // first-order path
    {
        const RunResult r = run(cli, "solve --p 1 --f 0 --c1 1 --order 12");
        EXPECT(r.exit_code == 0, "first-order solve exits 0");
        const json out = json::parse(r.out);
        EXPECT(out["kind"] == "first-order", "kind tag");
        EXPECT(std::abs(out["y"]["coeffs"][1].get<double>() + 1.0) < 1e-15, "exp(-x) slope");
        EXPECT(out["methods_agree"].get<bool>(), "closed form and recursion agree");
        EXPECT(out["iterations"].get<int>() <= 13, "iteration bound");
    }
    {
        const RunResult r = run(cli, "solve --p 1 --f 0 --c1 1 --order 12 --eval 0:1:3 --format csv");
        EXPECT(r.exit_code == 0, "first-order csv eval exits 0");
        EXPECT(count_lines(r.out) == 4, "eval csv is header + 3 rows");
        EXPECT(r.out.rfind("x,y", 0) == 0, "eval csv header");
    }

    // verify
    {
        const RunResult r = run(cli, "verify airy legendre --order 24");
        EXPECT(r.exit_code == 0, "verify subset exits 0");
        EXPECT(r.out.rfind("name,check,worst_error,pass", 0) == 0, "verify csv header");
        EXPECT(r.out.find("airy,") != std::string::npos, "airy rows present");
        EXPECT(r.out.find("legendre,") != std::string::npos, "legendre rows present");
        EXPECT(r.out.find("constant_coefficients,") == std::string::npos,
               "unselected entries are absent");
        EXPECT(r.out.find(",fail") == std::string::npos, "no failing rows");
    }
    {
        const RunResult r = run(cli, "verify legendre --param l=2 --order 12 --format json");
        EXPECT(r.exit_code == 0, "verify with entry parameter exits 0");
        const json out = json::parse(r.out);
        EXPECT(out.is_array() && out.size() == 1, "one report");
    }

    // error paths
    EXPECT(run(cli, "verify bogus").exit_code == 2, "unknown verify name exits 2");
    EXPECT(run(cli, "verify all --order 8").exit_code == 2, "verify below order 12 exits 2");
    EXPECT(run(cli, "solve --catalog bogus").exit_code == 2, "unknown catalog name exits 2");
    EXPECT(run(cli, "solve --order 2 --p 1").exit_code == 2, "order below 4 exits 2");
    EXPECT(run(cli, "solve --order 999 --p 1").exit_code == 2, "order above 256 exits 2");
    EXPECT(run(cli, "solve --p 1 --eval 0:1:20000").exit_code == 2, "oversized grid exits 2");
    EXPECT(run(cli, "solve --p x,1").exit_code == 2, "non-numeric coefficient exits 2");
    EXPECT(run(cli, "solve --catalog airy --p 1").exit_code == 2,
           "catalog plus raw coefficients exits 2");
    EXPECT(run(cli, "nonsense").exit_code == 2, "unknown subcommand exits 2");
    EXPECT(run(cli, "solve --catalog cauchy_euler --base-point 0").exit_code == 3,
           "expanding about the Cauchy-Euler singularity exits 3");

    if (g_failures == 0) {
        std::cout << "cli contract: all checks passed\n";
        return 0;
    }
    std::cerr << "cli contract: " << g_failures << " check(s) failed\n";
    return 1;
}
