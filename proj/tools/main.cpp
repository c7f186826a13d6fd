#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "petz/araki.hpp"
#include "petz/state_io.hpp"
#include "petz/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitUnknownExample = 3;

petz::LogBase parse_base(const std::string& base_flag) {
    std::string base = base_flag;
    if (base.empty()) {
        if (const char* env = std::getenv("PETZ_LOG_BASE")) base = env;
    }
    if (base.empty() || base == "e") return petz::LogBase::Natural;
    if (base == "2") return petz::LogBase::Two;
    throw petz::Error("log base must be 'e' or '2'");
}

std::string value_line(const petz::ExtendedReal& v, petz::LogBase base) {
    if (v.is_plus_inf()) return "+inf:" + petz::reason_tag(v.reason());
    if (v.is_minus_inf()) return "-inf";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12f finite", petz::in_base(v, base).value());
    return buf;
}

struct GridSpec {
    double lo, hi;
    std::size_t steps;
};

GridSpec parse_grid(const std::string& text) {
    GridSpec g{};
    const std::size_t c1 = text.find(':');
    const std::size_t c2 = text.find(':', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw petz::Error("grid must be lo:hi:steps");
    try {
        g.lo = std::stod(text.substr(0, c1));
        g.hi = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
        g.steps = std::stoul(text.substr(c2 + 1));
    } catch (const std::exception&) {
        throw petz::Error("grid must be lo:hi:steps with numeric bounds");
    }
    if (!(g.lo < g.hi) || g.steps < 2) throw petz::Error("grid must ascend over >= 2 steps");
    if (g.lo < 0.0) throw petz::Error("grid orders must be nonnegative");
    return g;
}

int cmd_compute(const std::string& rho_path, const std::string& sigma_path,
                const std::string& alpha_text, const std::string& base_flag, double tol,
                bool unrestricted) {
    const petz::LogBase base = parse_base(base_flag);
    const petz::DensityState rho = petz::load_state(rho_path, tol);
    const petz::DensityState sigma = petz::load_state(sigma_path, tol);

    petz::ExtendedReal value = [&] {
        if (alpha_text == "inf" && unrestricted)
            return petz::d_infty_unrestricted(rho, sigma);
        const petz::AlphaOrder a = alpha_text == "inf"
                                       ? petz::AlphaOrder::infinity()
                                       : petz::AlphaOrder::from_value(std::stod(alpha_text));
        return petz::petz_renyi(rho, sigma, a);
    }();
    std::cout << value_line(value, base) << "\n";
    return kExitOk;
}

int cmd_scan(const std::string& rho_path, const std::string& sigma_path,
             const std::string& grid_text, const std::string& csv_path,
             const std::string& base_flag) {
    const petz::LogBase base = parse_base(base_flag);
    const petz::DensityState rho = petz::load_state(rho_path);
    const petz::DensityState sigma = petz::load_state(sigma_path);
    const GridSpec g = parse_grid(grid_text);

    std::vector<petz::AlphaOrder> grid;
    grid.reserve(g.steps);
    for (std::size_t k = 0; k < g.steps; ++k) {
        const double a = g.lo + (g.hi - g.lo) * static_cast<double>(k) /
                                    static_cast<double>(g.steps - 1);
        grid.push_back(petz::AlphaOrder::from_value(a));
    }
    const petz::DivergenceCurve curve = petz::alpha_scan(rho, sigma, grid);
    for (std::size_t k : curve.monotonicity_violations)
        std::cerr << "warning: value decreases at alpha = " << curve.grid[k].label() << "\n";

    const std::string csv = petz::curve_to_csv(curve, base);
    if (csv_path.empty()) {
        std::cout << csv;
    } else {
        std::ofstream out(csv_path);
        if (!out) throw petz::Error("cannot write " + csv_path);
        out << csv;
    }
    return kExitOk;
}

int print_example(const petz::ExampleReport& report) {
    std::printf("== %s ==\n", report.name.c_str());
    std::printf("%-4s | %-42s | %-38s | %s\n", "", "check", "expected", "computed");
    for (const auto& line : report.lines)
        std::printf("%-4s | %-42s | %-38s | %s\n", line.pass ? "ok" : "FAIL",
                    line.label.c_str(), line.expected.c_str(), line.computed.c_str());
    return report.all_pass() ? kExitOk : kExitViolation;
}

int cmd_examples(const std::string& name, bool all) {
    if (all) {
        int status = kExitOk;
        for (const auto& n : petz::example_names())
            status = std::max(status, print_example(petz::run_example(n)));
        return status;
    }
    if (!petz::is_known_example(name)) {
        std::cerr << "unknown example: " << name << "\n";
        return kExitUnknownExample;
    }
    return print_example(petz::run_example(name));
}

int cmd_verify(std::size_t trials, std::size_t dim, std::uint64_t seed, bool inject_bug) {
    petz::VerifyOptions opts;
    opts.trials = trials;
    opts.dim = dim;
    opts.seed = seed;
    opts.inject_bug = inject_bug;
    const petz::VerifyReport report = petz::run_property_suite(opts);
    std::cout << report.to_string();
    std::cout << (report.all_pass() ? "all checks passed\n" : "violations detected\n");
    return report.all_pass() ? kExitOk : kExitViolation;
}

int cmd_araki_demo(double threshold, std::size_t terms) {
    const petz::ArakiReport report = petz::araki_report(threshold);
    std::printf("spectral-integral terms: %s\n", report.verdict.describe().c_str());
    for (const auto& [n, sum] : report.partial_sums)
        std::printf("  partial sum N = %-8zu %.12f\n", n, sum);
    std::printf("first N with partial sum > %g: %zu\n", threshold, report.threshold_n);

    const petz::ItValueReport it = petz::it_relative_entropy_value();
    std::printf("information-theoretic trace value: %.1f (domain series %s)\n",
                it.value.value(), it.domain_certificate.describe().c_str());
    std::printf("term-level match of KL and integrand over %zu terms: max residual %.3e\n",
                terms, petz::kl_term_compare(terms));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum Renyi divergence of density operators via the classical reduction"};
    app.require_subcommand(1);

    std::string rho_path, sigma_path, alpha_text = "0.5", base_flag, csv_path, grid_text;
    std::string example_name;
    bool all_examples = false, unrestricted = false, inject_bug = false;
    double tol = petz::kSupportTol;
    std::size_t trials = 100, dim = 4, terms = 1000;
    std::uint64_t seed = 1;
    double threshold = 5.0;

    CLI::App* compute = app.add_subcommand("compute", "Divergence of two states at one order");
    compute->add_option("--rho", rho_path, "state file (JSON)")->required();
    compute->add_option("--sigma", sigma_path, "state file (JSON)")->required();
    compute->add_option("--alpha", alpha_text, "order in [0, inf], or 'inf'")->required();
    compute->add_option("--base", base_flag, "log base: e (default) or 2");
    compute->add_option("--tol", tol, "support threshold (relative)");
    compute->add_flag("--unrestricted-sup", unrestricted,
                      "at alpha=inf, drop the overlap restriction from the sup");

    CLI::App* scan = app.add_subcommand("scan", "Divergence curve over an order grid");
    scan->add_option("--rho", rho_path)->required();
    scan->add_option("--sigma", sigma_path)->required();
    scan->add_option("--grid", grid_text, "lo:hi:steps")->required();
    scan->add_option("--csv", csv_path, "write CSV here instead of stdout");
    scan->add_option("--base", base_flag, "log base: e (default) or 2");

    CLI::App* examples = app.add_subcommand("examples", "Built-in infinite-dimensional examples");
    examples->add_option("--name", example_name, "example name");
    examples->add_flag("--all", all_examples, "run every example");

    CLI::App* verify = app.add_subcommand("verify", "Cross-module property suite");
    verify->add_option("--trials", trials, "number of random pairs")->check(CLI::PositiveNumber);
    verify->add_option("--dim", dim, "maximum dimension")->check(CLI::PositiveNumber);
    verify->add_option("--seed", seed, "RNG seed");
    verify->add_flag("--inject-bug", inject_bug, "harness self-test: force a violation")
        ->group("");  // hidden

    CLI::App* araki = app.add_subcommand("araki-demo", "Divergent spectral integral demo");
    araki->add_option("--threshold", threshold, "partial-sum threshold to cross");
    araki->add_option("--terms", terms, "terms for the term-level comparison");

    CLI11_PARSE(app, argc, argv);

    try {
        if (compute->parsed())
            return cmd_compute(rho_path, sigma_path, alpha_text, base_flag, tol, unrestricted);
        if (scan->parsed()) return cmd_scan(rho_path, sigma_path, grid_text, csv_path, base_flag);
        if (examples->parsed()) {
            if (all_examples == !example_name.empty()) {
                // exactly one of --name / --all
                std::cerr << "examples: pass --name NAME or --all\n";
                return kExitInvalidInput;
            }
            return cmd_examples(example_name, all_examples);
        }
        if (verify->parsed()) return cmd_verify(trials, dim, seed, inject_bug);
        if (araki->parsed()) return cmd_araki_demo(threshold, terms);
    } catch (const petz::UnknownExampleError& e) {
        std::cerr << e.what() << "\n";
        return kExitUnknownExample;
    } catch (const petz::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    }
    return kExitInvalidInput;
}
