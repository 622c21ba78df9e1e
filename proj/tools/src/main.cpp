#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <lbs/errors.hpp>

#include "lbs_cli/commands.hpp"

namespace {

using namespace lbs;
using namespace lbs::cli;

struct CouplingArgs {
    std::vector<double> positional;
    std::optional<double> gamma, lambda, mu;

    void attach(CLI::App* cmd) {
        cmd->add_option("couplings", positional, "gamma lambda mu")->expected(0, 3);
        cmd->add_option("--gamma", gamma, "on-site coupling");
        cmd->add_option("--lambda", lambda, "nearest-neighbour coupling");
        cmd->add_option("--mu", mu, "next-nearest-neighbour coupling");
    }

    Couplings get() const {
        if (!positional.empty() && positional.size() != 3) {
            throw UsageError("give all three couplings: gamma lambda mu");
        }
        const double g = gamma.value_or(positional.empty() ? 0.0 : positional[0]);
        const double l = lambda.value_or(positional.empty() ? 0.0 : positional[1]);
        const double m = mu.value_or(positional.empty() ? 0.0 : positional[2]);
        try {
            return Couplings(g, l, m);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
};

std::vector<Quasimomentum> parse_k_list(const std::string& text) {
    std::vector<Quasimomentum> ks;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const double v = std::stod(item, &used);
            if (used != item.size()) {
                throw std::invalid_argument(item);
            }
            ks.emplace_back(v);
        } catch (const std::exception&) {
            throw UsageError("bad k value '" + item + "'");
        }
    }
    if (ks.empty()) {
        throw UsageError("k list is empty");
    }
    return ks;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bound states of lattice two-particle Schroedinger operators"};
    app.require_subcommand(1);

    Settings settings;
    double tol = settings.solver.root_tol;
    int n_points = settings.oracle.n_points;
    std::string rule = "midpoint";
    double edge_guard = settings.solver.edge_guard;
    double boundary_tol = settings.boundary.rel;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--tol", tol, "root bracket tolerance, relative to 1 + |z|")->capture_default_str();
        cmd->add_option("--edge-guard", edge_guard, "distance to the band flagged as near-threshold")
            ->capture_default_str();
        cmd->add_option("--boundary-tol", boundary_tol, "relative tolerance for component boundaries")
            ->capture_default_str();
        cmd->add_option("--n-points", n_points, "oracle quadrature nodes")->capture_default_str();
        cmd->add_option("--rule", rule, "oracle quadrature rule")
            ->check(CLI::IsMember({"midpoint", "trapezoid"}))
            ->capture_default_str();
    };

    CouplingArgs classify_args, solve_args, sweep_args;
    double k_value = 0.0;
    std::string method = "det";

    auto* classify = app.add_subcommand("classify", "component labels and threshold coefficients");
    classify_args.attach(classify);
    add_common(classify);

    auto* solve = app.add_subcommand("solve", "eigenvalues outside the band");
    solve_args.attach(solve);
    solve->add_option("--k", k_value, "quasimomentum")->capture_default_str();
    solve->add_option("--method", method, "det, oracle or both")
        ->check(CLI::IsMember({"det", "determinant", "oracle", "both"}))
        ->capture_default_str();
    add_common(solve);

    std::string plane = "lambda-mu", range1 = "-4:4:81", range2 = "-4:4:81", out_path, mode = "classify";
    double fixed = 0.0, scan_k = 0.0;
    auto* scan = app.add_subcommand("scan", "phase diagram over a coupling plane, as CSV");
    scan->add_option("--plane", plane, "lambda-mu, gamma-lambda or gamma-mu")->capture_default_str();
    scan->add_option("--fixed", fixed, "value of the third coupling")->capture_default_str();
    scan->add_option("--range1", range1, "first axis lo:hi:n")->capture_default_str();
    scan->add_option("--range2", range2, "second axis lo:hi:n")->capture_default_str();
    scan->add_option("--k", scan_k, "quasimomentum for solve mode")->capture_default_str();
    scan->add_option("--mode", mode, "classify or solve")
        ->check(CLI::IsMember({"classify", "solve"}))
        ->capture_default_str();
    scan->add_option("--out", out_path, "output CSV path, - for stdout");
    add_common(scan);

    std::string k_list;
    auto* sweep = app.add_subcommand("sweep-k", "eigenvalue counts over a list of quasimomenta");
    sweep_args.attach(sweep);
    sweep->add_option("--ks", k_list, "comma-separated quasimomenta (default 0, pi/6, ..., 5pi/6)");
    add_common(sweep);

    std::uint64_t seed = 42;
    int samples = 200;
    auto* verify = app.add_subcommand("verify", "run the invariant suites on seeded samples");
    verify->add_option("--seed", seed, "RNG seed")->capture_default_str();
    verify->add_option("--samples", samples, "samples per suite")->capture_default_str();
    add_common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        settings.solver.root_tol = tol;
        settings.solver.edge_guard = edge_guard;
        settings.boundary.rel = boundary_tol;
        settings.oracle.n_points = n_points;
        settings.oracle.rule = rule == "trapezoid" ? QuadratureRule::trapezoid : QuadratureRule::midpoint;
        try {
            settings.oracle.validate();
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }

        if (*classify) {
            return cmd_classify(classify_args.get(), settings, std::cout);
        }
        if (*solve) {
            return cmd_solve(solve_args.get(), Quasimomentum(k_value), parse_method(method), settings,
                             std::cout);
        }
        if (*scan) {
            ScanSpec spec;
            spec.plane = parse_plane(plane);
            spec.fixed_value = fixed;
            spec.range1 = parse_range(range1);
            spec.range2 = parse_range(range2);
            spec.k = Quasimomentum(scan_k);
            spec.mode = mode == "solve" ? ScanMode::solve : ScanMode::classify;
            return cmd_scan(spec, settings, out_path, std::cerr);
        }
        if (*sweep) {
            std::vector<Quasimomentum> ks;
            if (k_list.empty()) {
                for (int i = 0; i < 6; ++i) {
                    ks.emplace_back(i * pi / 6.0);
                }
            } else {
                ks = parse_k_list(k_list);
            }
            return cmd_sweep(sweep_args.get(), ks, settings, std::cout);
        }
        if (*verify) {
            const int code = cmd_verify(seed, samples, settings, std::cout);
            return code;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_verification_failed;
    }
    return exit_usage;
}
