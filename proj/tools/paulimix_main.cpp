#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "paulimix/errors.hpp"
#include "paulimix/frontend.hpp"

namespace {

using paulimix::frontend::SweepSpec;

paulimix::BlochVector parse_bloch(const std::string& text) {
    paulimix::BlochVector r;
    char tail = '\0';
    if (std::sscanf(text.c_str(), "%lf,%lf,%lf%c", &r.x, &r.y, &r.z, &tail) != 3)
        throw paulimix::InvalidInputError("--bloch expects x,y,z, got '" + text + "'");
    return r;
}

SweepSpec::Mode parse_mode(const std::string& mode) {
    if (mode == "comment") return SweepSpec::Mode::Comment;
    if (mode == "sacchi") return SweepSpec::Mode::Sacchi;
    if (mode == "diff") return SweepSpec::Mode::Diff;
    throw paulimix::InvalidInputError("unknown sweep mode '" + mode + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Optimal convex approximation of a qubit state by the six Pauli eigenstates"};
    app.require_subcommand(1);

    auto* solve_cmd = app.add_subcommand(
        "solve", "Solve one state, given as --a/--k/--phi or as --bloch x,y,z");
    std::optional<double> opt_a, opt_k, opt_phi;
    std::optional<std::string> opt_bloch;
    solve_cmd->add_option("--a", opt_a, "Population of |1>");
    solve_cmd->add_option("--k", opt_k, "Relative coherence in [0, 1]");
    solve_cmd->add_option("--phi", opt_phi, "Phase in [0, 2*pi)");
    solve_cmd->add_option("--bloch", opt_bloch, "Bloch vector as x,y,z");

    auto* sweep_cmd = app.add_subcommand("sweep", "Write a CSV sweep over a and k");
    SweepSpec sweep;
    std::string mode = "comment";
    std::string out_path = "-";
    sweep_cmd->add_option("--phi", sweep.phi, "Fixed phase in radians")
        ->capture_default_str();
    sweep_cmd->add_option("--grid", sweep.grid, "Points per axis")->capture_default_str();
    sweep_cmd->add_option("--mode", mode, "comment | sacchi | diff")
        ->capture_default_str();
    sweep_cmd->add_option("--out", out_path, "Output path, - for stdout")
        ->capture_default_str();

    auto* verify_cmd =
        app.add_subcommand("verify", "Randomized cross-check of the closed forms");
    paulimix::frontend::VerifySpec verify;
    verify_cmd->add_option("--samples", verify.samples, "Random states to draw")
        ->capture_default_str();
    verify_cmd->add_option("--seed", verify.seed, "RNG seed")->capture_default_str();
    verify_cmd->add_option("--tol", verify.tol, "Tolerance for every check")
        ->capture_default_str();

    app.add_subcommand("counterexample",
                       "Print the invalid reference weights and the corrected solutions");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 1;
    }

    try {
        if (solve_cmd->parsed()) {
            const bool akphi = opt_a || opt_k || opt_phi;
            if (akphi == opt_bloch.has_value())
                throw paulimix::InvalidInputError(
                    "solve needs either --a/--k/--phi or --bloch, not both");
            if (opt_bloch) {
                paulimix::frontend::run_solve(parse_bloch(*opt_bloch), std::cout);
            } else {
                if (!(opt_a && opt_k && opt_phi))
                    throw paulimix::InvalidInputError("solve needs all of --a, --k, --phi");
                paulimix::frontend::run_solve(paulimix::AkPhiParams{*opt_a, *opt_k, *opt_phi},
                                              std::cout);
            }
        } else if (sweep_cmd->parsed()) {
            sweep.mode = parse_mode(mode);
            if (out_path == "-") {
                paulimix::frontend::run_sweep(sweep, std::cout);
            } else {
                std::ofstream out(out_path, std::ios::binary);
                if (!out)
                    throw paulimix::InvalidInputError("cannot open '" + out_path +
                                                      "' for writing");
                paulimix::frontend::run_sweep(sweep, out);
                if (!out.flush())
                    throw paulimix::InvalidInputError("write to '" + out_path + "' failed");
            }
        } else if (verify_cmd->parsed()) {
            if (!paulimix::frontend::run_verify(verify, std::cout).pass) return 2;
        } else {
            paulimix::frontend::run_counterexamples(std::cout);
        }
    } catch (const paulimix::InvalidInputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
