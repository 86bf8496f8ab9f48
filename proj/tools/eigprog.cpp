// Command-line front end: eigprog {iep | ellipsoids | solve}.

#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "eigprog/cli.hpp"

namespace {

// CLI11 reports parse problems through its own exit path; everything else
// funnels through the library's exit codes.
void add_solver_flags(CLI::App* app, eigprog::cli::SolverOverrides& over) {
    app->add_option("--alpha", [&over](const CLI::results_t& r) {
           over.alpha = std::stod(r[0]);
           return true;
       },
       "step size in (0, 1/L)");
    app->add_option("--tol", [&over](const CLI::results_t& r) {
           over.tol = std::stod(r[0]);
           return true;
       },
       "residual tolerance");
    app->add_option("--max-iter", [&over](const CLI::results_t& r) {
           over.max_iter = std::stoi(r[0]);
           return true;
       },
       "iteration cap per run");
    app->add_option("--restart-cap", [&over](const CLI::results_t& r) {
           over.restart_cap = std::stoi(r[0]);
           return true;
       },
       "restart budget");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"eigenvalue programming over spectral sets"};
    app.require_subcommand(1);

    eigprog::cli::IepCommand iep;
    CLI::App* iep_app = app.add_subcommand(
        "iep", "synthetic inverse-eigenvalue benchmark campaign");
    iep_app->add_option("--l", iep.l, "symmetric blocks");
    iep_app->add_option("--m", iep.m, "second-order-cone blocks");
    iep_app->add_option("--n", iep.n, "block size");
    iep_app->add_option("--rho", iep.rho,
                        "affine dimension fractions (one CSV row each)");
    iep_app->add_option("--ordering", iep.ordering, "blockwise | ordered");
    iep_app->add_option("--seeds", iep.seeds, "instances per cell");
    iep_app->add_option("--seed", iep.seed, "campaign master seed");
    iep_app->add_option("--out", iep.out_dir, "output directory");
    add_solver_flags(iep_app, iep.solver);

    eigprog::cli::EllipsoidsCommand ell;
    CLI::App* ell_app = app.add_subcommand(
        "ellipsoids", "ellipsoid-intersection demo with trajectory output");
    ell_app->add_option("instance", ell.instance_path, "instance JSON file")
        ->required();
    ell_app->add_option("--out", ell.out_dir, "output directory");
    ell_app->add_option("--seed", ell.seed, "seed for random starts");
    ell_app->add_flag("--svg", ell.svg, "write an SVG overlay plot");
    add_solver_flags(ell_app, ell.solver);

    eigprog::cli::SolveCommand solve;
    CLI::App* solve_app =
        app.add_subcommand("solve", "generic spectral feasibility problem");
    solve_app->add_option("problem", solve.problem_path, "problem JSON file")
        ->required();
    solve_app->add_option("--out", solve.out_dir, "output directory");
    add_solver_flags(solve_app, solve.solver);

    CLI11_PARSE(app, argc, argv);

    try {
        if (iep_app->parsed()) return eigprog::cli::cmd_iep(iep);
        if (ell_app->parsed()) return eigprog::cli::cmd_ellipsoids(ell);
        if (solve_app->parsed()) return eigprog::cli::cmd_solve(solve);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
