#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eigprog/iep.hpp"
#include "eigprog/vqc.hpp"

namespace eigprog::cli {

// Process exit codes shared by all commands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;        // bad flags / malformed instance
inline constexpr int kExitRestartBudget = 3; // some campaign cell ran out of restarts
inline constexpr int kExitNoProgress = 4;    // no start converged

// Solver settings that may arrive from an instance file, from flags, or both;
// unset optionals fall back to the file value, then to the defaults.
struct SolverOverrides {
    std::optional<double> alpha;
    std::optional<double> tol;
    std::optional<int> max_iter;
    std::optional<int> restart_cap;
};

SolverConfig merge_solver(SolverConfig base, const SolverOverrides& over);

// `eigprog iep`: synthetic benchmark campaign; one CSV row per rho value.
struct IepCommand {
    int l = 1;   // symmetric blocks
    int m = 0;   // second-order-cone blocks
    int n = 10;  // block size
    std::vector<double> rho = {0.2, 0.4, 0.6, 0.8};
    std::string ordering = "blockwise";  // blockwise | ordered
    int seeds = 10;
    std::uint64_t seed = 0;
    SolverOverrides solver;
    std::string out_dir = ".";
};

int cmd_iep(const IepCommand& cmd);

// `eigprog ellipsoids <instance.json>`: per-start trajectory CSVs and an
// optional SVG overlay of outlines and trajectories.
struct EllipsoidsCommand {
    std::string instance_path;
    std::string out_dir = ".";
    bool svg = false;
    std::uint64_t seed = 0;  // for random_starts requested by the instance
    SolverOverrides solver;
};

int cmd_ellipsoids(const EllipsoidsCommand& cmd);

// `eigprog solve <problem.json>`: generic spectral feasibility run, one solve
// per listed start, JSON report.
struct SolveCommand {
    std::string problem_path;
    std::string out_dir = ".";
    SolverOverrides solver;
};

int cmd_solve(const SolveCommand& cmd);

// EIGPROG_THREADS caps campaign parallelism; 0 means "let the library pick".
int thread_cap_from_env();

// Formats a double with 6 significant digits, '.' decimal separator.
std::string format_number(double v);

Ordering parse_ordering(const std::string& s);
const char* ordering_name(Ordering o);

}  // namespace eigprog::cli
