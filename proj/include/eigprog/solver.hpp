#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "eigprog/affine.hpp"
#include "eigprog/constraints.hpp"

namespace eigprog {

enum class Termination { Converged, MaxIterations, Stalled };

const char* to_string(Termination t);

struct SolverConfig {
    // Fixed step size; must satisfy 0 < alpha * L < 1. A per-iteration
    // schedule (same constraint at every k) overrides it when set.
    double alpha = 0.99;
    std::function<double(int)> step_schedule;
    int max_iterations = 10000;
    // Convergence threshold on the residual (dist(x_k, affine set) for
    // feasibility runs).
    double tolerance = 1e-3;
    // Step norms below this without meeting the tolerance count as a stall.
    double stall_step = 1e-14;
    // Restart budget for restart_loop.
    int restart_cap = 50;
    // Keep the full iterate history (trajectories); off for campaigns.
    bool record_iterates = false;
};

struct SolveReport {
    Element final_point;
    Termination reason = Termination::MaxIterations;
    int iterations = 0;
    int restarts = 0;
    // residuals[k] is the residual at iterate k (index 0 = starting point),
    // so the vector has iterations + 1 entries when a residual is defined.
    std::vector<double> residuals;
    // step_norms[k] = |x_{k+1} - x_k|.
    std::vector<double> step_norms;
    // Filled only when SolverConfig::record_iterates is set; includes x_0.
    std::vector<Element> iterates;
};

// Smooth part of the objective. `gradient` is mandatory; `value` and
// `residual` are consulted when present (residual drives the convergence
// test; without one the solver runs to stall or the iteration cap).
struct Objective {
    std::function<Element(const Element&)> gradient;
    std::function<double(const Element&)> value;
    std::function<double(const Element&)> residual;
    double lipschitz = 1.0;
};

// Projected gradient on min f(x) s.t. lambda(x) in C:
//
//   y_k     = x_k - alpha_k * grad f(x_k)
//   x_{k+1} = nearest point of lambda^{-1}(C) to y_k
//
// Iterates from k = 1 on satisfy the spectral constraint by construction.
// Throws NonFiniteValue when f, its gradient, or an iterate goes NaN/Inf,
// and ConfigError for step sizes outside (0, 1/L).
SolveReport projected_gradient(const Objective& f, const SpectralConstraint& c,
                               const Element& x0, const SolverConfig& cfg);

// Feasibility specialization: f(x) = dist(x, A)^2 / 2 for an affine A, whose
// gradient x - proj_A(x) is 1-Lipschitz, so the default alpha = 0.99 applies.
// The update collapses to x_{k+1} = proj_{lambda^{-1}(C)}((1-a) x_k + a proj_A(x_k)).
SolveReport solve_feasibility(const AffineSet& affine, const SpectralConstraint& c,
                              const Element& x0, const SolverConfig& cfg = {});

// Runs solve_feasibility from initial_point(0), initial_point(1), ... until a
// run converges or the restart budget cfg.restart_cap is spent. The report of
// the successful run is returned with `restarts` set.
struct RestartOutcome {
    SolveReport report;  // last attempt (successful one when !exhausted)
    bool exhausted = false;
};

RestartOutcome run_with_restarts(const AffineSet& affine, const SpectralConstraint& c,
                                 const std::function<Element(int)>& initial_point,
                                 const SolverConfig& cfg = {});

// As above but throws RestartBudgetExceeded instead of reporting exhaustion.
SolveReport restart_loop(const AffineSet& affine, const SpectralConstraint& c,
                         const std::function<Element(int)>& initial_point,
                         const SolverConfig& cfg = {});

}  // namespace eigprog
