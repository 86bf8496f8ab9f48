#include "eigprog/solver.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "eigprog/errors.hpp"

namespace eigprog {

const char* to_string(Termination t) {
    switch (t) {
        case Termination::Converged: return "Converged";
        case Termination::MaxIterations: return "MaxIterations";
        case Termination::Stalled: return "Stalled";
    }
    return "?";
}

namespace {

double step_size(const SolverConfig& cfg, int k, double lipschitz) {
    const double a = cfg.step_schedule ? cfg.step_schedule(k) : cfg.alpha;
    if (!(a > 0.0) || !(a * lipschitz < 1.0))
        throw ConfigError("step size " + std::to_string(a) +
                          " violates 0 < alpha < 1/L with L = " +
                          std::to_string(lipschitz));
    return a;
}

}  // namespace

SolveReport projected_gradient(const Objective& f, const SpectralConstraint& c,
                               const Element& x0, const SolverConfig& cfg) {
    if (!f.gradient) throw ConfigError("objective needs a gradient");
    if (cfg.max_iterations < 1) throw ConfigError("max_iterations must be positive");
    if (!all_finite(x0.data())) throw NonFiniteValue("starting point is not finite");

    const bool has_residual = static_cast<bool>(f.residual);
    auto residual_at = [&](const Element& x) {
        const double r = f.residual(x);
        if (!std::isfinite(r)) throw NonFiniteValue("residual is not finite");
        return r;
    };

    SolveReport rep{.final_point = x0, .reason = Termination::MaxIterations,
                    .iterations = 0, .restarts = 0, .residuals = {}, .step_norms = {},
                    .iterates = {}};
    rep.step_norms.reserve(64);
    if (has_residual) {
        rep.residuals.reserve(64);
        rep.residuals.push_back(residual_at(x0));
    }
    if (cfg.record_iterates) rep.iterates.push_back(x0);

    Element x = x0;
    for (int k = 0; k < cfg.max_iterations; ++k) {
        const double a = step_size(cfg, k, f.lipschitz);
        if (f.value) {
            const double fx = f.value(x);
            if (!std::isfinite(fx)) throw NonFiniteValue("objective value is not finite");
        }
        const Element g = f.gradient(x);
        if (!all_finite(g.data())) throw NonFiniteValue("gradient is not finite");
        const Element y = axpy(-a, g, x);
        Element next = project_spectral_set(y, c);
        if (!all_finite(next.data())) throw NonFiniteValue("iterate is not finite");

        const double step = distance(next, x);
        rep.step_norms.push_back(step);
        x = std::move(next);
        rep.iterations = k + 1;
        if (cfg.record_iterates) rep.iterates.push_back(x);

        double r = 0.0;
        if (has_residual) {
            r = residual_at(x);
            rep.residuals.push_back(r);
            if (r <= cfg.tolerance) {
                rep.reason = Termination::Converged;
                rep.final_point = std::move(x);
                return rep;
            }
        }
        if (step < cfg.stall_step) {
            rep.reason = Termination::Stalled;
            rep.final_point = std::move(x);
            return rep;
        }
    }
    rep.reason = Termination::MaxIterations;
    rep.final_point = std::move(x);
    return rep;
}

SolveReport solve_feasibility(const AffineSet& affine, const SpectralConstraint& c,
                              const Element& x0, const SolverConfig& cfg) {
    Objective f;
    f.lipschitz = 1.0;
    f.gradient = [&affine](const Element& x) { return sub(x, affine.project(x)); };
    // No separate value callback: the residual doubles as sqrt(2 f), and
    // skipping it saves one affine projection per iteration.
    f.residual = [&affine](const Element& x) { return affine.distance(x); };
    return projected_gradient(f, c, x0, cfg);
}

RestartOutcome run_with_restarts(const AffineSet& affine, const SpectralConstraint& c,
                                 const std::function<Element(int)>& initial_point,
                                 const SolverConfig& cfg) {
    if (!initial_point) throw ConfigError("restart loop needs an initial-point rule");
    if (cfg.restart_cap < 0) throw ConfigError("restart cap must be nonnegative");
    RestartOutcome out{solve_feasibility(affine, c, initial_point(0), cfg), false};
    for (int r = 0;; ++r) {
        out.report.restarts = r;
        if (out.report.reason == Termination::Converged) return out;
        if (r == cfg.restart_cap) break;
        out.report = solve_feasibility(affine, c, initial_point(r + 1), cfg);
    }
    out.exhausted = true;
    return out;
}

SolveReport restart_loop(const AffineSet& affine, const SpectralConstraint& c,
                         const std::function<Element(int)>& initial_point,
                         const SolverConfig& cfg) {
    RestartOutcome out = run_with_restarts(affine, c, initial_point, cfg);
    if (out.exhausted)
        throw RestartBudgetExceeded("no run converged within " +
                                    std::to_string(cfg.restart_cap) + " restarts");
    return std::move(out.report);
}

}  // namespace eigprog
