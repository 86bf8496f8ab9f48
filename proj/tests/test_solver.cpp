#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <limits>
#include <vector>

#include "eigprog/affine.hpp"
#include "eigprog/errors.hpp"
#include "eigprog/rng.hpp"
#include "eigprog/solver.hpp"

using namespace eigprog;

namespace {

// identity spectral constraint: the whole space is feasible
CustomSpectrum pass_through(int rank) {
    return CustomSpectrum(rank, [](std::span<const double> v) {
        return std::vector<double>(v.begin(), v.end());
    });
}

}  // namespace

TEST_CASE("affine projection basics") {
    AlgebraPtr a = soc_algebra(1);  // plain R^2
    Element base(a, std::vector<double>{0.0, 0.0});
    Element dir(a, std::vector<double>{1.0, 0.0});
    AffineSet line(base, {dir});

    Element x(a, std::vector<double>{3.0, 4.0});
    Element p = line.project(x);
    CHECK(p.data()[0] == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(p.data()[1] == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(line.distance(x) == doctest::Approx(4.0).epsilon(1e-15));

    // points of the set are fixed
    Element on(a, std::vector<double>{-7.5, 0.0});
    CHECK(distance(line.project(on), on) == 0.0);

    // empty span projects everything to the base point
    AffineSet pt(base, {});
    CHECK(distance(pt.project(x), base) == 0.0);

    // dependent generators are dropped, projection unchanged
    AffineSet dup(base, {dir, dir, scale(2.0, dir)});
    CHECK(dup.basis().size() == 1);
    CHECK(distance(dup.project(x), p) < 1e-15);
}

TEST_CASE("zero gradient fixes the iterates after one projection") {
    AlgebraPtr a = sym_algebra(2);
    SingletonSpectrum c(a, std::vector<double>{1.0, 0.0});
    Element x0(a, std::vector<double>{5, 1, 1, 3});

    Objective f;
    f.gradient = [&](const Element& x) { return Element::zeros(x.algebra_ptr()); };
    SolverConfig cfg;
    cfg.max_iterations = 4;
    SolveReport rep = projected_gradient(f, c, x0, cfg);
    CHECK(rep.reason == Termination::Stalled);  // fixed point, no residual defined
    Element p1 = project_spectral_set(x0, c);
    CHECK(distance(rep.final_point, p1) < 1e-12);
}

TEST_CASE("feasible starts converge immediately") {
    AlgebraPtr a = sym_algebra(2);
    Element sol(a, std::vector<double>{1, 0, 0, 0});
    AffineSet aff(sol, {});
    SingletonSpectrum c(a, std::vector<double>{1.0, 0.0});
    SolveReport rep = solve_feasibility(aff, c, sol);
    CHECK(rep.reason == Termination::Converged);
    CHECK(rep.iterations == 1);
    CHECK(rep.residuals.back() < 1e-12);
}

TEST_CASE("singleton feasibility on a constructed instance") {
    // affine set contains diag(2, 1) and the target spectrum is (2, 1)
    AlgebraPtr a = sym_algebra(2);
    Element base(a, std::vector<double>{2, 0, 0, 0});
    Element g(a, std::vector<double>{0, 0, 0, 1});
    AffineSet aff(base, {g});
    SingletonSpectrum c(a, std::vector<double>{2.0, 1.0});
    Element x0(a, std::vector<double>{4, 1, 1, -2});
    SolveReport rep = solve_feasibility(aff, c, x0);
    CHECK(rep.reason == Termination::Converged);
    CHECK(rep.residuals.back() <= 1e-3);
    // iterates satisfy the spectral constraint from k = 1 on
    std::vector<double> lam = eigen_map(rep.final_point);
    CHECK(lam[0] == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(lam[1] == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("objective values decrease sufficiently") {
    // F(x_{k+1}) <= F(x_k) - (1/(2a) - L/2) |x_{k+1} - x_k|^2 with margin
    Rng rng(101);
    AlgebraPtr a = make_algebra({BlockKind::soc(3), BlockKind::sym(3)});
    for (int rep = 0; rep < 10; ++rep) {
        Element base = random_gaussian_element(a, rng);
        std::vector<Element> span;
        for (int i = 0; i < 5; ++i) span.push_back(random_gaussian_element(a, rng));
        AffineSet aff(base, span);
        std::vector<double> target =
            eigen_map(random_gaussian_element(a, rng));
        SingletonSpectrum c(a, target);
        // The decrease lemma compares subproblem values at feasible points,
        // so it binds once the iterate lies in the spectral set; start there.
        Element x0 = project_spectral_set(
            scale(3.0, random_gaussian_element(a, rng)), c);
        SolverConfig cfg;
        cfg.max_iterations = 400;
        SolveReport r = solve_feasibility(aff, c, x0, cfg);
        const double margin = 1.0 / (2.0 * 0.99) - 0.5;  // > 0.005
        for (std::size_t k = 0; k + 1 < r.residuals.size(); ++k) {
            double fk = 0.5 * r.residuals[k] * r.residuals[k];
            double fk1 = 0.5 * r.residuals[k + 1] * r.residuals[k + 1];
            double st = r.step_norms[k];
            CHECK(fk1 <= fk - 0.005 * st * st + 1e-10 * (1.0 + fk));
            (void)margin;
        }
    }
}

TEST_CASE("stalls at a stationary non-solution") {
    // affine set of scalar matrices vs spectrum (1, 0): the composition has a
    // fixed point diag(1, 0) that is not feasible
    AlgebraPtr a = sym_algebra(2);
    Element base = Element::zeros(a);
    Element g(a, std::vector<double>{1, 0, 0, 1});
    AffineSet aff(base, {g});
    SingletonSpectrum c(a, std::vector<double>{1.0, 0.0});
    Element x0(a, std::vector<double>{3, 0, 0, 1});
    SolveReport rep = solve_feasibility(aff, c, x0);
    CHECK(rep.reason == Termination::Stalled);
    CHECK(rep.residuals.back() > 1e-3);
    Element fixed(a, std::vector<double>{1, 0, 0, 0});
    CHECK(distance(rep.final_point, fixed) < 1e-10);
}

TEST_CASE("iterate recording and residual bookkeeping") {
    AlgebraPtr a = sym_algebra(2);
    Element base(a, std::vector<double>{2, 0, 0, 0});
    Element g(a, std::vector<double>{0, 0, 0, 1});
    AffineSet aff(base, {g});
    SingletonSpectrum c(a, std::vector<double>{2.0, 1.0});
    Element x0(a, std::vector<double>{4, 1, 1, -2});
    SolverConfig cfg;
    cfg.record_iterates = true;
    SolveReport rep = solve_feasibility(aff, c, x0, cfg);
    REQUIRE(!rep.iterates.empty());
    CHECK(static_cast<int>(rep.iterates.size()) == rep.iterations + 1);
    CHECK(static_cast<int>(rep.residuals.size()) == rep.iterations + 1);
    CHECK(static_cast<int>(rep.step_norms.size()) == rep.iterations);
    CHECK(distance(rep.iterates.front(), x0) == 0.0);
    CHECK(distance(rep.iterates.back(), rep.final_point) == 0.0);
    // residual entries match recomputed distances
    for (std::size_t k = 0; k < rep.iterates.size(); ++k)
        CHECK(rep.residuals[k] ==
              doctest::Approx(aff.distance(rep.iterates[k])).epsilon(1e-12));
}

TEST_CASE("step size validation") {
    AlgebraPtr a = sym_algebra(2);
    AffineSet aff(Element::zeros(a), {});
    SingletonSpectrum c(a, std::vector<double>{1.0, 0.0});
    Element x0(a, std::vector<double>{1, 0, 0, 0});
    SolverConfig cfg;
    cfg.alpha = 1.0;
    CHECK_THROWS_AS(solve_feasibility(aff, c, x0, cfg), ConfigError);
    cfg.alpha = 0.0;
    CHECK_THROWS_AS(solve_feasibility(aff, c, x0, cfg), ConfigError);
    cfg.alpha = -0.5;
    CHECK_THROWS_AS(solve_feasibility(aff, c, x0, cfg), ConfigError);
    // schedules are validated per iteration; start far enough from the
    // spectral set that iteration 1 is actually reached
    cfg.alpha = 0.5;
    cfg.step_schedule = [](int k) { return k == 0 ? 0.5 : 1.5; };
    Element far(a, std::vector<double>{3, 0, 0, 1});
    CHECK_THROWS_AS(solve_feasibility(aff, c, far, cfg), ConfigError);
}

TEST_CASE("non-finite values are fatal") {
    AlgebraPtr a = sym_algebra(2);
    AffineSet aff(Element::zeros(a), {});
    SingletonSpectrum c(a, std::vector<double>{1.0, 0.0});
    std::vector<double> bad{std::numeric_limits<double>::infinity(), 0, 0, 0};
    CHECK_THROWS_AS(solve_feasibility(aff, c, Element(a, bad)), NonFiniteValue);

    Objective f;
    f.gradient = [&](const Element& x) {
        std::vector<double> g(x.data().begin(), x.data().end());
        g[0] = std::numeric_limits<double>::quiet_NaN();
        return Element(x.algebra_ptr(), g);
    };
    Element x0(a, std::vector<double>{1, 0, 0, 0});
    CHECK_THROWS_AS(projected_gradient(f, pass_through(2), x0, SolverConfig{}),
                    NonFiniteValue);
}

TEST_CASE("restart loop outcomes") {
    AlgebraPtr a = sym_algebra(2);
    // solvable: target spectrum reachable inside the affine set
    Element base(a, std::vector<double>{2, 0, 0, 0});
    Element g(a, std::vector<double>{0, 0, 0, 1});
    AffineSet aff(base, {g});
    SingletonSpectrum c(a, std::vector<double>{2.0, 1.0});
    Element start(a, std::vector<double>{4, 1, 1, -2});
    RestartOutcome out =
        run_with_restarts(aff, c, [&](int) { return start; }, SolverConfig{});
    CHECK(!out.exhausted);
    CHECK(out.report.restarts == 0);
    CHECK(out.report.reason == Termination::Converged);

    // unsolvable: scalar-matrix line vs spectrum (1, 0) stalls forever
    AffineSet line(Element::zeros(a), {Element(a, std::vector<double>{1, 0, 0, 1})});
    SingletonSpectrum c2(a, std::vector<double>{1.0, 0.0});
    SolverConfig tight;
    tight.restart_cap = 3;
    RestartOutcome bad = run_with_restarts(
        line, c2, [&](int r) {
            return Element(a, std::vector<double>{3.0 + r, 0, 0, 1});
        },
        tight);
    CHECK(bad.exhausted);
    CHECK(bad.report.restarts == 3);
    CHECK_THROWS_AS(restart_loop(
                        line, c2,
                        [&](int r) {
                            return Element(a, std::vector<double>{3.0 + r, 0, 0, 1});
                        },
                        tight),
                    RestartBudgetExceeded);
}

TEST_CASE("runs are deterministic") {
    Rng rng1(7), rng2(7);
    AlgebraPtr a = make_algebra({BlockKind::soc(2), BlockKind::sym(3)});
    Element base1 = random_gaussian_element(a, rng1);
    Element base2 = random_gaussian_element(a, rng2);
    AffineSet aff1(base1, {});
    AffineSet aff2(base2, {});
    std::vector<double> t{3.0, 1.0, 2.0, 1.0, 0.0};
    SingletonSpectrum c(a, t);
    Element x01 = scale(5.0, random_gaussian_element(a, rng1));
    Element x02 = scale(5.0, random_gaussian_element(a, rng2));
    SolveReport r1 = solve_feasibility(aff1, c, x01);
    SolveReport r2 = solve_feasibility(aff2, c, x02);
    CHECK(r1.iterations == r2.iterations);
    REQUIRE(r1.residuals.size() == r2.residuals.size());
    for (std::size_t k = 0; k < r1.residuals.size(); ++k)
        CHECK(r1.residuals[k] == r2.residuals[k]);  // bitwise
    CHECK(distance(r1.final_point, r2.final_point) == 0.0);
}
