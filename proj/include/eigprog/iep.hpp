#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "eigprog/rng.hpp"
#include "eigprog/solver.hpp"

namespace eigprog {

// Inverse eigenvalue problem: find c in R^d with
// lambda(a_0 + c_1 a_1 + ... + c_d a_d) = lambda_star.
struct IepInstance {
    AlgebraPtr algebra;
    Element a0;
    std::vector<Element> span;            // a_1 .. a_d
    std::vector<double> target_spectrum;  // lambda_star
    // Set for synthetic instances: the planted coefficients and the planted
    // solution point a_0 + sum c_i a_i (reference for the restart rule).
    std::vector<double> truth_coeffs;
    std::optional<Element> truth_point;
};

// The algebra of the benchmark family: soc_blocks copies of the
// second-order-cone block on R^{n+1} followed by sym_blocks symmetric n x n
// blocks. Its vector-space dimension is m(n+1) + l*n(n+1)/2.
AlgebraPtr iep_algebra(int sym_blocks, int soc_blocks, int n, Ordering ordering);
int iep_dimension(int sym_blocks, int soc_blocks, int n);

// Synthetic instance: coefficients and all element entries uniform on [0, 1);
// the planted point's spectrum becomes the target, so the instance is
// feasible by construction. Throws ConfigError for d < 1.
IepInstance generate_iep_instance(const AlgebraPtr& algebra, int d, Rng& rng);

// Feasibility formulation: affine set a_0 + span{a_i}, spectra constrained to
// {lambda_star}. Throws InvalidSpectrum if the target is not a valid point of
// the algebra's eigenvalue range.
std::pair<AffineSet, SingletonSpectrum> build_iep_feasibility(const IepInstance& inst);

// Least-squares coefficients of (x - a_0) against the generators, via the
// spectral pseudoinverse of the Gram matrix (rank-deficient spans included).
std::vector<double> recover_coefficients(const IepInstance& inst, const Element& x);

// The benchmark restart rule: attempt r starts at
// truth + 100 * |truth| * u / 2^r, where u is a unit vector drawn the same
// way as the instance data (componentwise uniform, normalized). See the
// implementation note about why the direction is not isotropic.
Element iep_initial_point(const Element& truth, int restart, Rng& rng);

struct Stats {
    double mean = 0.0;
    double max = 0.0;
    double min = 0.0;
    double stddev = 0.0;  // sample standard deviation (n - 1)
};

Stats compute_stats(const std::vector<double>& xs);

struct IepCellParams {
    int sym_blocks = 1;
    int soc_blocks = 0;
    int n = 10;
    double rho = 0.8;  // d = floor(dimension * rho)
    Ordering ordering = Ordering::BlockWise;
    int seeds = 10;
    std::uint64_t master_seed = 0;
    SolverConfig solver;
};

struct IepCellResult {
    int sym_blocks = 0;
    int soc_blocks = 0;
    int n = 0;
    int d = 0;
    Ordering ordering = Ordering::BlockWise;
    Stats iterations;
    Stats restarts;
    // True when some seed exhausted the restart budget; that seed contributes
    // its last attempt's iteration count and the full restart count.
    bool budget_exceeded = false;
};

// One benchmark cell: `seeds` independent instances, each solved through the
// restart rule, aggregated into iteration/restart statistics. Seeds run in
// parallel on up to `threads` workers (0 = hardware concurrency); every seed
// owns derived RNG streams, so results do not depend on the thread count.
IepCellResult run_iep_campaign(const IepCellParams& params, int threads = 0);

}  // namespace eigprog
