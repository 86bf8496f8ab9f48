#include "eigprog/iep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <exception>
#include <string>
#include <thread>

#include "eigprog/errors.hpp"
#include "eigprog/sym.hpp"

namespace eigprog {

AlgebraPtr iep_algebra(int sym_blocks, int soc_blocks, int n, Ordering ordering) {
    if (sym_blocks < 0 || soc_blocks < 0 || sym_blocks + soc_blocks < 1)
        throw ConfigError("algebra needs at least one block");
    std::vector<BlockKind> blocks;
    blocks.reserve(static_cast<std::size_t>(sym_blocks + soc_blocks));
    for (int i = 0; i < soc_blocks; ++i) blocks.push_back(BlockKind::soc(n));
    for (int i = 0; i < sym_blocks; ++i) blocks.push_back(BlockKind::sym(n));
    return make_algebra(std::move(blocks), ordering);
}

int iep_dimension(int sym_blocks, int soc_blocks, int n) {
    return soc_blocks * (n + 1) + sym_blocks * n * (n + 1) / 2;
}

IepInstance generate_iep_instance(const AlgebraPtr& algebra, int d, Rng& rng) {
    if (d < 1) throw ConfigError("instance needs an affine dimension d >= 1");
    IepInstance inst{algebra, random_uniform_element(algebra, rng), {}, {}, {}, {}};
    inst.span.reserve(static_cast<std::size_t>(d));
    inst.truth_coeffs.reserve(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        inst.truth_coeffs.push_back(rng.uniform01());
        inst.span.push_back(random_uniform_element(algebra, rng));
    }
    Element x = inst.a0;
    for (int i = 0; i < d; ++i)
        x = axpy(inst.truth_coeffs[static_cast<std::size_t>(i)],
                 inst.span[static_cast<std::size_t>(i)], x);
    inst.target_spectrum = eigen_map(x);
    inst.truth_point = std::move(x);
    return inst;
}

std::pair<AffineSet, SingletonSpectrum> build_iep_feasibility(const IepInstance& inst) {
    if (!inst.algebra) throw ConfigError("instance needs an algebra");
    if (!is_valid_spectrum(*inst.algebra, inst.target_spectrum, 0.0))
        throw InvalidSpectrum("target spectrum is not a point of the eigenvalue range");
    return {AffineSet(inst.a0, inst.span),
            SingletonSpectrum(inst.algebra, inst.target_spectrum)};
}

std::vector<double> recover_coefficients(const IepInstance& inst, const Element& x) {
    const int d = static_cast<int>(inst.span.size());
    const Element rhs = sub(x, inst.a0);
    // Solve the normal equations G c = h through the eigendecomposition of
    // the Gram matrix so near-dependent generators stay well defined.
    std::vector<double> gram(static_cast<std::size_t>(d) * static_cast<std::size_t>(d));
    std::vector<double> h(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        h[static_cast<std::size_t>(i)] = inner(inst.span[static_cast<std::size_t>(i)], rhs);
        for (int j = i; j < d; ++j) {
            const double g = inner(inst.span[static_cast<std::size_t>(i)],
                                   inst.span[static_cast<std::size_t>(j)]);
            gram[static_cast<std::size_t>(i * d + j)] = g;
            gram[static_cast<std::size_t>(j * d + i)] = g;
        }
    }
    const SymEigen eig = sym_eigen(gram, d);
    const double floor = 1e-12 * std::max(eig.values.empty() ? 0.0 : eig.values[0], 0.0);
    std::vector<double> c(static_cast<std::size_t>(d), 0.0);
    for (int k = 0; k < d; ++k) {
        const double ev = eig.values[static_cast<std::size_t>(k)];
        if (ev <= floor) continue;
        double dot = 0.0;
        for (int j = 0; j < d; ++j)
            dot += eig.vectors[static_cast<std::size_t>(k * d + j)] *
                   h[static_cast<std::size_t>(j)];
        dot /= ev;
        for (int j = 0; j < d; ++j)
            c[static_cast<std::size_t>(j)] +=
                dot * eig.vectors[static_cast<std::size_t>(k * d + j)];
    }
    return c;
}

Element iep_initial_point(const Element& truth, int restart, Rng& rng) {
    // Direction drawn like the instance data itself (componentwise uniform,
    // then normalized).  An isotropic direction sends the iterates into
    // regions where the affine span and the isospectral manifold meet at a
    // near-tangential angle, inflating iteration counts by two orders of
    // magnitude on the well-posed cells; a positive direction keeps the
    // start aligned with the dominant eigenvector of the (positive) data.
    Element g = random_uniform_element(truth.algebra_ptr(), rng);
    const double gn = norm(g);
    const Element u = scale(gn > 0.0 ? 1.0 / gn : 0.0, g);
    const double radius = 100.0 * norm(truth) * std::pow(2.0, -restart);
    return axpy(radius, u, truth);
}

Stats compute_stats(const std::vector<double>& xs) {
    Stats s;
    if (xs.empty()) return s;
    s.min = *std::min_element(xs.begin(), xs.end());
    s.max = *std::max_element(xs.begin(), xs.end());
    double sum = 0.0;
    for (double x : xs) sum += x;
    s.mean = sum / static_cast<double>(xs.size());
    if (xs.size() > 1) {
        double sq = 0.0;
        for (double x : xs) sq += (x - s.mean) * (x - s.mean);
        s.stddev = std::sqrt(sq / static_cast<double>(xs.size() - 1));
    }
    return s;
}

namespace {

struct SeedOutcome {
    double iterations = 0.0;
    double restarts = 0.0;
    bool exhausted = false;
};

// Separate stream tags so instance data and restart directions never overlap.
constexpr std::uint64_t kInstanceTag = 0x1e57a9ce;
constexpr std::uint64_t kRestartTag = 0x2e57a27;

}  // namespace

IepCellResult run_iep_campaign(const IepCellParams& params, int threads) {
    if (params.seeds < 1) throw ConfigError("campaign needs at least one seed");
    if (params.rho <= 0.0 || params.rho > 1.0)
        throw ConfigError("rho must lie in (0, 1]");
    const AlgebraPtr algebra =
        iep_algebra(params.sym_blocks, params.soc_blocks, params.n, params.ordering);
    const int d = static_cast<int>(
        std::floor(iep_dimension(params.sym_blocks, params.soc_blocks, params.n) *
                   params.rho));
    if (d < 1) throw ConfigError("rho too small: affine dimension came out empty");

    std::vector<SeedOutcome> outcomes(static_cast<std::size_t>(params.seeds));
    std::vector<std::exception_ptr> failures(static_cast<std::size_t>(params.seeds));
    auto run_seed = [&](int seed_index) {
        Rng instance_rng(
            derive_stream(params.master_seed, kInstanceTag, static_cast<std::uint64_t>(seed_index)));
        const IepInstance inst = generate_iep_instance(algebra, d, instance_rng);
        auto [affine, constraint] = build_iep_feasibility(inst);
        auto initial_point = [&](int restart) {
            Rng rng(derive_stream(params.master_seed, kRestartTag,
                                  static_cast<std::uint64_t>(seed_index),
                                  static_cast<std::uint64_t>(restart)));
            return iep_initial_point(*inst.truth_point, restart, rng);
        };
        const RestartOutcome out =
            run_with_restarts(affine, constraint, initial_point, params.solver);
        outcomes[static_cast<std::size_t>(seed_index)] =
            SeedOutcome{static_cast<double>(out.report.iterations),
                        static_cast<double>(out.report.restarts), out.exhausted};
    };

    auto guarded = [&](int seed_index) {
        try {
            run_seed(seed_index);
        } catch (...) {
            failures[static_cast<std::size_t>(seed_index)] = std::current_exception();
        }
    };

    int workers = threads > 0 ? threads
                              : static_cast<int>(std::thread::hardware_concurrency());
    workers = std::max(1, std::min(workers, params.seeds));
    if (workers == 1) {
        for (int i = 0; i < params.seeds; ++i) guarded(i);
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (int i = next.fetch_add(1); i < params.seeds; i = next.fetch_add(1))
                    guarded(i);
            });
        for (std::thread& t : pool) t.join();
    }
    for (const std::exception_ptr& e : failures)
        if (e) std::rethrow_exception(e);

    IepCellResult res;
    res.sym_blocks = params.sym_blocks;
    res.soc_blocks = params.soc_blocks;
    res.n = params.n;
    res.d = d;
    res.ordering = params.ordering;
    std::vector<double> iters, restarts;
    iters.reserve(outcomes.size());
    restarts.reserve(outcomes.size());
    for (const SeedOutcome& o : outcomes) {
        iters.push_back(o.iterations);
        restarts.push_back(o.restarts);
        res.budget_exceeded = res.budget_exceeded || o.exhausted;
    }
    res.iterations = compute_stats(iters);
    res.restarts = compute_stats(restarts);
    return res;
}

}  // namespace eigprog
