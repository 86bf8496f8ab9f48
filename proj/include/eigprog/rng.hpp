#pragma once

#include <cstdint>
#include <random>

#include "eigprog/element.hpp"

namespace eigprog {

// mt19937_64 with explicit output transforms. std::uniform_real_distribution
// and friends are implementation-defined, which would break the promise that
// a (config, seed) pair yields byte-identical result files; these transforms
// are pinned here instead.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // Uniform on [0, 1), 53-bit resolution.
    double uniform01() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    // Standard normal via Box-Muller (cosine branch only — stateless, so
    // interleaving with other draws stays reproducible).
    double gaussian();

  private:
    std::mt19937_64 gen_;
};

// Mixes a master seed with up to three stream indices (splitmix64 rounds) so
// concurrent solves can own disjoint, reproducible streams.
std::uint64_t derive_stream(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0,
                            std::uint64_t c = 0);

// Every coefficient uniform on [0, 1); symmetric blocks draw their upper
// triangle (row-major) and mirror it.
Element random_uniform_element(const AlgebraPtr& algebra, Rng& rng);

// Isotropic Gaussian with respect to the algebra's inner product: symmetric
// blocks draw N(0,1) diagonals and N(0, 1/2) mirrored off-diagonals so the
// density depends on the Frobenius norm only; other blocks draw i.i.d. N(0,1).
Element random_gaussian_element(const AlgebraPtr& algebra, Rng& rng);

// Uniform on the unit sphere of the algebra (Gaussian direction normalized).
Element random_unit_direction(const AlgebraPtr& algebra, Rng& rng);

}  // namespace eigprog
