#include "eigprog/rng.hpp"

#include <cmath>
#include <cstddef>

#include "eigprog/errors.hpp"

namespace eigprog {

double Rng::gaussian() {
    // Guard the log: uniform01 can return exactly 0.
    double u1 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * 3.14159265358979323846 * u2);
}

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

std::uint64_t derive_stream(std::uint64_t master, std::uint64_t a, std::uint64_t b,
                            std::uint64_t c) {
    std::uint64_t s = splitmix64(master);
    s = splitmix64(s ^ (a + 0x9e3779b97f4a7c15ULL));
    s = splitmix64(s ^ (b + 0x7f4a7c159e3779b9ULL));
    s = splitmix64(s ^ (c + 0x85ebca6b2c52d879ULL));
    return s;
}

Element random_uniform_element(const AlgebraPtr& algebra, Rng& rng) {
    if (!algebra) throw ConfigError("sampler needs an algebra");
    std::vector<double> buf(static_cast<std::size_t>(algebra->ambient_dim()), 0.0);
    for (int b = 0; b < algebra->block_count(); ++b) {
        const BlockKind& k = algebra->blocks()[static_cast<std::size_t>(b)];
        double* p = buf.data() + algebra->block_offset(b);
        if (k.tag == BlockKind::Tag::Sym) {
            const int n = k.n;
            for (int i = 0; i < n; ++i)
                for (int j = i; j < n; ++j) {
                    const double v = rng.uniform01();
                    p[i * n + j] = v;
                    p[j * n + i] = v;
                }
        } else {
            for (int i = 0; i < k.ambient_dim(); ++i) p[i] = rng.uniform01();
        }
    }
    return Element(algebra, std::move(buf));
}

Element random_gaussian_element(const AlgebraPtr& algebra, Rng& rng) {
    if (!algebra) throw ConfigError("sampler needs an algebra");
    constexpr double kInvSqrt2 = 0.70710678118654752440;
    std::vector<double> buf(static_cast<std::size_t>(algebra->ambient_dim()), 0.0);
    for (int b = 0; b < algebra->block_count(); ++b) {
        const BlockKind& k = algebra->blocks()[static_cast<std::size_t>(b)];
        double* p = buf.data() + algebra->block_offset(b);
        if (k.tag == BlockKind::Tag::Sym) {
            const int n = k.n;
            for (int i = 0; i < n; ++i)
                for (int j = i; j < n; ++j) {
                    // Off-diagonal pairs share one draw scaled by 1/sqrt(2):
                    // exp(-|X|_F^2 / 2) then factorizes over the free entries,
                    // making the direction isotropic in the symmetric subspace.
                    const double v = rng.gaussian() * (i == j ? 1.0 : kInvSqrt2);
                    p[i * n + j] = v;
                    p[j * n + i] = v;
                }
        } else {
            for (int i = 0; i < k.ambient_dim(); ++i) p[i] = rng.gaussian();
        }
    }
    return Element(algebra, std::move(buf));
}

Element random_unit_direction(const AlgebraPtr& algebra, Rng& rng) {
    for (;;) {
        const Element g = random_gaussian_element(algebra, rng);
        const double n = norm(g);
        if (n > 1e-12) return scale(1.0 / n, g);
    }
}

}  // namespace eigprog
