#pragma once

#include <span>
#include <vector>

#include "eigprog/element.hpp"

namespace eigprog {

// Frame data of one block, enough to rebuild any element that shares the
// block's eigenvectors:
//   Soc   u = unit direction w of the x part (v unused)
//   Sym   u = n x n orthogonal matrix, rows are eigenvectors (v unused)
//   Rect  u = m x m, v = n x n orthogonal factors, rows are singular vectors
struct BlockFrame {
    std::vector<double> u;
    std::vector<double> v;
};

// Full spectral data of an element. `eigenvalues` holds the block-wise
// layout (per-block descending segments) regardless of the algebra's
// ordering; `order` is filled for globally ordered algebras and maps global
// rank k to the block-wise position of the k-th largest eigenvalue, with
// ties resolved by (block index, within-block index) — deterministic.
struct SpectralDecomposition {
    AlgebraPtr algebra;
    std::vector<double> eigenvalues;
    std::vector<BlockFrame> frames;
    std::vector<int> order;

    // The eigenvalue vector in the algebra's own convention (sorted through
    // `order` when globally ordered, the block-wise buffer otherwise).
    std::vector<double> spectrum() const;
};

// lambda(x) under the algebra's ordering convention.
std::vector<double> eigen_map(const Element& x);

SpectralDecomposition spectral_decompose(const Element& x);

// Rebuilds an element from per-block spectra (block-wise layout) and the
// given frames. Inverse of spectral_decompose when fed its own eigenvalues.
Element synthesize(const SpectralDecomposition& d, std::span<const double> mu_blockwise);

// A member of U(c, mu) = { z : lambda(z) = mu, <c, z> = <lambda(c), lambda(mu)> },
// selected deterministically by c's frames. In a globally ordered algebra the
// k-th entry of mu is attached to the frame direction of c's k-th largest
// eigenvalue. mu must be descending (per block or globally, to match the
// algebra) and nonnegative on rectangular segments; violations up to 1e-12
// are clamped, anything worse raises InvalidSpectrum.
Element u_element(const Element& c, std::span<const double> mu);
Element u_element(const SpectralDecomposition& c, std::span<const double> mu);

// True when mu is a valid point of the algebra's eigenvalue range within tol.
bool is_valid_spectrum(const AlgebraDescriptor& alg, std::span<const double> mu,
                       double tol = 1e-12);

// Copy of mu with violations up to tol clamped; throws InvalidSpectrum beyond.
std::vector<double> sanitize_spectrum(const AlgebraDescriptor& alg,
                                      std::span<const double> mu, double tol = 1e-12);

}  // namespace eigprog
