#pragma once

#include <span>
#include <vector>

#include "eigprog/sym.hpp"

namespace eigprog {

// Singular value decomposition of an m x n matrix in the sandwich form
//
//   X = U^T Diag(sigma) V,   U in R^{m x m},  V in R^{n x n},
//
// with Diag(sigma) padded to m x n, sigma descending and nonnegative, and
// rows of U / V holding the left / right singular vectors (the same
// rows-are-vectors convention as SymEigen). Equivalently
// X_ij = sum_k sigma_k U_{k i} V_{k j}.
struct RectSvd {
    std::vector<double> sigma;  // length min(m, n)
    std::vector<double> u;      // m x m, row-major, orthogonal
    std::vector<double> v;      // n x n, row-major, orthogonal
};

// Computed from the eigendecomposition of the smaller Gram matrix (X^T X or
// X X^T); the complementary factor comes from normalizing X v_k / sigma_k,
// and directions whose singular value falls below 1e-12 * sigma_1 are
// completed to an orthonormal basis by Gram-Schmidt against the canonical
// basis. Each triple is normalized so the first nonzero entry of row k of V
// is positive, which makes the factorization deterministic.
RectSvd svd(std::span<const double> x, int m, int n, const SymEigenOptions& opt = {});

// Writes sum_k mu[k] * u_k v_k^T into out (m x n, row-major).
void rect_synthesize(std::span<const double> mu, std::span<const double> u,
                     std::span<const double> v, int m, int n, std::span<double> out);

// The element of U(C, mu) selected by C's singular frame: U^T Diag(mu) V.
// mu must be descending and nonnegative (repair policy as in u_element).
std::vector<double> rect_u_element(std::span<const double> c, int m, int n,
                                   std::span<const double> mu);

}  // namespace eigprog
