#pragma once

#include <span>
#include <vector>

namespace eigprog {

struct SymEigenOptions {
    // Converged once the off-diagonal Frobenius norm drops below
    // rel_tol * ||X||_F.
    double rel_tol = 1e-12;
    // Full cyclic sweeps before giving up with EigSolverNoConvergence.
    int max_sweeps = 64;
};

// Eigendecomposition of a symmetric matrix: X = U^T Diag(values) U with
// values descending and row k of `vectors` holding the unit eigenvector of
// values[k]. Ties keep the pre-sort (diagonal) order, so the output is
// deterministic for a fixed input.
struct SymEigen {
    std::vector<double> values;
    std::vector<double> vectors;  // n x n, row-major, rows are eigenvectors
};

// Cyclic Jacobi diagonalization. `a` is the full n x n matrix, row-major;
// only its symmetric part participates (callers keep buffers exactly
// symmetric, see Element). Throws EigSolverNoConvergence when the sweep
// budget runs out before the off-diagonal mass is annihilated.
SymEigen sym_eigen(std::span<const double> a, int n, const SymEigenOptions& opt = {});

// Writes sum_k mu[k] * u_k u_k^T into out (n x n, row-major), where u_k is
// row k of `vectors`. out is exactly symmetric by construction.
void sym_synthesize(std::span<const double> mu, std::span<const double> vectors, int n,
                    std::span<double> out);

// The element of U(C, mu) selected by C's eigenbasis: U^T Diag(mu) U.
std::vector<double> sym_u_element(std::span<const double> c, int n,
                                  std::span<const double> mu);

}  // namespace eigprog
