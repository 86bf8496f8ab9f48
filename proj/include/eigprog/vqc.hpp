#pragma once

#include <span>
#include <vector>

#include "eigprog/solver.hpp"

namespace eigprog {

// Tiny row-major dense matrix, just enough for the application builders.
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<double> a;

    static Mat zero(int r, int c) {
        return Mat{r, c, std::vector<double>(static_cast<std::size_t>(r) *
                                                 static_cast<std::size_t>(c),
                                             0.0)};
    }
    double& at(int i, int j) { return a[static_cast<std::size_t>(i * cols + j)]; }
    double at(int i, int j) const { return a[static_cast<std::size_t>(i * cols + j)]; }
};

std::vector<double> matvec(const Mat& m, std::span<const double> x);

// System of second-order-cone inequalities |A_i x + b_i| <= <c_i, x> + d_i,
// i = 1..m, of which at least `tight` must hold with equality. Tightness of
// block i is exactly rank deficiency of the lifted cone point
// y_i = (A_i x + b_i, <c_i, x> + d_i), so the feasible lifts are the cone
// members of rank at most 2m - tight meeting the affine image of x-space —
// a vanishing-tail spectral set over the globally ordered cone product.
struct VqcBlock {
    Mat A;                  // n_i x n
    std::vector<double> b;  // n_i
    std::vector<double> c;  // n
    double d = 0.0;
};

struct VqcInstance {
    std::vector<VqcBlock> blocks;
    int var_dim = 0;  // dimension of x
    int tight = 0;    // required number of equality blocks
};

// The affine lift y(x) = A x + b of the instance, block layout
// (A_1 x + b_1, <c_1, x> + d_1, ..., A_m x + b_m, <c_m, x> + d_m).
struct VqcLift {
    AlgebraPtr algebra;            // globally ordered product of soc blocks
    Element offset;                // b
    std::vector<Element> columns;  // images of the canonical basis of R^n

    Element apply(std::span<const double> x) const;
};

struct VqcProblem {
    AffineSet affine;           // range(A) + b
    VanishingTail constraint;   // rank <= 2m - tight
    VqcLift lift;
};

VqcProblem build_vqc_feasibility(const VqcInstance& inst);

// Number of eigenvalues with |value| above rel_threshold * max(|values|).
int spectrum_rank(std::span<const double> values, double rel_threshold = 1e-9);

// Intersection of ellipsoid boundaries/solids: (x - p_i)^T Q_i (x - p_i) <= 1
// with at least `tight` boundaries attained. Encoded as the cone system
// |Q_i^{1/2} x - Q_i^{1/2} p_i| <= 1.
struct EllipsoidInstance {
    std::vector<Mat> Q;  // symmetric positive definite, n x n
    std::vector<std::vector<double>> p;
    int tight = 0;
};

// Validates positive definiteness (smallest eigenvalue above 1e-10 of the
// largest; NotPositiveDefinite otherwise) and assembles the cone system.
VqcInstance to_vqc(const EllipsoidInstance& inst);
VqcProblem build_ellipsoid_feasibility(const EllipsoidInstance& inst);

// Pulls a lifted iterate y back to x-space by averaging the per-block
// preimages: x = (1/m) sum_i (Q_i^{-1/2} y_i + p_i), with y_i the x-part of
// block i. Exact on points of the affine set.
std::vector<double> recover_x(const EllipsoidInstance& inst, const Element& y);

// Quadratic values (x - p_i)^T Q_i (x - p_i) for each ellipsoid.
std::vector<double> quadratic_values(const EllipsoidInstance& inst,
                                     std::span<const double> x);

// Symmetric square root / inverse square root with eigenvalues floored at
// 1e-12 of the largest (inverse root throws NotPositiveDefinite below that).
Mat sym_sqrt(const Mat& q);
Mat sym_inv_sqrt(const Mat& q);

}  // namespace eigprog
