#include "eigprog/vqc.hpp"

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>

#include "eigprog/errors.hpp"
#include "eigprog/sym.hpp"

namespace eigprog {

std::vector<double> matvec(const Mat& m, std::span<const double> x) {
    if (static_cast<int>(x.size()) != m.cols)
        throw DimensionMismatch("matvec size mismatch");
    std::vector<double> y(static_cast<std::size_t>(m.rows), 0.0);
    for (int i = 0; i < m.rows; ++i) {
        double acc = 0.0;
        for (int j = 0; j < m.cols; ++j) acc += m.at(i, j) * x[static_cast<std::size_t>(j)];
        y[static_cast<std::size_t>(i)] = acc;
    }
    return y;
}

Element VqcLift::apply(std::span<const double> x) const {
    if (x.size() != columns.size())
        throw DimensionMismatch("lift expects an x of dimension " +
                                std::to_string(columns.size()));
    Element y = offset;
    for (std::size_t j = 0; j < columns.size(); ++j) y = axpy(x[j], columns[j], y);
    return y;
}

VqcProblem build_vqc_feasibility(const VqcInstance& inst) {
    const int m = static_cast<int>(inst.blocks.size());
    if (m < 1) throw ConfigError("system needs at least one cone block");
    if (inst.var_dim < 1) throw ConfigError("system needs at least one variable");
    if (inst.tight < 0 || inst.tight > 2 * m)
        throw ConfigError("tight count must lie in [0, 2m]");

    std::vector<BlockKind> kinds;
    kinds.reserve(static_cast<std::size_t>(m));
    for (const VqcBlock& blk : inst.blocks) {
        if (blk.A.cols != inst.var_dim || static_cast<int>(blk.c.size()) != inst.var_dim ||
            static_cast<int>(blk.b.size()) != blk.A.rows)
            throw DimensionMismatch("cone block shapes disagree with the variable count");
        kinds.push_back(BlockKind::soc(blk.A.rows));
    }
    AlgebraPtr algebra = make_algebra(std::move(kinds), Ordering::GloballyOrdered);

    // Offset element: blocks (b_i, d_i).
    std::vector<double> off(static_cast<std::size_t>(algebra->ambient_dim()), 0.0);
    for (int i = 0; i < m; ++i) {
        const VqcBlock& blk = inst.blocks[static_cast<std::size_t>(i)];
        double* p = off.data() + algebra->block_offset(i);
        for (int r = 0; r < blk.A.rows; ++r) p[r] = blk.b[static_cast<std::size_t>(r)];
        p[blk.A.rows] = blk.d;
    }
    Element offset(algebra, std::move(off));

    // Column j: blocks (A_i e_j, c_i[j]).
    std::vector<Element> columns;
    columns.reserve(static_cast<std::size_t>(inst.var_dim));
    for (int j = 0; j < inst.var_dim; ++j) {
        std::vector<double> col(static_cast<std::size_t>(algebra->ambient_dim()), 0.0);
        for (int i = 0; i < m; ++i) {
            const VqcBlock& blk = inst.blocks[static_cast<std::size_t>(i)];
            double* p = col.data() + algebra->block_offset(i);
            for (int r = 0; r < blk.A.rows; ++r) p[r] = blk.A.at(r, j);
            p[blk.A.rows] = blk.c[static_cast<std::size_t>(j)];
        }
        columns.emplace_back(algebra, std::move(col));
    }

    VqcLift lift{algebra, offset, columns};
    AffineSet affine(std::move(offset), std::move(columns));
    return VqcProblem{std::move(affine), VanishingTail(m, inst.tight), std::move(lift)};
}

int spectrum_rank(std::span<const double> values, double rel_threshold) {
    double amax = 0.0;
    for (double v : values) amax = std::max(amax, std::fabs(v));
    const double cut = rel_threshold * amax;
    int rank = 0;
    for (double v : values)
        if (std::fabs(v) > cut) ++rank;
    return rank;
}

namespace {

SymEigen checked_eigen(const Mat& q, const char* what) {
    if (q.rows != q.cols || q.rows < 1)
        throw DimensionMismatch(std::string(what) + " needs a square matrix");
    for (int i = 0; i < q.rows; ++i)
        for (int j = i + 1; j < q.cols; ++j)
            if (std::fabs(q.at(i, j) - q.at(j, i)) >
                1e-12 * std::max(1.0, std::fabs(q.at(i, j))))
                throw DimensionMismatch(std::string(what) + " needs a symmetric matrix");
    return sym_eigen(q.a, q.rows);
}

Mat rebuild(const SymEigen& eig, int n, const std::vector<double>& f) {
    Mat out = Mat::zero(n, n);
    sym_synthesize(f, eig.vectors, n, out.a);
    return out;
}

}  // namespace

Mat sym_sqrt(const Mat& q) {
    const SymEigen eig = checked_eigen(q, "sym_sqrt");
    std::vector<double> f(eig.values.size());
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = std::sqrt(std::max(eig.values[i], 0.0));
    return rebuild(eig, q.rows, f);
}

Mat sym_inv_sqrt(const Mat& q) {
    const SymEigen eig = checked_eigen(q, "sym_inv_sqrt");
    const double floor = 1e-12 * std::max(eig.values.empty() ? 0.0 : eig.values[0], 0.0);
    std::vector<double> f(eig.values.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (eig.values[i] <= std::max(floor, 0.0))
            throw NotPositiveDefinite("matrix is singular to working precision");
        f[i] = 1.0 / std::sqrt(eig.values[i]);
    }
    return rebuild(eig, q.rows, f);
}

VqcInstance to_vqc(const EllipsoidInstance& inst) {
    const int m = static_cast<int>(inst.Q.size());
    if (m < 1) throw ConfigError("instance needs at least one ellipsoid");
    if (inst.p.size() != inst.Q.size())
        throw DimensionMismatch("each ellipsoid needs a center");
    const int n = inst.Q[0].rows;

    VqcInstance sys;
    sys.var_dim = n;
    sys.tight = inst.tight;
    sys.blocks.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        const Mat& q = inst.Q[static_cast<std::size_t>(i)];
        if (q.rows != n || q.cols != n)
            throw DimensionMismatch("ellipsoid shapes must agree");
        if (static_cast<int>(inst.p[static_cast<std::size_t>(i)].size()) != n)
            throw DimensionMismatch("center dimension disagrees with the shape matrix");
        const SymEigen eig = checked_eigen(q, "ellipsoid shape");
        const double top = eig.values.empty() ? 0.0 : eig.values[0];
        if (eig.values.back() <= 1e-10 * std::max(top, 0.0) || eig.values.back() <= 0.0)
            throw NotPositiveDefinite("ellipsoid shape matrix " + std::to_string(i) +
                                      " is not positive definite");
        VqcBlock blk;
        blk.A = sym_sqrt(q);
        blk.b = matvec(blk.A, inst.p[static_cast<std::size_t>(i)]);
        for (double& v : blk.b) v = -v;
        blk.c.assign(static_cast<std::size_t>(n), 0.0);
        blk.d = 1.0;
        sys.blocks.push_back(std::move(blk));
    }
    return sys;
}

VqcProblem build_ellipsoid_feasibility(const EllipsoidInstance& inst) {
    return build_vqc_feasibility(to_vqc(inst));
}

std::vector<double> recover_x(const EllipsoidInstance& inst, const Element& y) {
    const int m = static_cast<int>(inst.Q.size());
    if (m < 1) throw ConfigError("instance needs at least one ellipsoid");
    const int n = inst.Q[0].rows;
    std::vector<double> x(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < m; ++i) {
        const Mat inv_root = sym_inv_sqrt(inst.Q[static_cast<std::size_t>(i)]);
        const std::span<const double> blk = y.block(i);
        const std::vector<double> xi =
            matvec(inv_root, blk.first(static_cast<std::size_t>(n)));
        for (int j = 0; j < n; ++j)
            x[static_cast<std::size_t>(j)] +=
                (xi[static_cast<std::size_t>(j)] +
                 inst.p[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) /
                static_cast<double>(m);
    }
    return x;
}

std::vector<double> quadratic_values(const EllipsoidInstance& inst,
                                     std::span<const double> x) {
    const int m = static_cast<int>(inst.Q.size());
    std::vector<double> vals(static_cast<std::size_t>(m), 0.0);
    for (int i = 0; i < m; ++i) {
        const Mat& q = inst.Q[static_cast<std::size_t>(i)];
        std::vector<double> diff(x.begin(), x.end());
        for (std::size_t j = 0; j < diff.size(); ++j)
            diff[j] -= inst.p[static_cast<std::size_t>(i)][j];
        const std::vector<double> qd = matvec(q, diff);
        double acc = 0.0;
        for (std::size_t j = 0; j < diff.size(); ++j) acc += diff[j] * qd[j];
        vals[static_cast<std::size_t>(i)] = acc;
    }
    return vals;
}

}  // namespace eigprog
