#include "eigprog/rect.hpp"

#include <cmath>
#include <cstddef>

#include "eigprog/errors.hpp"

namespace eigprog {

namespace {

// Orthonormalize rows `filled..total-1` of q (total x dim, row-major) against
// the rows before them, seeding candidates from the canonical basis. Used to
// complete the factor opposite the Gram side when singular values vanish.
void complete_basis(std::vector<double>& q, int total, int dim, int filled) {
    int next = filled;
    for (int cand = 0; cand < dim && next < total; ++cand) {
        std::vector<double> w(static_cast<std::size_t>(dim), 0.0);
        w[static_cast<std::size_t>(cand)] = 1.0;
        // Two Gram-Schmidt passes keep the basis orthogonal to ~1e-15.
        for (int pass = 0; pass < 2; ++pass) {
            for (int r = 0; r < next; ++r) {
                double dot = 0.0;
                for (int j = 0; j < dim; ++j)
                    dot += w[static_cast<std::size_t>(j)] *
                           q[static_cast<std::size_t>(r * dim + j)];
                for (int j = 0; j < dim; ++j)
                    w[static_cast<std::size_t>(j)] -=
                        dot * q[static_cast<std::size_t>(r * dim + j)];
            }
        }
        double nw = 0.0;
        for (double a : w) nw += a * a;
        nw = std::sqrt(nw);
        if (nw < 1e-8) continue;  // candidate already inside the span
        for (int j = 0; j < dim; ++j)
            q[static_cast<std::size_t>(next * dim + j)] = w[static_cast<std::size_t>(j)] / nw;
        ++next;
    }
    if (next < total)
        throw Error("failed to complete an orthonormal basis");  // cannot happen
}

void fix_signs(RectSvd& f, int m, int n) {
    const int r = static_cast<int>(f.sigma.size());
    // Significant triples: flip u_k and v_k together so row k of V leads with
    // a positive entry. Remaining rows get the same convention on their own.
    for (int k = 0; k < n; ++k) {
        int lead = -1;
        for (int j = 0; j < n; ++j) {
            if (f.v[static_cast<std::size_t>(k * n + j)] != 0.0) {
                lead = j;
                break;
            }
        }
        if (lead < 0 || f.v[static_cast<std::size_t>(k * n + lead)] > 0.0) continue;
        for (int j = 0; j < n; ++j) f.v[static_cast<std::size_t>(k * n + j)] *= -1.0;
        if (k < r && k < m)
            for (int j = 0; j < m; ++j) f.u[static_cast<std::size_t>(k * m + j)] *= -1.0;
    }
    for (int k = r; k < m; ++k) {
        int lead = -1;
        for (int j = 0; j < m; ++j) {
            if (f.u[static_cast<std::size_t>(k * m + j)] != 0.0) {
                lead = j;
                break;
            }
        }
        if (lead >= 0 && f.u[static_cast<std::size_t>(k * m + lead)] < 0.0)
            for (int j = 0; j < m; ++j) f.u[static_cast<std::size_t>(k * m + j)] *= -1.0;
    }
}

}  // namespace

RectSvd svd(std::span<const double> x, int m, int n, const SymEigenOptions& opt) {
    if (m < 1 || n < 1) throw DimensionMismatch("svd needs m, n >= 1");
    if (static_cast<int>(x.size()) != m * n)
        throw DimensionMismatch("svd buffer must hold m*n entries");
    const int r = std::min(m, n);

    RectSvd f;
    f.sigma.assign(static_cast<std::size_t>(r), 0.0);
    f.u.assign(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), 0.0);
    f.v.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);

    // Eigendecompose the smaller Gram matrix; its eigenvectors give one
    // factor directly and the other follows by applying X and normalizing.
    const bool gram_right = (n <= m);  // X^T X when n is the smaller side
    const int s = gram_right ? n : m;
    std::vector<double> gram(static_cast<std::size_t>(s) * static_cast<std::size_t>(s), 0.0);
    for (int i = 0; i < s; ++i) {
        for (int j = i; j < s; ++j) {
            double acc = 0.0;
            if (gram_right) {
                for (int k = 0; k < m; ++k)
                    acc += x[static_cast<std::size_t>(k * n + i)] *
                           x[static_cast<std::size_t>(k * n + j)];
            } else {
                for (int k = 0; k < n; ++k)
                    acc += x[static_cast<std::size_t>(i * n + k)] *
                           x[static_cast<std::size_t>(j * n + k)];
            }
            gram[static_cast<std::size_t>(i * s + j)] = acc;
            gram[static_cast<std::size_t>(j * s + i)] = acc;
        }
    }
    const SymEigen eig = sym_eigen(gram, s, opt);
    for (int k = 0; k < r; ++k)
        f.sigma[static_cast<std::size_t>(k)] =
            std::sqrt(std::max(eig.values[static_cast<std::size_t>(k)], 0.0));

    const double cutoff = 1e-12 * (f.sigma.empty() ? 0.0 : f.sigma[0]);
    int solid = 0;  // triples with a trustworthy quotient X v / sigma
    while (solid < r && f.sigma[static_cast<std::size_t>(solid)] > cutoff &&
           f.sigma[static_cast<std::size_t>(solid)] > 0.0)
        ++solid;

    if (gram_right) {
        // Rows of V are the Gram eigenvectors; u_k = X v_k / sigma_k.
        f.v = eig.vectors;
        for (int k = 0; k < solid; ++k) {
            for (int i = 0; i < m; ++i) {
                double acc = 0.0;
                for (int j = 0; j < n; ++j)
                    acc += x[static_cast<std::size_t>(i * n + j)] *
                           f.v[static_cast<std::size_t>(k * n + j)];
                f.u[static_cast<std::size_t>(k * m + i)] =
                    acc / f.sigma[static_cast<std::size_t>(k)];
            }
        }
        complete_basis(f.u, m, m, solid);
    } else {
        f.u = eig.vectors;
        for (int k = 0; k < solid; ++k) {
            for (int j = 0; j < n; ++j) {
                double acc = 0.0;
                for (int i = 0; i < m; ++i)
                    acc += x[static_cast<std::size_t>(i * n + j)] *
                           f.u[static_cast<std::size_t>(k * m + i)];
                f.v[static_cast<std::size_t>(k * n + j)] =
                    acc / f.sigma[static_cast<std::size_t>(k)];
            }
        }
        complete_basis(f.v, n, n, solid);
    }

    fix_signs(f, m, n);
    return f;
}

void rect_synthesize(std::span<const double> mu, std::span<const double> u,
                     std::span<const double> v, int m, int n, std::span<double> out) {
    const int r = static_cast<int>(mu.size());
    if (r > std::min(m, n) || static_cast<int>(u.size()) != m * m ||
        static_cast<int>(v.size()) != n * n || static_cast<int>(out.size()) != m * n)
        throw DimensionMismatch("rect synthesis buffer sizes disagree");
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            double acc = 0.0;
            for (int k = 0; k < r; ++k)
                acc += mu[static_cast<std::size_t>(k)] *
                       u[static_cast<std::size_t>(k * m + i)] *
                       v[static_cast<std::size_t>(k * n + j)];
            out[static_cast<std::size_t>(i * n + j)] = acc;
        }
    }
}

std::vector<double> rect_u_element(std::span<const double> c, int m, int n,
                                   std::span<const double> mu) {
    const RectSvd f = svd(c, m, n);
    std::vector<double> out(static_cast<std::size_t>(m) * static_cast<std::size_t>(n));
    rect_synthesize(mu, f.u, f.v, m, n, out);
    return out;
}

}  // namespace eigprog
