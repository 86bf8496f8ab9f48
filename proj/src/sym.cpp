#include "eigprog/sym.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <string>

#include "eigprog/errors.hpp"

namespace eigprog {

namespace {

double frobenius(const std::vector<double>& a) {
    double s = 0.0;
    for (double v : a) s += v * v;
    return std::sqrt(s);
}

double off_diagonal_norm(const std::vector<double>& a, int n) {
    double s = 0.0;
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) {
            const double v = a[static_cast<std::size_t>(p * n + q)];
            s += 2.0 * v * v;
        }
    return std::sqrt(s);
}

}  // namespace

SymEigen sym_eigen(std::span<const double> a_in, int n, const SymEigenOptions& opt) {
    if (n < 1) throw DimensionMismatch("sym_eigen needs n >= 1");
    if (static_cast<int>(a_in.size()) != n * n)
        throw DimensionMismatch("sym_eigen buffer must hold n*n entries");

    std::vector<double> a(a_in.begin(), a_in.end());
    // v accumulates the rotations; its columns end up as eigenvectors.
    std::vector<double> v(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i * n + i)] = 1.0;

    const double target = opt.rel_tol * frobenius(a);
    bool converged = false;
    for (int sweep = 0; sweep < opt.max_sweeps; ++sweep) {
        if (off_diagonal_norm(a, n) <= target) {
            converged = true;
            break;
        }
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a[static_cast<std::size_t>(p * n + q)];
                if (apq == 0.0) continue;
                const double app = a[static_cast<std::size_t>(p * n + p)];
                const double aqq = a[static_cast<std::size_t>(q * n + q)];
                const double theta = (aqq - app) / (2.0 * apq);
                // tan of the rotation angle; the smaller root keeps |t| <= 1.
                double t;
                if (std::fabs(theta) > 1e100) {
                    t = 0.5 / theta;
                } else {
                    t = 1.0 / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                    if (theta < 0.0) t = -t;
                }
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);

                a[static_cast<std::size_t>(p * n + p)] = app - t * apq;
                a[static_cast<std::size_t>(q * n + q)] = aqq + t * apq;
                a[static_cast<std::size_t>(p * n + q)] = 0.0;
                a[static_cast<std::size_t>(q * n + p)] = 0.0;
                for (int r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    const double arp = a[static_cast<std::size_t>(r * n + p)];
                    const double arq = a[static_cast<std::size_t>(r * n + q)];
                    const double nrp = arp - s * (arq + tau * arp);
                    const double nrq = arq + s * (arp - tau * arq);
                    a[static_cast<std::size_t>(r * n + p)] = nrp;
                    a[static_cast<std::size_t>(p * n + r)] = nrp;
                    a[static_cast<std::size_t>(r * n + q)] = nrq;
                    a[static_cast<std::size_t>(q * n + r)] = nrq;
                }
                for (int r = 0; r < n; ++r) {
                    const double vrp = v[static_cast<std::size_t>(r * n + p)];
                    const double vrq = v[static_cast<std::size_t>(r * n + q)];
                    v[static_cast<std::size_t>(r * n + p)] = vrp - s * (vrq + tau * vrp);
                    v[static_cast<std::size_t>(r * n + q)] = vrq + s * (vrp - tau * vrq);
                }
            }
        }
    }
    if (!converged && off_diagonal_norm(a, n) > target)
        throw EigSolverNoConvergence("jacobi sweeps exhausted (" +
                                     std::to_string(opt.max_sweeps) +
                                     ") before reaching the off-diagonal target");

    // Sort descending; stable so equal eigenvalues keep their diagonal order.
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), [&](int i, int j) {
        return a[static_cast<std::size_t>(i * n + i)] > a[static_cast<std::size_t>(j * n + j)];
    });

    SymEigen out;
    out.values.resize(static_cast<std::size_t>(n));
    out.vectors.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const int col = perm[static_cast<std::size_t>(k)];
        out.values[static_cast<std::size_t>(k)] = a[static_cast<std::size_t>(col * n + col)];
        for (int j = 0; j < n; ++j)
            out.vectors[static_cast<std::size_t>(k * n + j)] =
                v[static_cast<std::size_t>(j * n + col)];
    }
    return out;
}

void sym_synthesize(std::span<const double> mu, std::span<const double> vectors, int n,
                    std::span<double> out) {
    if (static_cast<int>(mu.size()) != n || static_cast<int>(vectors.size()) != n * n ||
        static_cast<int>(out.size()) != n * n)
        throw DimensionMismatch("sym synthesis buffer sizes disagree");
    // Fill the upper triangle and mirror so the result is exactly symmetric.
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            double s = 0.0;
            for (int k = 0; k < n; ++k)
                s += mu[static_cast<std::size_t>(k)] *
                     vectors[static_cast<std::size_t>(k * n + i)] *
                     vectors[static_cast<std::size_t>(k * n + j)];
            out[static_cast<std::size_t>(i * n + j)] = s;
            out[static_cast<std::size_t>(j * n + i)] = s;
        }
    }
}

std::vector<double> sym_u_element(std::span<const double> c, int n,
                                  std::span<const double> mu) {
    const SymEigen eig = sym_eigen(c, n);
    std::vector<double> out(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    sym_synthesize(mu, eig.vectors, n, out);
    return out;
}

}  // namespace eigprog
