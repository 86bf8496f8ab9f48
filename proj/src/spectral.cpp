#include "eigprog/spectral.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>

#include "eigprog/errors.hpp"
#include "eigprog/rect.hpp"
#include "eigprog/soc.hpp"
#include "eigprog/sym.hpp"

namespace eigprog {

namespace {

// Per-block eigenvalues appended to `out` (descending inside the block).
void block_eigenvalues(const BlockKind& k, std::span<const double> buf,
                       std::vector<double>& out) {
    switch (k.tag) {
        case BlockKind::Tag::Soc: {
            const SocSpectral s = soc_spectral(buf.first(buf.size() - 1), buf.back());
            out.push_back(s.lambda_plus);
            out.push_back(s.lambda_minus);
            break;
        }
        case BlockKind::Tag::Sym: {
            const SymEigen e = sym_eigen(buf, k.n);
            out.insert(out.end(), e.values.begin(), e.values.end());
            break;
        }
        case BlockKind::Tag::Rect: {
            const RectSvd f = svd(buf, k.rows, k.n);
            out.insert(out.end(), f.sigma.begin(), f.sigma.end());
            break;
        }
    }
}

std::vector<int> global_order(const std::vector<double>& blockwise) {
    std::vector<int> order(blockwise.size());
    std::iota(order.begin(), order.end(), 0);
    // stable_sort on descending value: ties keep block-wise position order,
    // i.e. lower block index first, then lower within-block index.
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
        return blockwise[static_cast<std::size_t>(i)] > blockwise[static_cast<std::size_t>(j)];
    });
    return order;
}

}  // namespace

std::vector<double> SpectralDecomposition::spectrum() const {
    if (algebra->ordering() == Ordering::BlockWise) return eigenvalues;
    std::vector<double> out(eigenvalues.size());
    for (std::size_t k = 0; k < order.size(); ++k)
        out[k] = eigenvalues[static_cast<std::size_t>(order[k])];
    return out;
}

std::vector<double> eigen_map(const Element& x) {
    const AlgebraDescriptor& alg = x.algebra();
    std::vector<double> blockwise;
    blockwise.reserve(static_cast<std::size_t>(alg.rank()));
    for (int b = 0; b < alg.block_count(); ++b)
        block_eigenvalues(alg.blocks()[static_cast<std::size_t>(b)], x.block(b), blockwise);
    if (alg.ordering() == Ordering::BlockWise) return blockwise;
    const std::vector<int> order = global_order(blockwise);
    std::vector<double> out(blockwise.size());
    for (std::size_t k = 0; k < order.size(); ++k)
        out[k] = blockwise[static_cast<std::size_t>(order[k])];
    return out;
}

SpectralDecomposition spectral_decompose(const Element& x) {
    const AlgebraDescriptor& alg = x.algebra();
    SpectralDecomposition d;
    d.algebra = x.algebra_ptr();
    d.eigenvalues.reserve(static_cast<std::size_t>(alg.rank()));
    d.frames.resize(static_cast<std::size_t>(alg.block_count()));
    for (int b = 0; b < alg.block_count(); ++b) {
        const BlockKind& k = alg.blocks()[static_cast<std::size_t>(b)];
        const std::span<const double> buf = x.block(b);
        BlockFrame& frame = d.frames[static_cast<std::size_t>(b)];
        switch (k.tag) {
            case BlockKind::Tag::Soc: {
                SocSpectral s = soc_spectral(buf.first(buf.size() - 1), buf.back());
                d.eigenvalues.push_back(s.lambda_plus);
                d.eigenvalues.push_back(s.lambda_minus);
                frame.u = std::move(s.w);
                break;
            }
            case BlockKind::Tag::Sym: {
                SymEigen e = sym_eigen(buf, k.n);
                d.eigenvalues.insert(d.eigenvalues.end(), e.values.begin(), e.values.end());
                frame.u = std::move(e.vectors);
                break;
            }
            case BlockKind::Tag::Rect: {
                RectSvd f = svd(buf, k.rows, k.n);
                d.eigenvalues.insert(d.eigenvalues.end(), f.sigma.begin(), f.sigma.end());
                frame.u = std::move(f.u);
                frame.v = std::move(f.v);
                break;
            }
        }
    }
    if (alg.ordering() == Ordering::GloballyOrdered) d.order = global_order(d.eigenvalues);
    return d;
}

Element synthesize(const SpectralDecomposition& d, std::span<const double> mu_blockwise) {
    const AlgebraDescriptor& alg = *d.algebra;
    if (static_cast<int>(mu_blockwise.size()) != alg.rank())
        throw InvalidSpectrum("spectrum has length " + std::to_string(mu_blockwise.size()) +
                              ", algebra has rank " + std::to_string(alg.rank()));
    std::vector<double> buf(static_cast<std::size_t>(alg.ambient_dim()), 0.0);
    for (int b = 0; b < alg.block_count(); ++b) {
        const BlockKind& k = alg.blocks()[static_cast<std::size_t>(b)];
        const BlockFrame& frame = d.frames[static_cast<std::size_t>(b)];
        const std::span<const double> mu =
            mu_blockwise.subspan(static_cast<std::size_t>(alg.eig_offset(b)),
                                 static_cast<std::size_t>(k.rank()));
        const std::span<double> out(buf.data() + alg.block_offset(b),
                                    static_cast<std::size_t>(k.ambient_dim()));
        switch (k.tag) {
            case BlockKind::Tag::Soc:
                soc_synthesize(mu[0], mu[1], frame.u, out);
                break;
            case BlockKind::Tag::Sym:
                sym_synthesize(mu, frame.u, k.n, out);
                break;
            case BlockKind::Tag::Rect:
                rect_synthesize(mu, frame.u, frame.v, k.rows, k.n, out);
                break;
        }
    }
    return Element(d.algebra, std::move(buf));
}

bool is_valid_spectrum(const AlgebraDescriptor& alg, std::span<const double> mu,
                       double tol) {
    if (static_cast<int>(mu.size()) != alg.rank()) return false;
    if (alg.ordering() == Ordering::GloballyOrdered) {
        for (std::size_t i = 1; i < mu.size(); ++i)
            if (mu[i] > mu[i - 1] + tol) return false;
        return true;
    }
    for (int b = 0; b < alg.block_count(); ++b) {
        const BlockKind& k = alg.blocks()[static_cast<std::size_t>(b)];
        const int off = alg.eig_offset(b);
        for (int i = 1; i < k.rank(); ++i)
            if (mu[static_cast<std::size_t>(off + i)] >
                mu[static_cast<std::size_t>(off + i - 1)] + tol)
                return false;
        if (k.tag == BlockKind::Tag::Rect)
            for (int i = 0; i < k.rank(); ++i)
                if (mu[static_cast<std::size_t>(off + i)] < -tol) return false;
    }
    return true;
}

std::vector<double> sanitize_spectrum(const AlgebraDescriptor& alg,
                                      std::span<const double> mu, double tol) {
    if (static_cast<int>(mu.size()) != alg.rank())
        throw InvalidSpectrum("spectrum has length " + std::to_string(mu.size()) +
                              ", algebra has rank " + std::to_string(alg.rank()));
    std::vector<double> out(mu.begin(), mu.end());
    auto clamp_descending = [&](int begin, int count) {
        for (int i = 1; i < count; ++i) {
            double& cur = out[static_cast<std::size_t>(begin + i)];
            const double prev = out[static_cast<std::size_t>(begin + i - 1)];
            if (cur > prev) {
                if (cur - prev > tol)
                    throw InvalidSpectrum("spectrum is not descending at position " +
                                          std::to_string(begin + i));
                cur = prev;
            }
        }
    };
    if (alg.ordering() == Ordering::GloballyOrdered) {
        clamp_descending(0, alg.rank());
        return out;
    }
    for (int b = 0; b < alg.block_count(); ++b) {
        const BlockKind& k = alg.blocks()[static_cast<std::size_t>(b)];
        clamp_descending(alg.eig_offset(b), k.rank());
        if (k.tag == BlockKind::Tag::Rect) {
            for (int i = 0; i < k.rank(); ++i) {
                double& cur = out[static_cast<std::size_t>(alg.eig_offset(b) + i)];
                if (cur < 0.0) {
                    if (cur < -tol)
                        throw InvalidSpectrum("singular-value segment must be nonnegative");
                    cur = 0.0;
                }
            }
        }
    }
    return out;
}

Element u_element(const SpectralDecomposition& c, std::span<const double> mu) {
    const AlgebraDescriptor& alg = *c.algebra;
    const std::vector<double> clean = sanitize_spectrum(alg, mu);
    if (alg.ordering() == Ordering::BlockWise) return synthesize(c, clean);
    // Route the globally sorted values back to block-wise positions: the k-th
    // largest eigenvalue of c donates its frame direction to clean[k]. Within
    // a block the targeted positions appear in descending eigenvalue order,
    // so each per-block segment stays descending automatically.
    std::vector<double> blockwise(clean.size());
    for (std::size_t k = 0; k < clean.size(); ++k)
        blockwise[static_cast<std::size_t>(c.order[k])] = clean[k];
    return synthesize(c, blockwise);
}

Element u_element(const Element& c, std::span<const double> mu) {
    return u_element(spectral_decompose(c), mu);
}

}  // namespace eigprog
