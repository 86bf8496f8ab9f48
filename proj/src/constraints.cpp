#include "eigprog/constraints.hpp"

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <string>
#include <utility>

#include "eigprog/errors.hpp"

namespace eigprog {

void SpectralConstraint::validate(const AlgebraDescriptor& alg) const {
    if (alg.rank() != rank_)
        throw AlgebraMismatch("constraint expects spectra of length " +
                              std::to_string(rank_) + ", algebra has rank " +
                              std::to_string(alg.rank()));
}

SingletonSpectrum::SingletonSpectrum(AlgebraPtr algebra, std::vector<double> lambda_star)
    : SpectralConstraint(algebra ? algebra->rank() : 0),
      algebra_(std::move(algebra)),
      target_(std::move(lambda_star)) {
    if (!algebra_) throw ConfigError("singleton constraint needs an algebra");
    if (static_cast<int>(target_.size()) != algebra_->rank())
        throw EmptyConstraint("singleton target has length " +
                              std::to_string(target_.size()) + ", algebra has rank " +
                              std::to_string(algebra_->rank()));
    if (!is_valid_spectrum(*algebra_, target_, 0.0))
        throw EmptyConstraint(
            "singleton target lies outside the algebra's eigenvalue range");
}

std::vector<double> SingletonSpectrum::project_spectrum(std::span<const double>) const {
    return target_;
}

void SingletonSpectrum::validate(const AlgebraDescriptor& alg) const {
    if (!(alg == *algebra_))
        throw AlgebraMismatch("singleton constraint built for a different algebra");
}

VanishingTail::VanishingTail(int block_count, int tight_count)
    : SpectralConstraint(2 * block_count), blocks_(block_count), tight_(tight_count) {
    if (block_count < 1) throw ConfigError("vanishing tail needs at least one block");
    if (tight_count < 0 || tight_count > 2 * block_count)
        throw ConfigError("tight count must lie in [0, 2m]");
}

std::vector<double> VanishingTail::project_spectrum(std::span<const double> v) const {
    std::vector<double> out(v.begin(), v.end());
    const std::size_t keep = static_cast<std::size_t>(2 * blocks_ - tight_);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = i < keep ? std::max(out[i], 0.0) : 0.0;
    return out;
}

void VanishingTail::validate(const AlgebraDescriptor& alg) const {
    SpectralConstraint::validate(alg);
    if (alg.ordering() != Ordering::GloballyOrdered)
        throw AlgebraMismatch("vanishing-tail constraints act on globally ordered spectra");
    if (alg.block_count() != blocks_)
        throw AlgebraMismatch("vanishing tail built for " + std::to_string(blocks_) +
                              " blocks, algebra has " + std::to_string(alg.block_count()));
    for (const BlockKind& k : alg.blocks())
        if (k.tag != BlockKind::Tag::Soc)
            throw AlgebraMismatch(
                "vanishing-tail constraints need second-order-cone blocks only");
}

CustomSpectrum::CustomSpectrum(
    int rank, std::function<std::vector<double>(std::span<const double>)> projector)
    : SpectralConstraint(rank), projector_(std::move(projector)) {
    if (!projector_) throw ConfigError("custom constraint needs a projector");
}

std::vector<double> CustomSpectrum::project_spectrum(std::span<const double> v) const {
    return projector_(v);
}

Element project_spectral_set(const SpectralDecomposition& x, const SpectralConstraint& c) {
    const AlgebraDescriptor& alg = *x.algebra;
    c.validate(alg);
    const std::vector<double> w = c.project_spectrum(x.spectrum());
    // Custom projectors must stay inside the eigenvalue range; u_element's
    // sanitizer enforces it hard, this assert catches it earlier in debug.
    assert(is_valid_spectrum(alg, w, 1e-12) &&
           "spectrum projector left the eigenvalue range");
    return u_element(x, w);
}

Element project_spectral_set(const Element& x, const SpectralConstraint& c) {
    return project_spectral_set(spectral_decompose(x), c);
}

}  // namespace eigprog
