#pragma once

#include <functional>
#include <span>
#include <vector>

#include "eigprog/spectral.hpp"

namespace eigprog {

// A closed set C of admissible spectra, exposed through its nearest-point
// map. project_spectrum receives lambda(x) (already laid out in the
// algebra's ordering convention) and must return a nearest point of
// C intersected with the eigenvalue range. Implementations are stateless
// after construction and safe to share across threads.
class SpectralConstraint {
  public:
    virtual ~SpectralConstraint() = default;

    virtual std::vector<double> project_spectrum(std::span<const double> v) const = 0;

    // Structural compatibility with an algebra; throws on mismatch. Called by
    // project_spectral_set before any work.
    virtual void validate(const AlgebraDescriptor& alg) const;

  protected:
    explicit SpectralConstraint(int rank) : rank_(rank) {}
    int rank_;
};

// C = {lambda_star}. The target must be a point of the algebra's eigenvalue
// range, checked at construction (EmptyConstraint otherwise).
class SingletonSpectrum final : public SpectralConstraint {
  public:
    SingletonSpectrum(AlgebraPtr algebra, std::vector<double> lambda_star);

    std::vector<double> project_spectrum(std::span<const double> v) const override;
    void validate(const AlgebraDescriptor& alg) const override;
    const std::vector<double>& target() const { return target_; }

  private:
    AlgebraPtr algebra_;
    std::vector<double> target_;
};

// C = { u in R^{2m} descending : u >= 0, u_{2m-l+1} = ... = u_{2m} = 0 } —
// the spectra of cone members whose rank is at most 2m - l. Meaningful for a
// globally ordered product of m second-order-cone blocks; the nearest point
// of a descending v is componentwise:
//
//   (max(v_1, 0), ..., max(v_{2m-l}, 0), 0, ..., 0)
//
// which is again descending, hence optimal. l may range over [0, 2m].
class VanishingTail final : public SpectralConstraint {
  public:
    VanishingTail(int block_count, int tight_count);

    std::vector<double> project_spectrum(std::span<const double> v) const override;
    void validate(const AlgebraDescriptor& alg) const override;
    int block_count() const { return blocks_; }
    int tight_count() const { return tight_; }

  private:
    int blocks_;
    int tight_;
};

// Escape hatch: a user-supplied nearest-point map on spectra. The projector
// must return points of the eigenvalue range; this is asserted per call in
// debug builds.
class CustomSpectrum final : public SpectralConstraint {
  public:
    CustomSpectrum(int rank,
                   std::function<std::vector<double>(std::span<const double>)> projector);

    std::vector<double> project_spectrum(std::span<const double> v) const override;

  private:
    std::function<std::vector<double>(std::span<const double>)> projector_;
};

// Nearest point of the spectral set lambda^{-1}(C): decompose x, project its
// spectrum onto C, and rebuild with x's own frames. The returned p satisfies
// lambda(p) = projected spectrum and |x - p| = |lambda(x) - lambda(p)|_2.
Element project_spectral_set(const Element& x, const SpectralConstraint& c);
Element project_spectral_set(const SpectralDecomposition& x, const SpectralConstraint& c);

}  // namespace eigprog
