#pragma once

#include <vector>

#include "eigprog/element.hpp"

namespace eigprog {

// base + span{a_1, ..., a_d}. An orthonormal basis of the span is built once
// at construction by modified Gram-Schmidt with re-orthogonalization;
// directions whose residual drops below 1e-12 * |a_i| are dropped as
// dependent, so projections are well defined for redundant generators too.
class AffineSet {
  public:
    AffineSet(Element base, std::vector<Element> span);

    const Element& base() const { return base_; }
    const std::vector<Element>& generators() const { return generators_; }
    const std::vector<Element>& basis() const { return basis_; }

    // Nearest point: base + B B^T (x - base).
    Element project(const Element& x) const;
    double distance(const Element& x) const;

  private:
    Element base_;
    std::vector<Element> generators_;
    std::vector<Element> basis_;
};

inline Element project_affine(const AffineSet& s, const Element& x) {
    return s.project(x);
}

}  // namespace eigprog
