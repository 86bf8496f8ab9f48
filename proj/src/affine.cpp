#include "eigprog/affine.hpp"

#include <cstddef>
#include <utility>

#include "eigprog/errors.hpp"

namespace eigprog {

AffineSet::AffineSet(Element base, std::vector<Element> span)
    : base_(std::move(base)), generators_(std::move(span)) {
    basis_.reserve(generators_.size());
    for (const Element& a : generators_) {
        check_same_algebra(base_, a);
        const double na = norm(a);
        if (na == 0.0) continue;
        Element v = a;
        // Two passes of modified Gram-Schmidt; the second pass mops up the
        // cancellation left by the first when a is nearly dependent.
        for (int pass = 0; pass < 2; ++pass)
            for (const Element& q : basis_) v = axpy(-inner(v, q), q, v);
        const double nv = norm(v);
        if (nv < 1e-12 * na) continue;  // dependent direction, drop it
        basis_.push_back(scale(1.0 / nv, v));
    }
}

Element AffineSet::project(const Element& x) const {
    check_same_algebra(base_, x);
    Element r = sub(x, base_);
    Element p = base_;
    for (const Element& q : basis_) p = axpy(inner(r, q), q, p);
    return p;
}

double AffineSet::distance(const Element& x) const { return norm(sub(x, project(x))); }

}  // namespace eigprog
