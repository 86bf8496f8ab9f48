#include "eigprog/element.hpp"

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>

#include "eigprog/errors.hpp"

namespace eigprog {

Element::Element(AlgebraPtr algebra, std::vector<double> data)
    : algebra_(std::move(algebra)), data_(std::move(data)) {
    if (!algebra_) throw ConfigError("element needs an algebra");
    if (static_cast<int>(data_.size()) != algebra_->ambient_dim())
        throw DimensionMismatch("element buffer has " + std::to_string(data_.size()) +
                                " entries, algebra needs " +
                                std::to_string(algebra_->ambient_dim()));
    // Enforce exact symmetry of Sym blocks once; linear arithmetic on equal
    // mirrored entries keeps them equal, so this never needs repeating.
    for (int b = 0; b < algebra_->block_count(); ++b) {
        const BlockKind& k = algebra_->blocks()[static_cast<std::size_t>(b)];
        if (k.tag != BlockKind::Tag::Sym) continue;
        double* a = data_.data() + algebra_->block_offset(b);
        const int n = k.n;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                const double s = 0.5 * (a[i * n + j] + a[j * n + i]);
                a[i * n + j] = s;
                a[j * n + i] = s;
            }
        }
    }
}

Element Element::zeros(AlgebraPtr algebra) {
    if (!algebra) throw ConfigError("element needs an algebra");
    std::vector<double> buf(static_cast<std::size_t>(algebra->ambient_dim()), 0.0);
    return Element(std::move(algebra), std::move(buf));
}

std::span<const double> Element::block(int i) const {
    const BlockKind& k = algebra_->blocks()[static_cast<std::size_t>(i)];
    return std::span<const double>(data_.data() + algebra_->block_offset(i),
                                   static_cast<std::size_t>(k.ambient_dim()));
}

void check_same_algebra(const Element& x, const Element& y) {
    if (!(x.algebra() == y.algebra()))
        throw AlgebraMismatch("elements belong to different algebras");
}

Element add(const Element& x, const Element& y) {
    check_same_algebra(x, y);
    std::vector<double> out(x.data().begin(), x.data().end());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += y.data()[i];
    return Element(x.algebra_ptr(), std::move(out));
}

Element sub(const Element& x, const Element& y) {
    check_same_algebra(x, y);
    std::vector<double> out(x.data().begin(), x.data().end());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= y.data()[i];
    return Element(x.algebra_ptr(), std::move(out));
}

Element scale(double a, const Element& x) {
    std::vector<double> out(x.data().begin(), x.data().end());
    for (double& v : out) v *= a;
    return Element(x.algebra_ptr(), std::move(out));
}

Element axpy(double a, const Element& x, const Element& y) {
    check_same_algebra(x, y);
    std::vector<double> out(y.data().begin(), y.data().end());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += a * x.data()[i];
    return Element(x.algebra_ptr(), std::move(out));
}

double inner(const Element& x, const Element& y) {
    check_same_algebra(x, y);
    double s = 0.0;
    for (std::size_t i = 0; i < x.data().size(); ++i) s += x.data()[i] * y.data()[i];
    return s;
}

double norm(const Element& x) { return stable_norm(x.data()); }

double distance(const Element& x, const Element& y) { return norm(sub(x, y)); }

double stable_norm(std::span<const double> v) {
    double amax = 0.0;
    for (double a : v) amax = std::max(amax, std::fabs(a));
    if (amax == 0.0 || !std::isfinite(amax)) return amax;
    double s = 0.0;
    for (double a : v) {
        const double r = a / amax;
        s += r * r;
    }
    return amax * std::sqrt(s);
}

bool all_finite(std::span<const double> v) {
    for (double a : v)
        if (!std::isfinite(a)) return false;
    return true;
}

}  // namespace eigprog
