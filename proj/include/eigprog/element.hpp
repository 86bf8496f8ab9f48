#pragma once

#include <span>
#include <vector>

#include "eigprog/blocks.hpp"

namespace eigprog {

// A point of a product algebra, stored as one flat coefficient buffer with
// the per-block layouts described in blocks.hpp. Symmetric blocks are
// symmetrized exactly on construction (a_ij == a_ji bit for bit), so all
// downstream arithmetic preserves symmetry exactly. Elements are immutable;
// every operation returns a fresh element.
class Element {
  public:
    Element(AlgebraPtr algebra, std::vector<double> data);

    static Element zeros(AlgebraPtr algebra);

    const AlgebraDescriptor& algebra() const { return *algebra_; }
    const AlgebraPtr& algebra_ptr() const { return algebra_; }
    std::span<const double> data() const { return data_; }
    int dim() const { return static_cast<int>(data_.size()); }

    // View of block i's coefficients.
    std::span<const double> block(int i) const;

    double operator[](int i) const { return data_[static_cast<std::size_t>(i)]; }

  private:
    AlgebraPtr algebra_;
    std::vector<double> data_;
};

// Throws AlgebraMismatch unless both elements live in equal algebras
// (compared structurally, not by pointer).
void check_same_algebra(const Element& x, const Element& y);

Element add(const Element& x, const Element& y);
Element sub(const Element& x, const Element& y);
Element scale(double a, const Element& x);
// a*x + y
Element axpy(double a, const Element& x, const Element& y);

double inner(const Element& x, const Element& y);
double norm(const Element& x);
double distance(const Element& x, const Element& y);

inline Element operator+(const Element& x, const Element& y) { return add(x, y); }
inline Element operator-(const Element& x, const Element& y) { return sub(x, y); }
inline Element operator*(double a, const Element& x) { return scale(a, x); }

// Overflow/underflow-safe Euclidean norm of a raw span (two-pass scaling).
double stable_norm(std::span<const double> v);

bool all_finite(std::span<const double> v);

}  // namespace eigprog
