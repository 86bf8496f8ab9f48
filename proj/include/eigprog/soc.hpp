#pragma once

#include <span>
#include <vector>

namespace eigprog {

// Second-order cone algebra on R^{n+1}. A point is (x, t) with x in R^n and
// the scalar t stored last. Eigenvalues and frame:
//
//   lambda_+- = (sqrt(2)/2) * (t +- |x|)
//   e_+-      = (sqrt(2)/2) * (+-w, 1),   w = x/|x|  (e_1 if x = 0)
//
// The sqrt(2)/2 normalization makes |e_+-| = 1, so the trace inner product of
// the algebra coincides with the Euclidean one on R^{n+1} and
// lambda_+^2 + lambda_-^2 = |(x,t)|^2.

struct SocPoint {
    std::vector<double> x;
    double t = 0.0;
};

struct SocSpectral {
    double lambda_plus = 0.0;
    double lambda_minus = 0.0;
    std::vector<double> w;  // unit direction of x (canonical e_1 when x = 0)
};

SocSpectral soc_spectral(std::span<const double> x, double t);
SocSpectral soc_spectral(const SocPoint& p);

// Writes mu_plus * e_+ + mu_minus * e_- for the frame with direction w into
// out (layout (x, t), size w.size() + 1).
void soc_synthesize(double mu_plus, double mu_minus, std::span<const double> w,
                    std::span<double> out);

// The element of U(c, mu) selected by c's frame. Requires mu_plus >= mu_minus
// up to the repair tolerance (see u_element in spectral.hpp for the policy).
SocPoint soc_u_element(const SocPoint& c, double mu_plus, double mu_minus);

// Jordan product (x,t) o (y,u) = (sqrt(2)/2) * (u x + t y, <x,y> + t u).
// Identity element: (0, sqrt(2)).
SocPoint jordan_product(const SocPoint& p, const SocPoint& q);

// t >= |x|, i.e. lambda_minus >= 0.
bool in_second_order_cone(const SocPoint& p);

}  // namespace eigprog
