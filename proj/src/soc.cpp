#include "eigprog/soc.hpp"

#include <cmath>
#include <cstddef>

#include "eigprog/element.hpp"
#include "eigprog/errors.hpp"

namespace eigprog {

namespace {
constexpr double kHalfSqrt2 = 0.70710678118654752440;  // sqrt(2)/2
}

SocSpectral soc_spectral(std::span<const double> x, double t) {
    if (x.empty()) throw DimensionMismatch("soc point needs a nonempty x part");
    SocSpectral s;
    const double r = stable_norm(x);
    s.lambda_plus = kHalfSqrt2 * (t + r);
    s.lambda_minus = kHalfSqrt2 * (t - r);
    s.w.assign(x.begin(), x.end());
    if (r == 0.0) {
        s.w.assign(x.size(), 0.0);
        s.w[0] = 1.0;  // canonical direction for the degenerate point
    } else {
        for (double& v : s.w) v /= r;
    }
    return s;
}

SocSpectral soc_spectral(const SocPoint& p) { return soc_spectral(p.x, p.t); }

void soc_synthesize(double mu_plus, double mu_minus, std::span<const double> w,
                    std::span<double> out) {
    if (out.size() != w.size() + 1)
        throw DimensionMismatch("soc synthesis buffer has the wrong size");
    // mu_+ e_+ + mu_- e_- = (sqrt(2)/2) * ((mu_+ - mu_-) w, mu_+ + mu_-)
    const double xs = kHalfSqrt2 * (mu_plus - mu_minus);
    for (std::size_t i = 0; i < w.size(); ++i) out[i] = xs * w[i];
    out[w.size()] = kHalfSqrt2 * (mu_plus + mu_minus);
}

SocPoint soc_u_element(const SocPoint& c, double mu_plus, double mu_minus) {
    if (mu_plus < mu_minus) {
        if (mu_minus - mu_plus > 1e-12)
            throw InvalidSpectrum("soc spectrum must be descending");
        mu_minus = mu_plus;
    }
    const SocSpectral s = soc_spectral(c);
    SocPoint z;
    z.x.resize(s.w.size());
    std::vector<double> buf(s.w.size() + 1);
    soc_synthesize(mu_plus, mu_minus, s.w, buf);
    for (std::size_t i = 0; i < z.x.size(); ++i) z.x[i] = buf[i];
    z.t = buf.back();
    return z;
}

SocPoint jordan_product(const SocPoint& p, const SocPoint& q) {
    if (p.x.size() != q.x.size())
        throw DimensionMismatch("jordan product needs points of equal size");
    SocPoint r;
    r.x.resize(p.x.size());
    double dot = 0.0;
    for (std::size_t i = 0; i < p.x.size(); ++i) {
        r.x[i] = kHalfSqrt2 * (q.t * p.x[i] + p.t * q.x[i]);
        dot += p.x[i] * q.x[i];
    }
    r.t = kHalfSqrt2 * (dot + p.t * q.t);
    return r;
}

bool in_second_order_cone(const SocPoint& p) {
    return soc_spectral(p).lambda_minus >= 0.0;
}

}  // namespace eigprog
