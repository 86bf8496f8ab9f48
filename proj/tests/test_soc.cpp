#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <vector>

#include "eigprog/errors.hpp"
#include "eigprog/rng.hpp"
#include "eigprog/soc.hpp"

using namespace eigprog;

namespace {

constexpr double kRoot2 = 1.4142135623730951;
constexpr double kHalfRoot2 = 0.7071067811865476;

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double point_norm(const SocPoint& p) {
    return std::sqrt(dot(p.x, p.x) + p.t * p.t);
}

double point_inner(const SocPoint& p, const SocPoint& q) {
    return dot(p.x, q.x) + p.t * q.t;
}

SocPoint random_point(Rng& rng, int n, double scl) {
    SocPoint p;
    p.x.resize(static_cast<std::size_t>(n));
    for (double& v : p.x) v = scl * rng.gaussian();
    p.t = scl * rng.gaussian();
    return p;
}

}  // namespace

TEST_CASE("spectral values of canonical points") {
    // interior point along the axis: both eigenvalues 1
    SocSpectral s = soc_spectral(std::vector<double>{0.0, 0.0}, kRoot2);
    CHECK(s.lambda_plus == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(s.lambda_minus == doctest::Approx(1.0).epsilon(1e-15));

    // boundary point: lambda_minus vanishes
    s = soc_spectral(std::vector<double>{1.0, 0.0}, 1.0);
    CHECK(s.lambda_plus == doctest::Approx(kRoot2).epsilon(1e-15));
    CHECK(s.lambda_minus == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(s.w == std::vector<double>{1.0, 0.0});

    // generic point, |x| = 5
    s = soc_spectral(std::vector<double>{3.0, 4.0}, 10.0);
    CHECK(s.lambda_plus == doctest::Approx(kHalfRoot2 * 15.0).epsilon(1e-14));
    CHECK(s.lambda_minus == doctest::Approx(kHalfRoot2 * 5.0).epsilon(1e-14));
    CHECK(s.w[0] == doctest::Approx(0.6).epsilon(1e-15));
    CHECK(s.w[1] == doctest::Approx(0.8).epsilon(1e-15));

    // negative t: lambda_minus = -5 sqrt(2), lambda_plus = 0
    s = soc_spectral(std::vector<double>{3.0, 4.0}, -5.0);
    CHECK(s.lambda_plus == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(s.lambda_minus == doctest::Approx(-5.0 * kRoot2).epsilon(1e-14));
    // norm identity: lambda_+^2 + lambda_-^2 = t^2 + |x|^2
    CHECK(s.lambda_plus * s.lambda_plus + s.lambda_minus * s.lambda_minus ==
          doctest::Approx(25.0 + 25.0).epsilon(1e-14));
}

TEST_CASE("zero point gets the canonical direction") {
    SocSpectral s = soc_spectral(std::vector<double>{0.0, 0.0}, 0.0);
    CHECK(s.lambda_plus == 0.0);
    CHECK(s.lambda_minus == 0.0);
    CHECK(s.w == std::vector<double>{1.0, 0.0});
}

TEST_CASE("synthesis inverts the decomposition") {
    // sqrt(2) * (e+ + e-) has zero x-part and t = 2
    std::vector<double> out(3);
    soc_synthesize(kRoot2, kRoot2, std::vector<double>{1.0, 0.0}, out);
    CHECK(out[0] == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(out[1] == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(out[2] == doctest::Approx(2.0).epsilon(1e-15));

    // mu = lambda(c) reconstructs c
    Rng rng(11);
    for (int rep = 0; rep < 50; ++rep) {
        SocPoint c = random_point(rng, 4, 3.0);
        SocSpectral s = soc_spectral(c.x, c.t);
        std::vector<double> buf(5);
        soc_synthesize(s.lambda_plus, s.lambda_minus, s.w, buf);
        for (int i = 0; i < 4; ++i)
            CHECK(buf[static_cast<std::size_t>(i)] ==
                  doctest::Approx(c.x[static_cast<std::size_t>(i)]).epsilon(1e-12));
        CHECK(buf[4] == doctest::Approx(c.t).epsilon(1e-12));
    }
}

TEST_CASE("u_element on a boundary frame") {
    // c = ((1,0), 0): lambda(c) = (s, -s) with s = sqrt(2)/2, frame e+- = s(+-w, 1)
    SocPoint c{{1.0, 0.0}, 0.0};
    SocPoint z = soc_u_element(c, 1.0, 0.0);
    CHECK(z.x[0] == doctest::Approx(kHalfRoot2).epsilon(1e-15));
    CHECK(z.x[1] == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(z.t == doctest::Approx(kHalfRoot2).epsilon(1e-15));

    // membership conditions: lambda(z) = mu and <c,z> = <lambda(c), lambda(z)>
    SocSpectral sz = soc_spectral(z.x, z.t);
    CHECK(sz.lambda_plus == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(sz.lambda_minus == doctest::Approx(0.0).epsilon(1e-14));
    SocSpectral sc = soc_spectral(c.x, c.t);
    CHECK(point_inner(c, z) ==
          doctest::Approx(sc.lambda_plus * 1.0 + sc.lambda_minus * 0.0).epsilon(1e-14));
}

TEST_CASE("u_element with a degenerate frame lands on the cone boundary") {
    SocPoint c{{0.0, 0.0}, 0.0};
    SocPoint z = soc_u_element(c, 1.0, 0.0);
    CHECK(z.x[0] == doctest::Approx(kHalfRoot2).epsilon(1e-15));
    CHECK(z.x[1] == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(z.t == doctest::Approx(kHalfRoot2).epsilon(1e-15));
    CHECK(in_second_order_cone(z));
    SocSpectral s = soc_spectral(z.x, z.t);
    CHECK(s.lambda_minus == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("u_element membership on random frames") {
    Rng rng(23);
    for (int rep = 0; rep < 200; ++rep) {
        SocPoint c = random_point(rng, 3, 2.0);
        double hi = rng.uniform(-2.0, 4.0);
        double lo = hi - rng.uniform(0.0, 3.0);
        SocPoint z = soc_u_element(c, hi, lo);
        SocSpectral sz = soc_spectral(z.x, z.t);
        CHECK(sz.lambda_plus == doctest::Approx(hi).epsilon(1e-11));
        CHECK(sz.lambda_minus == doctest::Approx(lo).epsilon(1e-11));
        SocSpectral sc = soc_spectral(c.x, c.t);
        CHECK(point_inner(c, z) ==
              doctest::Approx(sc.lambda_plus * hi + sc.lambda_minus * lo)
                  .epsilon(1e-10));
    }
}

TEST_CASE("u_element repair policy") {
    SocPoint c{{1.0, 0.0}, 2.0};
    // tiny inversion is clamped to the upper value
    SocPoint z = soc_u_element(c, 1.0, 1.0 + 1e-13);
    SocSpectral s = soc_spectral(z.x, z.t);
    CHECK(s.lambda_plus == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(s.lambda_minus == doctest::Approx(1.0).epsilon(1e-12));
    // a real inversion is an error
    CHECK_THROWS_AS(soc_u_element(c, 1.0, 2.0), InvalidSpectrum);
}

TEST_CASE("jordan product identities") {
    // identity element (0, sqrt(2))
    SocPoint e{{0.0, 0.0, 0.0}, kRoot2};
    Rng rng(31);
    for (int rep = 0; rep < 50; ++rep) {
        SocPoint p = random_point(rng, 3, 2.0);
        SocPoint pe = jordan_product(p, e);
        for (int i = 0; i < 3; ++i)
            CHECK(pe.x[static_cast<std::size_t>(i)] ==
                  doctest::Approx(p.x[static_cast<std::size_t>(i)]).epsilon(1e-14));
        CHECK(pe.t == doctest::Approx(p.t).epsilon(1e-14));
    }

    // squaring a boundary point
    SocPoint p{{1.0, 0.0}, 1.0};
    SocPoint sq = jordan_product(p, p);
    CHECK(sq.x[0] == doctest::Approx(kRoot2).epsilon(1e-15));
    CHECK(sq.x[1] == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(sq.t == doctest::Approx(kRoot2).epsilon(1e-15));

    // lambda(p o p) = lambda(p)^2, elementwise
    for (int rep = 0; rep < 50; ++rep) {
        SocPoint q = random_point(rng, 5, 1.5);
        SocSpectral sp = soc_spectral(q.x, q.t);
        SocSpectral ss = soc_spectral(jordan_product(q, q).x, jordan_product(q, q).t);
        double a = sp.lambda_plus * sp.lambda_plus;
        double b = sp.lambda_minus * sp.lambda_minus;
        CHECK(ss.lambda_plus == doctest::Approx(std::max(a, b)).epsilon(1e-11));
        CHECK(ss.lambda_minus == doctest::Approx(std::min(a, b)).epsilon(1e-11));
    }

    // orthogonal x parts with zero t multiply to zero
    SocPoint a{{1.0, 0.0}, 0.0}, b{{0.0, 1.0}, 0.0};
    SocPoint ab = jordan_product(a, b);
    CHECK(ab.x[0] == 0.0);
    CHECK(ab.x[1] == 0.0);
    CHECK(ab.t == 0.0);
}

TEST_CASE("cone membership matches the eigenvalue sign") {
    Rng rng(41);
    for (int rep = 0; rep < 300; ++rep) {
        SocPoint p = random_point(rng, 2, 2.0);
        SocSpectral s = soc_spectral(p.x, p.t);
        CHECK(in_second_order_cone(p) == (s.lambda_minus >= 0.0));
    }
}

TEST_CASE("norm and inner-product axioms for the scalar pair map") {
    Rng rng(53);
    for (int rep = 0; rep < 500; ++rep) {
        SocPoint p = random_point(rng, 6, 2.0);
        SocPoint q = random_point(rng, 6, 2.0);
        SocSpectral sp = soc_spectral(p.x, p.t);
        SocSpectral sq = soc_spectral(q.x, q.t);
        // |lambda(p)| = |p|
        double ln = std::hypot(sp.lambda_plus, sp.lambda_minus);
        CHECK(ln == doctest::Approx(point_norm(p)).epsilon(1e-12));
        // <p,q> <= <lambda(p), lambda(q)>
        double lhs = point_inner(p, q);
        double rhs = sp.lambda_plus * sq.lambda_plus + sp.lambda_minus * sq.lambda_minus;
        CHECK(lhs <= rhs + 1e-10 * (1.0 + std::abs(rhs)));
    }
}
