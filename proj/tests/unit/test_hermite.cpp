#include <doctest.h>

#include <cmath>

#include "polyherm/complex_hermite.hpp"
#include "polyherm/hermite.hpp"
#include "polyherm/hermite2d.hpp"
#include "polyherm/squeezed.hpp"

using namespace polyherm;
using P = BivariatePolynomial;

TEST_SUITE("hermite") {
  TEST_CASE("physicists' Hermite values") {
    const double x = 0.7;
    CHECK(hermite_real(0, x).real() == doctest::Approx(1.0));
    CHECK(hermite_real(3, x).real() == doctest::Approx(8 * x * x * x - 12 * x).epsilon(1e-14));
    CHECK(hermite_real(4, x).real() == doctest::Approx(16 * std::pow(x, 4) - 48 * x * x + 12).epsilon(1e-14));
  }

  TEST_CASE("rescaled Hermite") {
    const cplx z(0.3, -0.2);
    CHECK(std::abs(hermite_rescaled(2, z, 0.4) - (z * z - 0.4)) < 1e-15);
    CHECK(std::abs(hermite_rescaled(3, z, 0.4) - (z * z * z - 3.0 * 0.4 * z)) < 1e-15);
    CHECK(std::abs(hermite_rescaled(5, z, 0.0) - std::pow(z, 5)) < 1e-15);
  }

  TEST_CASE("Laguerre") {
    const double x = 1.3, a = 0.5;
    const double l2 = 0.5 * (x * x - 2 * (a + 2) * x + (a + 1) * (a + 2));
    CHECK(laguerre(2, a, x).real() == doctest::Approx(l2).epsilon(1e-14));
    CHECK(laguerre(2, -1, x).real() == doctest::Approx(x * x / 2 - x).epsilon(1e-14));
  }

  TEST_CASE("complex Hermite examples") {
    CHECK(complex_hermite(3, 0) == P::monomial(3, 0));
    CHECK(complex_hermite(1, 1) == P::monomial(1, 1) + cplx(-1.0));
    CHECK(complex_hermite(2, 1) == P::monomial(2, 1) + P::monomial(1, 0, -2.0));
    CHECK(complex_hermite(2, 3) == complex_hermite_rodrigues(2, 3));
    CHECK(std::abs(phi_normalized(2, 1, cplx(1.0)) + 1.0 / std::sqrt(2.0)) < 1e-15);
  }

  TEST_CASE("squeezed family examples") {
    CHECK(std::abs(squeezed_hermite(1, 1, 0.6)(cplx(1.0)) - 0.3) < 1e-15);
    const double tau = 0.6, c = std::sqrt(1 - tau * tau);
    const cplx z(0.4, 0.9);
    CHECK(std::abs(squeezed_hermite(0, 1, tau)(z) - (tau * z - std::conj(z)) / c) < 1e-15);
    // tau = 0 gives (-1)^n H_{m,n} / sqrt(m!)
    CHECK(rel_coeff_diff(squeezed_hermite(2, 3, 0.0), (-1.0 / std::sqrt(2.0)) * complex_hermite(2, 3)) < 1e-15);
    CHECK_THROWS_AS(squeezed_hermite(1, 1, 1.0), Error);
    CHECK_THROWS_AS(squeezed_hermite(kMaxSqueezedDegree + 1, 0, 0.5), Error);
  }

  TEST_CASE("pointwise and expanded squeezed values agree") {
    const cplx z(-0.8, 0.35);
    for (int m = 0; m <= 6; ++m)
      for (int n = 0; n <= 6; ++n)
        CHECK(rel_err(squeezed_hermite_value(m, n, 0.45, z), squeezed_hermite(m, n, 0.45)(z), 1.0) < 1e-12);
  }

  TEST_CASE("2D Hermite") {
    const auto R = SymMatrix2::r_tau(0.5);
    CHECK(std::abs(R.det() - 1.0) < 1e-15);
    const cplx a(0.2, 0.1), b(-0.4, 0.3);
    CHECK(std::abs(hermite2d(R, 0, 0, a, b) - 1.0) < 1e-15);
    // H^{(R)}_{1,0} = (R xi)_1
    CHECK(std::abs(hermite2d(R, 1, 0, a, b) - (R.r11 * a + R.r12 * b)) < 1e-15);
    CHECK(std::abs(hermite2d(R, 2, 3, a, b) - hermite2d_genfun(R, 2, 3, a, b, 5)) < 1e-13);
    CHECK_THROWS_AS(hermite2d_genfun(R, 2, 3, a, b, 4), Error);
    CHECK(rel_coeff_diff(squeezed_via_hermite2d(3, 2, 0.7), squeezed_hermite(3, 2, 0.7)) < 1e-12);
  }

  TEST_CASE("generating functions") {
    CHECK(genfun_residual(cplx(0.2, 0.1), cplx(-0.1, 0.25), ComplexPoint(0.5, -0.3), 0.5, 24) < 1e-12);
    CHECK(genfun_residual_tau0(cplx(0.2, 0.1), cplx(-0.1, 0.25), ComplexPoint(0.5, -0.3), 24) < 1e-12);
  }

  TEST_CASE("rejected candidates are distinguishable") {
    // the elliptic Rodrigues candidate picks up a zbar term at n = 0
    CHECK(rodrigues_elliptic_candidate(1, 0, 0.5).deg_zbar() >= 1);
    // at tau = 0 the substitution candidate is the complex Hermite polynomial
    CHECK(rel_coeff_diff(substitution_candidate(2, 2, 0.0), complex_hermite(2, 2)) < 1e-15);
  }
}
