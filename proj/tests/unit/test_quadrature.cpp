#include <doctest.h>

#include <cmath>

#include "polyherm/parallel.hpp"
#include "polyherm/quadrature.hpp"

using namespace polyherm;

TEST_SUITE("quadrature") {
  TEST_CASE("two and three node Gauss-Hermite rules") {
    const auto r2 = gauss_hermite_rule(2);
    CHECK(r2.nodes[0] == doctest::Approx(-1 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(r2.weights[1] == doctest::Approx(std::sqrt(kPi) / 2).epsilon(1e-15));
    const auto r3 = gauss_hermite_rule(3);
    CHECK(std::abs(r3.nodes[1]) < 1e-15);
    CHECK(r3.nodes[2] == doctest::Approx(std::sqrt(1.5)).epsilon(1e-15));
    CHECK(r3.weights[1] == doctest::Approx(2 * std::sqrt(kPi) / 3).epsilon(1e-15));
    CHECK(r3.weights[0] == doctest::Approx(std::sqrt(kPi) / 6).epsilon(1e-15));
  }

  TEST_CASE("rule size limits") {
    CHECK_THROWS_AS(gauss_hermite_rule(1), Error);
    CHECK_THROWS_AS(gauss_hermite_rule(257), Error);
    CHECK(gauss_hermite_rule(256).nodes.size() == 256);
  }

  TEST_CASE("omega density examples") {
    CHECK(omega_density(cplx(0.0), 0.5) == doctest::Approx(1 / kPi));
    CHECK(omega_density(cplx(1.0), 0.5) == doctest::Approx(std::exp(-2.0 / 3.0) / kPi).epsilon(1e-15));
    CHECK_THROWS_AS(omega_density(cplx(0.0), 1.0), Error);
  }

  TEST_CASE("total mass") {
    for (double tau : {0.0, 0.3, 0.9}) {
      const auto g = quad_grid(32, tau);
      CHECK(integrate([](cplx) { return cplx(1.0); }, g).real() ==
            doctest::Approx(std::sqrt(1 - tau * tau)).epsilon(1e-14));
    }
  }

  TEST_CASE("second moments under omega_tau") {
    // E[x^2] = (1+tau)/2 and E[y^2] = (1-tau)/2 against the mass sqrt(1-tau^2)
    const double tau = 0.4;
    const auto g = quad_grid(16, tau);
    const double mass = std::sqrt(1 - tau * tau);
    CHECK(integrate([](cplx z) { return cplx(z.real() * z.real()); }, g).real() / mass ==
          doctest::Approx((1 + tau) / 2).epsilon(1e-14));
    CHECK(integrate([](cplx z) { return cplx(z.imag() * z.imag()); }, g).real() / mass ==
          doctest::Approx((1 - tau) / 2).epsilon(1e-14));
  }

  TEST_CASE("grid mismatch") {
    const auto g = quad_grid(8, 0.3);
    auto one = [](cplx) { return cplx(1.0); };
    CHECK_THROWS_AS(inner_product(one, one, 0.5, g), Error);
  }

  TEST_CASE("pairwise sums do not depend on the thread count") {
    const auto g = quad_grid(40, 0.6);
    auto f = [](cplx z) { return std::exp(cplx(0.3, 0.1) * z) * std::conj(z); };
    const int prev = max_threads();
    set_max_threads(1);
    const cplx a = integrate(f, g);
    set_max_threads(5);
    const cplx b = integrate(f, g);
    set_max_threads(prev);
    CHECK(a == b);
  }
}
