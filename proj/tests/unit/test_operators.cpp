#include <doctest.h>

#include <cmath>

#include "polyherm/complex_hermite.hpp"
#include "polyherm/hermite.hpp"
#include "polyherm/operators.hpp"
#include "polyherm/squeezed.hpp"

using namespace polyherm;
using P = BivariatePolynomial;

TEST_SUITE("operators") {
  TEST_CASE("Bogoliubov pair at mu = 0") {
    const auto [B0, B0s] = bogoliubov(0.0);
    CHECK(max_coeff_diff(B0, make_ladder(LadderKind::B)) == 0.0);
    CHECK(max_coeff_diff(B0s, make_ladder(LadderKind::Bstar)) == 0.0);
  }

  TEST_CASE("squeezed ground state is annihilated") {
    const double mu = 0.7;
    const auto [Bm, Bms] = bogoliubov(mu);
    CHECK(gw_apply(Bm, ground_state(mu)).poly.max_abs_coeff() < 1e-15);
    CHECK(max_coeff_diff(commutator(Bm, Bms), LadderOperator::identity()) < 1e-14);
  }

  TEST_CASE("ladder and closed squeezed ground states agree") {
    for (int m = 0; m <= 8; ++m)
      CHECK(rel_coeff_diff(squeezed_ground_ladder(m, 0.4).poly, squeezed_ground_closed(m, 0.4).poly) < 1e-12);
  }

  TEST_CASE("ladder construction reproduces the closed form") {
    const double tau = 0.55, mu = std::atanh(tau), ch = std::cosh(mu);
    for (int m = 0; m <= 4; ++m)
      for (int n = 0; n <= 4; ++n) {
        const auto ladder = (std::sqrt(factorial(n)) * ladder_construct(m, n, mu).poly).scale_arguments(ch, ch);
        CHECK(rel_coeff_diff(ladder, squeezed_hermite(m, n, tau)) < 1e-12);
      }
    CHECK_THROWS_AS(ladder_construct(kMaxLadderDegree + 1, 0, 0.3), Error);
  }

  TEST_CASE("magnetic Laplacian examples") {
    CHECK(laplacian_apply(P::monomial(4, 0)).is_zero());
    CHECK(laplacian_apply(P::zbar()) == P::zbar());
    // level n at tau = 0
    CHECK(max_coeff_diff(laplacian_apply(complex_hermite(3, 2)), 2.0 * complex_hermite(3, 2)) < 1e-12);
  }

  TEST_CASE("transported Landau operator has eigenvalue n") {
    const double tau = 0.5;
    const auto h = squeezed_hermite(2, 3, tau);
    CHECK(max_coeff_diff(deformed_landau_apply(h, tau), 3.0 * h) < 1e-12);
  }

  TEST_CASE("binomial expansion of powers of A*") {
    const auto a = power(make_ladder(LadderKind::Astar), 4);
    CHECK(max_coeff_diff(a, astar_power_binomial(4)) < 1e-12);
  }

  TEST_CASE("squeeze operator on monomials") {
    const double tau = 0.3;
    const auto s1 = squeeze_monomial(1, tau);
    // k = 1: (1-tau^2)^{3/4} w e^{tau w^2/2}
    CHECK(std::abs(s1.poly.coeff(1, 0) - std::pow(1 - tau * tau, 0.75)) < 1e-15);
    CHECK(std::abs(s1.env.q20 - tau / 2) < 1e-15);
  }
}
