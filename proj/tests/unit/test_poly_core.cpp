#include <doctest.h>

#include <cmath>

#include "polyherm/bivariate_polynomial.hpp"
#include "polyherm/operators.hpp"
#include "polyherm/weighted_function.hpp"

using namespace polyherm;
using P = BivariatePolynomial;

TEST_SUITE("poly_core") {
  TEST_CASE("evaluation examples") {
    const auto p = P::monomial(1, 1) + cplx(-1.0);  // |z|^2 - 1
    CHECK(std::abs(p(cplx(1.0, 1.0)) - 1.0) < 1e-15);
    CHECK(std::abs(P::monomial(2, 0)(cplx(0.0, 1.0)) + 1.0) < 1e-15);
    CHECK(std::abs(P::monomial(0, 3).eval_pair(2.0, cplx(0.0, 1.0)) - cplx(0.0, -1.0)) < 1e-15);
  }

  TEST_CASE("zero polynomial and degrees") {
    const P zero;
    CHECK(zero.is_zero());
    CHECK(zero.deg_z() == -1);
    const auto p = P::monomial(3, 1, 2.0) + P::monomial(0, 4);
    CHECK(p.deg_z() == 3);
    CHECK(p.deg_zbar() == 4);
    CHECK((p - p).is_zero());
  }

  TEST_CASE("derivatives") {
    const auto p = P::monomial(2, 1);
    CHECK(d_z(p) == P::monomial(1, 1, 2.0));
    CHECK(d_zbar(p) == P::monomial(2, 0));
    CHECK(d_zbar(P::monomial(5, 0)).is_zero());
    CHECK(d_z(d_zbar(P::monomial(3, 4, cplx(2.0, -1.0)))) == d_zbar(d_z(P::monomial(3, 4, cplx(2.0, -1.0)))));
  }

  TEST_CASE("product and power") {
    const auto p = (P::z() + P::zbar());  // 2x
    const auto sq = pow(p, 2);
    CHECK(sq.coeff(2, 0) == cplx(1.0));
    CHECK(sq.coeff(1, 1) == cplx(2.0));
    CHECK(sq.coeff(0, 2) == cplx(1.0));
    const cplx z(0.3, 0.4);
    CHECK(std::abs(sq(z) - 4.0 * 0.09) < 1e-15);
  }

  TEST_CASE("json round trip and malformed input") {
    const auto p = P::monomial(2, 3, cplx(0.1, -1.0 / 3.0)) + P::constant(cplx(1e-200, 7.0));
    CHECK(P::from_json(p.to_json()) == p);
    CHECK_THROWS_AS(P::from_json("{not json"), Error);
  }

  TEST_CASE("complex point rejects non-finite values") {
    CHECK_THROWS_AS(ComplexPoint(std::nan(""), 0.0), Error);
    CHECK_THROWS_AS(ComplexPoint(0.0, INFINITY), Error);
    CHECK(ComplexPoint(1.0, 2.0).conj() == cplx(1.0, -2.0));
  }

  TEST_CASE("ladder actions on the ground state") {
    const auto psi0 = ground_state(0.0);
    CHECK(gw_apply(make_ladder(LadderKind::A), psi0).poly.max_abs_coeff() < 1e-15);
    const auto up = gw_apply(make_ladder(LadderKind::Astar), psi0);
    // A* psi_0 = -zbar psi_0
    CHECK(max_coeff_diff(up.poly, P::monomial(0, 1, -1.0)) < 1e-15);
  }

  TEST_CASE("commutator [A, A*] = 1") {
    const auto c = commutator(make_ladder(LadderKind::A), make_ladder(LadderKind::Astar));
    CHECK(max_coeff_diff(c, LadderOperator::identity()) < 1e-15);
  }

  TEST_CASE("envelope integrability") {
    CHECK(ground_state(0.5).env.integrable());
    GaussianEnvelope e;
    e.q20 = 0.25;
    CHECK_FALSE(e.integrable());
  }
}
