#include "polyherm/operators.hpp"

#include <algorithm>
#include <cmath>

#include "polyherm/hermite.hpp"
#include "polyherm/squeezed.hpp"

namespace polyherm {

LadderOperator make_ladder(LadderKind kind) {
  switch (kind) {
    case LadderKind::A:
      return LadderOperator({{-1.0, 0, 0, 0, 1}, {-0.5, 1, 0, 0, 0}});
    case LadderKind::Astar:
      return LadderOperator({{1.0, 0, 0, 1, 0}, {-0.5, 0, 1, 0, 0}});
    case LadderKind::B:
      return LadderOperator({{-1.0, 0, 0, 1, 0}, {-0.5, 0, 1, 0, 0}});
    case LadderKind::Bstar:
      return LadderOperator({{1.0, 0, 0, 0, 1}, {-0.5, 1, 0, 0, 0}});
    case LadderKind::HL:
      return make_ladder(LadderKind::Astar) * make_ladder(LadderKind::A);
    case LadderKind::Laplacian:
      return LadderOperator({{-1.0, 0, 0, 1, 1}, {1.0, 0, 1, 0, 1}});
  }
  throw Error(ErrorCode::InvalidArgument, "unknown ladder kind");
}

namespace {

void require_mu(double mu) {
  if (!(mu >= 0.0) || !std::isfinite(mu)) throw Error(ErrorCode::TauOutOfRange, "mu must be finite and >= 0");
}

}  // namespace

std::pair<LadderOperator, LadderOperator> bogoliubov(double mu) {
  require_mu(mu);
  const auto B = make_ladder(LadderKind::B);
  const auto Bs = make_ladder(LadderKind::Bstar);
  const double c = std::cosh(mu);
  const double s = std::sinh(mu);
  return {c * B - s * Bs, (-s) * B + c * Bs};
}

WeightedFunction ground_state(double mu) {
  require_mu(mu);
  const double tau = std::tanh(mu);
  return {BivariatePolynomial::constant(1.0), GaussianEnvelope{tau / 2.0, -0.5, 0.0, 1.0 / std::sqrt(kPi)}};
}

WeightedFunction squeezed_ground_ladder(int m, double mu) {
  require_degree(m, kMaxSqueezedDegree, "squeezed_ground_ladder");
  const auto raise = -1.0 * bogoliubov(mu).second;
  WeightedFunction f = ground_state(mu);
  for (int i = 0; i < m; ++i) f = gw_apply(raise, f);
  f.poly = (1.0 / std::sqrt(factorial(m))) * f.poly;
  return f;
}

WeightedFunction squeezed_ground_closed(int m, double mu) {
  require_degree(m, kMaxSqueezedDegree, "squeezed_ground_closed");
  WeightedFunction f = ground_state(mu);
  const auto one = BivariatePolynomial::constant(1.0);
  if (mu == 0.0) {
    f.poly = (1.0 / std::sqrt(factorial(m))) * BivariatePolynomial::monomial(m, 0);
    return f;
  }
  const auto arg = (1.0 / std::sqrt(std::sinh(2.0 * mu))) * BivariatePolynomial::z();
  const double scale = std::pow(std::tanh(mu) / 2.0, 0.5 * m) / std::sqrt(factorial(m));
  f.poly = scale * hermite_recurrence(m, arg, one);
  return f;
}

WeightedFunction ladder_construct(int m, int n, double mu) {
  require_degree(m, kMaxLadderDegree, "ladder_construct");
  require_degree(n, kMaxLadderDegree, "ladder_construct");
  const auto raise = make_ladder(LadderKind::Astar);
  WeightedFunction f = squeezed_ground_ladder(m, mu);
  for (int i = 0; i < n; ++i) f = gw_apply(raise, f);
  f.poly = (1.0 / std::sqrt(factorial(n))) * f.poly;
  return f;
}

BivariatePolynomial g_closed_form(int m, int n, double mu) {
  require_degree(m, kMaxSqueezedDegree, "g_closed_form");
  require_degree(n, kMaxSqueezedDegree, "g_closed_form");
  if (!(mu > 0.0) || !std::isfinite(mu)) throw Error(ErrorCode::TauOutOfRange, "g_closed_form needs mu > 0");
  const double t = std::tanh(mu);
  const double s2 = std::sinh(2.0 * mu);
  const auto one = BivariatePolynomial::constant(1.0);
  const auto x1 = (1.0 / std::sqrt(s2)) * BivariatePolynomial::z();
  const cplx i(0.0, 1.0);
  const auto x2 = BivariatePolynomial({{Exponent{1, 0}, -i * std::sqrt(t / 2.0)},
                                       {Exponent{0, 1}, i / std::sqrt(2.0 * t)}});
  BivariatePolynomial acc;
  for (int k = 0; k <= std::min(m, n); ++k) {
    const cplx w = factorial(k) * binomial(n, k) * binomial(m, k) * std::pow(2.0, k) / std::pow(s2, 0.5 * k) *
                   ipow(i * std::sqrt(t / 2.0), n - k);
    acc = acc + w * (hermite_recurrence(m - k, x1, one) * hermite_recurrence(n - k, x2, one));
  }
  return (std::pow(t / 2.0, 0.5 * m) / std::sqrt(factorial(m))) * acc;
}

LadderOperator astar_power_binomial(int n) {
  std::vector<OperatorTerm> terms;
  for (int j = 0; j <= n; ++j) terms.push_back({binomial(n, j) * std::pow(-0.5, n - j), 0, n - j, j, 0});
  return LadderOperator(terms);
}

BivariatePolynomial laplacian_apply(const BivariatePolynomial& p) {
  return -1.0 * d_z(d_zbar(p)) + shift(d_zbar(p), 0, 1);
}

BivariatePolynomial deformed_landau_apply(const BivariatePolynomial& p, double tau) {
  require_tau_half_open(tau);
  const auto dzb = d_zbar(p);
  return -(1.0 - tau * tau) * d_z(dzb) + shift(dzb, 0, 1) - tau * shift(dzb, 1, 0);
}

WeightedFunction squeeze_monomial(int k, double tau) {
  require_degree(k, kMaxSqueezedDegree, "squeeze_monomial");
  require_tau_half_open(tau);
  const double c = std::sqrt(1.0 - tau * tau);
  const auto one = BivariatePolynomial::constant(1.0);
  // (tau/2)^{k/2} H_k(x / sqrt(2 tau)) at x = sqrt(1-tau^2) w, in rescaled form.
  const auto poly = rescaled_hermite_recurrence(k, c * BivariatePolynomial::z(), tau, one);
  return {(std::sqrt(c) / std::sqrt(factorial(k))) * poly, GaussianEnvelope{tau / 2.0, 0.0, 0.0, 1.0}};
}

}  // namespace polyherm
