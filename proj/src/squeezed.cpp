#include "polyherm/squeezed.hpp"

#include <algorithm>
#include <limits>
#include <vector>

#include "polyherm/hermite.hpp"
#include "polyherm/weighted_function.hpp"

namespace polyherm {

SqueezeParams SqueezeParams::from_mu(double mu) {
  if (!(mu >= 0.0) || !std::isfinite(mu))
    throw Error(ErrorCode::TauOutOfRange, "mu must be finite and >= 0");
  return {std::tanh(mu), mu};
}

SqueezeParams SqueezeParams::from_tau(double tau) {
  require_tau_half_open(tau);
  return {tau, std::atanh(tau)};
}

void require_tau_half_open(double tau) {
  if (!(tau >= 0.0 && tau < 1.0))
    throw Error(ErrorCode::TauOutOfRange, "tau = " + std::to_string(tau) + " outside [0, 1)");
}

namespace {

// Coefficient of H_{m-k}(z;tau) H_{n-k}(y;tau) in the closed form, without
// the 1/sqrt(m!) prefactor.
cplx closed_form_weight(int m, int n, int k, double tau) {
  static const cplx i_pow[4] = {1.0, {0.0, 1.0}, -1.0, {0.0, -1.0}};
  return i_pow[(n - k) % 4] * factorial(k) * binomial(n, k) * binomial(m, k) *
         std::pow(1.0 - tau * tau, 0.5 * k);
}

}  // namespace

BivariatePolynomial squeezed_hermite(int m, int n, double tau) {
  require_degree(m, kMaxSqueezedDegree, "squeezed_hermite");
  require_degree(n, kMaxSqueezedDegree, "squeezed_hermite");
  require_tau_half_open(tau);
  const auto one = BivariatePolynomial::constant(1.0);
  const auto z = BivariatePolynomial::z();
  const cplx s = cplx(0.0, 1.0) / std::sqrt(1.0 - tau * tau);
  const auto y = BivariatePolynomial({{Exponent{0, 1}, s}, {Exponent{1, 0}, -tau * s}});

  std::vector<BivariatePolynomial> hz(m + 1), hy(n + 1);
  for (int p = 0; p <= m; ++p) hz[p] = rescaled_hermite_recurrence(p, z, tau, one);
  for (int p = 0; p <= n; ++p) hy[p] = rescaled_hermite_recurrence(p, y, tau, one);

  BivariatePolynomial acc;
  for (int k = 0; k <= std::min(m, n); ++k)
    acc = acc + closed_form_weight(m, n, k, tau) * (hz[m - k] * hy[n - k]);
  return (1.0 / std::sqrt(factorial(m))) * acc;
}

cplx squeezed_hermite_value(int m, int n, double tau, cplx z) {
  require_degree(m, kMaxSqueezedDegree, "squeezed_hermite_value");
  require_degree(n, kMaxSqueezedDegree, "squeezed_hermite_value");
  require_tau_half_open(tau);
  const cplx y = cplx(0.0, 1.0) * (std::conj(z) - tau * z) / std::sqrt(1.0 - tau * tau);
  cplx acc = 0.0;
  for (int k = 0; k <= std::min(m, n); ++k)
    acc += closed_form_weight(m, n, k, tau) *
           rescaled_hermite_recurrence<cplx, double>(m - k, z, tau, 1.0) *
           rescaled_hermite_recurrence<cplx, double>(n - k, y, tau, 1.0);
  return acc / std::sqrt(factorial(m));
}

namespace {

struct ShellSums {
  cplx total = 0.0;
  double last_shell = 0.0;
};

// sum_{m,n<=K} sqrt(m!) H_{m,n}(z;tau) u^m v^n / (m! n!), tracking the
// magnitude of the max(m,n) = K shell.
ShellSums genfun_partial(cplx u, cplx v, cplx z, double tau, int K) {
  if (K < 1) throw Error(ErrorCode::InvalidArgument, "truncation order K must be >= 1");
  require_degree(K, kMaxSqueezedDegree, "genfun truncation");
  ShellSums out;
  cplx shell = 0.0;
  for (int m = 0; m <= K; ++m) {
    const cplx um = ipow(u, m) / std::sqrt(factorial(m));  // sqrt(m!)/m!
    for (int n = 0; n <= K; ++n) {
      const cplx t = um * ipow(v, n) / factorial(n) * squeezed_hermite_value(m, n, tau, z);
      out.total += t;
      if (std::max(m, n) == K) shell += t;
    }
  }
  out.last_shell = std::abs(shell);
  return out;
}

double checked_residual(const ShellSums& s, cplx rhs) {
  const double residual = std::abs(s.total - rhs);
  const double floor = 4.0 * std::numeric_limits<double>::epsilon() * std::abs(rhs);
  if (s.last_shell > std::max(residual, floor))
    throw Error(ErrorCode::TruncationTooSmall,
                "generating-function shell " + std::to_string(s.last_shell) +
                    " exceeds residual " + std::to_string(residual));
  return residual;
}

}  // namespace

double genfun_residual(cplx u, cplx v, ComplexPoint z, double tau, int K) {
  require_tau_half_open(tau);
  if (std::abs(u) > 0.5 || std::abs(v) > 0.5)
    throw Error(ErrorCode::InvalidArgument, "genfun_residual requires |u|, |v| <= 0.5");
  const cplx zz = z.value();
  const double c = std::sqrt(1.0 - tau * tau);
  const cplx rhs = std::exp(tau * (v * v - u * u) / 2.0 + u * zz - v * (std::conj(zz) - tau * zz) / c +
                            u * v * c);
  return checked_residual(genfun_partial(u, v, zz, tau, K), rhs);
}

double genfun_residual_tau0(cplx u, cplx v, ComplexPoint z, int K) {
  if (std::abs(u) > 0.5 || std::abs(v) > 0.5)
    throw Error(ErrorCode::InvalidArgument, "genfun_residual_tau0 requires |u|, |v| <= 0.5");
  const cplx zz = z.value();
  const cplx rhs = std::exp(u * zz + v * std::conj(zz) - u * v);
  return checked_residual(genfun_partial(u, -v, zz, 0.0, K), rhs);
}

BivariatePolynomial rodrigues_elliptic_candidate(int m, int n, double tau) {
  require_degree(m, kMaxBivariateDegree, "rodrigues_elliptic_candidate");
  require_degree(n, kMaxBivariateDegree, "rodrigues_elliptic_candidate");
  require_tau_half_open(tau);
  const double s = 1.0 - tau * tau;
  // omega_tau ~ exp(-(z zbar - tau (z^2 + zbar^2)/2) / (1 - tau^2))
  WeightedFunction f{BivariatePolynomial::constant(1.0),
                     GaussianEnvelope{tau / (2.0 * s), -1.0 / s, tau / (2.0 * s), 1.0 / kPi}};
  for (int i = 0; i < m; ++i) f = d_zbar(f);
  for (int i = 0; i < n; ++i) f = d_z(f);
  return ((m + n) % 2 ? -1.0 : 1.0) * f.poly;
}

BivariatePolynomial substitution_candidate(int m, int n, double tau) {
  require_degree(m, kMaxBivariateDegree, "substitution_candidate");
  require_degree(n, kMaxBivariateDegree, "substitution_candidate");
  require_tau_half_open(tau);
  const auto one = BivariatePolynomial::constant(1.0);
  const auto z = BivariatePolynomial::z();
  BivariatePolynomial acc;
  for (int k = 0; k <= std::min(m, n); ++k) {
    const double w = (k % 2 ? -1.0 : 1.0) * factorial(k) * binomial(m, k) * binomial(n, k);
    acc = acc + w * shift(rescaled_hermite_recurrence(m - k, z, tau, one), 0, n - k);
  }
  return acc;
}

}  // namespace polyherm
