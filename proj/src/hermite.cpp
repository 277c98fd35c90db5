#include "polyherm/hermite.hpp"

#include <array>
#include <string>

namespace polyherm {

namespace {

constexpr int kFactorialTableSize = 171;  // 170! is the largest finite double

const std::array<double, kFactorialTableSize>& factorial_table() {
  static const auto table = [] {
    std::array<double, kFactorialTableSize> t{};
    t[0] = 1.0;
    for (int i = 1; i < kFactorialTableSize; ++i) t[i] = t[i - 1] * i;
    return t;
  }();
  return table;
}

void require_tau(double tau) {
  if (!(tau >= 0.0 && tau < 1.0))
    throw Error(ErrorCode::TauOutOfRange, "tau = " + std::to_string(tau) + " outside [0, 1)");
}

}  // namespace

double factorial(int n) {
  if (n < 0 || n >= kFactorialTableSize)
    throw Error(ErrorCode::DegreeTooLarge, "factorial argument " + std::to_string(n));
  return factorial_table()[n];
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  k = std::min(k, n - k);
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

cplx hermite_real(int m, cplx x) {
  require_degree(m, kMaxScalarDegree, "hermite_real");
  return hermite_recurrence<cplx>(m, x, 1.0);
}

cplx hermite_rescaled(int m, cplx z, double tau) {
  require_degree(m, kMaxScalarDegree, "hermite_rescaled");
  require_tau(tau);
  return rescaled_hermite_recurrence<cplx, double>(m, z, tau, 1.0);
}

cplx laguerre(int m, double alpha, cplx x) {
  require_degree(m, kMaxScalarDegree, "laguerre");
  if (alpha <= -1.0) return laguerre_explicit_sum(m, alpha, x);
  if (m == 0) return 1.0;
  cplx prev = 1.0;
  cplx cur = 1.0 + alpha - x;
  for (int k = 1; k < m; ++k) {
    cplx next = ((2.0 * k + 1.0 + alpha - x) * cur - (k + alpha) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

cplx hermite_explicit_sum(int m, cplx x) {
  require_degree(m, kMaxScalarDegree, "hermite_explicit_sum");
  cplx s = 0.0;
  for (int l = 0; 2 * l <= m; ++l) {
    const double c = (l % 2 ? -1.0 : 1.0) / (factorial(l) * factorial(m - 2 * l));
    s += c * ipow(2.0 * x, m - 2 * l);
  }
  return factorial(m) * s;
}

cplx laguerre_explicit_sum(int m, double alpha, cplx x) {
  require_degree(m, kMaxScalarDegree, "laguerre_explicit_sum");
  // (1/m!) sum_k (-m)_k (k + alpha + 1)_{m-k} x^k / k!, regrouped per term as
  // (-1)^k [(k + alpha + 1)_{m-k} / (m-k)!] x^k / k! to stay finite for m > 170.
  cplx s = 0.0;
  cplx xk_over_kfact = 1.0;
  for (int k = 0; k <= m; ++k) {
    double rising = 1.0;
    for (int i = 0; i < m - k; ++i) rising *= (k + alpha + 1.0 + i) / (i + 1.0);
    s += (k % 2 ? -1.0 : 1.0) * rising * xk_over_kfact;
    xk_over_kfact *= x / (k + 1.0);
  }
  return s;
}

}  // namespace polyherm
