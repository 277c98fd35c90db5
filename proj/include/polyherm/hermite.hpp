#pragma once

#include "polyherm/complex_point.hpp"

namespace polyherm {

// Physicists' Hermite recurrence H_{k+1} = 2x H_k - 2k H_{k-1} over any ring
// T providing T*T, T*double, T-T. `one` is the ring unit.
template <class T>
T hermite_recurrence(int m, const T& x, const T& one) {
  if (m == 0) return one;
  T prev = one;
  T cur = x * 2.0;
  for (int k = 1; k < m; ++k) {
    T next = x * cur * 2.0 - prev * (2.0 * k);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

// Rescaled recurrence H_{k+1}(x; s) = x H_k - k s H_{k-1}; with s = tau this
// is (tau/2)^{m/2} H_m(x / sqrt(2 tau)), continuous down to s = 0 where it
// gives x^m.
template <class T, class S>
T rescaled_hermite_recurrence(int m, const T& x, S s, const T& one) {
  if (m == 0) return one;
  T prev = one;
  T cur = x;
  for (int k = 1; k < m; ++k) {
    T next = x * cur - prev * (s * static_cast<double>(k));
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

// H_m(x), physicists' convention, complex argument allowed. m <= 200.
cplx hermite_real(int m, cplx x);

// H_m(z, tau) = (tau/2)^{m/2} H_m(z / sqrt(2 tau)); z^m at tau = 0.
cplx hermite_rescaled(int m, cplx z, double tau);

// Generalized Laguerre L_m^{(alpha)}(x). Three-term recurrence for
// alpha > -1, the shifted-factorial sum otherwise (negative integer alpha is
// allowed). m <= 200.
cplx laguerre(int m, double alpha, cplx x);

// Explicit finite sums, kept as secondary oracles (degree <= 20 is where
// they are trustworthy in double precision).
cplx hermite_explicit_sum(int m, cplx x);
cplx laguerre_explicit_sum(int m, double alpha, cplx x);

double factorial(int n);
double binomial(int n, int k);

}  // namespace polyherm
