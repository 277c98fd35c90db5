#pragma once

#include "polyherm/bivariate_polynomial.hpp"

namespace polyherm {

// Complex symmetric 2x2 matrix [[r11, r12], [r12, r22]].
struct SymMatrix2 {
  cplx r11{1.0};
  cplx r12{0.0};
  cplx r22{1.0};

  cplx det() const { return r11 * r22 - r12 * r12; }

  // R_tau = [[tau, i sqrt(1-tau^2)], [i sqrt(1-tau^2), tau]], det = 1.
  static SymMatrix2 r_tau(double tau);
};

// H^{(R)}_{n,m}(xi1, xi2) from the one-variable Hermite expansion
//   (r11^n r22^m / 2^{n+m})^{1/2} sum_k (-2 r12 / sqrt(r11 r22))^k
//     n! m! / ((n-k)! (m-k)! k!) H_{n-k}(zeta1/sqrt(2 r11)) H_{m-k}(zeta2/sqrt(2 r22)),
// zeta = R xi. sqrt(r11), sqrt(r22) are principal; sqrt(r11 r22) is taken as
// their product so the value matches the generating function for every R.
cplx hermite2d(const SymMatrix2& R, int n, int m, cplx xi1, cplx xi2);

// Same expansion with polynomial arguments, giving a BivariatePolynomial.
BivariatePolynomial hermite2d_poly(const SymMatrix2& R, int n, int m, const BivariatePolynomial& xi1,
                                   const BivariatePolynomial& xi2);

// Coefficient of gamma1^n gamma2^m / (n! m!) in exp(-<R g, g>/2 + <R xi, g>),
// read off the truncated power series sum_{j<=K} q^j / j! of the exponent q.
// The exponent has no constant term, so K >= n + m gives the exact
// coefficient; smaller K throws TruncationTooSmall.
cplx hermite2d_genfun(const SymMatrix2& R, int n, int m, cplx xi1, cplx xi2, int K);

// The squeezed family through the 2D-Hermite route:
//   i^n / sqrt(m!) * H^{(R_tau)}_{m,n}(zbar, i (tau zbar - z) / sqrt(1 - tau^2)).
BivariatePolynomial squeezed_via_hermite2d(int m, int n, double tau);

}  // namespace polyherm
