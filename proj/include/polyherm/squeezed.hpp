#pragma once

#include "polyherm/bivariate_polynomial.hpp"

namespace polyherm {

// Squeeze parameter pair with tau = tanh(mu).
class SqueezeParams {
 public:
  static SqueezeParams from_mu(double mu);
  static SqueezeParams from_tau(double tau);

  double tau() const noexcept { return tau_; }
  double mu() const noexcept { return mu_; }

 private:
  SqueezeParams(double tau, double mu) : tau_(tau), mu_(mu) {}
  double tau_;
  double mu_;
};

void require_tau_half_open(double tau);  // [0, 1)

// Squeezed complex Hermite polynomial H_{m,n}(z, zbar; tau) expanded in the
// (z, zbar) basis. Uses
//   (1/sqrt(m!)) sum_k i^{n-k} k! C(n,k) C(m,k) (1-tau^2)^{k/2}
//                 H_{m-k}(z; tau) H_{n-k}(i (zbar - tau z)/sqrt(1-tau^2); tau)
// with H_p(.; tau) the rescaled Hermite polynomial, which is the closed form
// with the powers of tau absorbed. At tau = 0 this is (-1)^n H_{m,n}/sqrt(m!).
BivariatePolynomial squeezed_hermite(int m, int n, double tau);

// Pointwise value of the same closed form (no polynomial expansion).
cplx squeezed_hermite_value(int m, int n, double tau, cplx z);

// |partial sum_{m,n<=K} sqrt(m!) H_{m,n}(z;tau) u^m v^n/(m! n!) - exp(...)|
// for the squeezed generating function. Throws TruncationTooSmall when the
// outermost shell (max(m,n) = K) is not below the residual.
double genfun_residual(cplx u, cplx v, ComplexPoint z, double tau, int K);

// The tau = 0 reduction with v -> -v, compared with exp(u z + v zbar - u v).
double genfun_residual_tau0(cplx u, cplx v, ComplexPoint z, int K);

// Rejected candidates, kept as negative witnesses.
// (-1)^{m+n} omega_tau^{-1} d_z^n d_zbar^m omega_tau.
BivariatePolynomial rodrigues_elliptic_candidate(int m, int n, double tau);
// sum_k (-1)^k k! C(m,k) C(n,k) H_{m-k}(z; tau) zbar^{n-k}.
BivariatePolynomial substitution_candidate(int m, int n, double tau);

}  // namespace polyherm
