#pragma once

#include <vector>

#include "polyherm/quadrature.hpp"

namespace polyherm {

struct KernelSpec {
  double tau = 0.5;
  int n = 0;
};

// h_{tau,k}(w) = (tau/2)^{k/2} H_k(w / sqrt(2 tau)) / sqrt(k!), k <= 200;
// w^k / sqrt(k!) at tau = 0.
cplx h_tau(int k, cplx w, double tau);
// h_{tau,0..K}(w) by the normalized recurrence.
std::vector<cplx> h_tau_sequence(int K, cplx w, double tau);

// (tau/2)^{n/2} e^{zbar w - tau zbar^2/2} H_n(sqrt(tau/2) zbar + (z-w)/sqrt(2 tau)) / sqrt(n!),
// tau in (0,1).
cplx kernel_w_closed(const KernelSpec& spec, cplx z, cplx w);

struct SeriesValue {
  cplx value;
  double last_term = 0.0;  // max magnitude of the last two terms
  int terms = 0;
};

inline constexpr double kSeriesTailTolerance = 1e-12;

// sum_{k<=K} h_{tau,k}(w) conj(phi_{k,n}(z)). Throws TruncationTooSmall when
// the last terms exceed kSeriesTailTolerance * |partial sum|. tau in [0,1).
SeriesValue kernel_w_series(const KernelSpec& spec, cplx z, cplx w, int K);
// Same series with K grown (up to 200) until the tail rule holds.
SeriesValue kernel_w_series_auto(const KernelSpec& spec, cplx z, cplx w);

// e^{z conj(w)} L_n(|z-w|^2).
cplx kernel_k_landau(int n, cplx z, cplx w);
// e^{z conj(w)} L_n(|z-w|), the linear-distance reading; kept as a witness
// that fails the reproducing property.
cplx kernel_k_landau_linear(int n, cplx z, cplx w);

// Values of z -> integral conj(W(z,w)) phi(w) omega_tau(w) dw at the points zs.
std::vector<cplx> transform_T(const KernelSpec& spec, const PlaneFunction& phi, const QuadratureGrid& grid,
                              const std::vector<cplx>& zs);

struct PolyanalyticFit {
  std::vector<cplx> coeffs;  // index a * (max_zbar + 1) + b for z^a zbar^b
  int max_z = 0;
  int max_zbar = 0;
  double relative_residual = 0.0;
};

// Least squares fit of values by span{z^a zbar^b : a <= max_z, b <= max_zbar}.
PolyanalyticFit fit_polyanalytic(const std::vector<cplx>& zs, const std::vector<cplx>& values, int max_z,
                                 int max_zbar);

// Deterministic sample points: a polar grid inside |z| <= radius.
std::vector<cplx> sample_disc(int count, double radius);

// |sum_{k<n} [first form - second form] h_{tau,k}(w)| for the split of the
// double-form series at level n (terms k < n). Needs z != 0.
double w_cancellation(const KernelSpec& spec, cplx z, cplx w);

// |(1-tau^2)^{1/4} e^{tau w^2/2} W(z, sqrt(1-tau^2) w) -
//   sum_{k<=K} conj(phi_{k,n}(z)) S[w^k/sqrt(k!)](w)| with W from the series.
// K <= 40. Throws TruncationTooSmall per the series tail rule.
double squeeze_identity_residual(const KernelSpec& spec, cplx z, cplx w, int K);

struct TpcsParams {
  double a;
  double b;
};
TpcsParams tpcs_ab(double tau);

// (1/sqrt(a)) exp((2 zbar w - b zbar^2 + b w^2)/(2a)) e^{-|z|^2/2 - |w|^2/2}, tau in (0,1).
cplx tpcs_kernel(double tau, cplx z, cplx w);
// e^{-|w|^2/2} e^{-|z|^2/2} (1-tau^2)^{1/4} e^{tau w^2/2} W_{tau,0}(z, sqrt(1-tau^2) w)
// with W from kernel_w_closed.
cplx tpcs_reference(double tau, cplx z, cplx w);

}  // namespace polyherm
