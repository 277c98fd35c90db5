#include "polyherm/kernels.hpp"

#include <algorithm>
#include <cmath>

#include "polyherm/complex_hermite.hpp"
#include "polyherm/error.hpp"
#include "polyherm/hermite.hpp"
#include "polyherm/linalg.hpp"
#include "polyherm/operators.hpp"
#include "polyherm/parallel.hpp"
#include "polyherm/squeezed.hpp"

namespace polyherm {

namespace {

void require_tau_open(double tau, const char* what) {
  if (!(tau > 0.0 && tau < 1.0)) throw Error(ErrorCode::TauOutOfRange, std::string(what) + " needs tau in (0, 1)");
}

void require_level(int n) { require_degree(n, kMaxScalarDegree, "kernel level"); }

}  // namespace

std::vector<cplx> h_tau_sequence(int K, cplx w, double tau) {
  require_degree(K, kMaxScalarDegree, "h_tau_sequence");
  require_tau_half_open(tau);
  std::vector<cplx> h(K + 1);
  h[0] = 1.0;
  if (K >= 1) h[1] = w;
  for (int k = 1; k < K; ++k) h[k + 1] = (w * h[k] - std::sqrt(static_cast<double>(k)) * tau * h[k - 1]) / std::sqrt(k + 1.0);
  return h;
}

cplx h_tau(int k, cplx w, double tau) { return h_tau_sequence(k, w, tau).back(); }

cplx kernel_w_closed(const KernelSpec& spec, cplx z, cplx w) {
  require_tau_open(spec.tau, "kernel_w_closed");
  require_level(spec.n);
  const double tau = spec.tau;
  const cplx zb = std::conj(z);
  // (tau/2)^{n/2} H_n(x / sqrt(2 tau)) with x = tau zbar + z - w.
  const cplx herm = hermite_rescaled(spec.n, tau * zb + z - w, tau);
  return std::exp(zb * w - 0.5 * tau * zb * zb) * herm / std::sqrt(factorial(spec.n));
}

SeriesValue kernel_w_series(const KernelSpec& spec, cplx z, cplx w, int K) {
  require_tau_half_open(spec.tau);
  require_level(spec.n);
  if (K < 1 || K > kMaxScalarDegree)
    throw Error(ErrorCode::TruncationTooSmall, "series truncation K = " + std::to_string(K) + " outside [1, 200]");
  const auto h = h_tau_sequence(K, w, spec.tau);
  SeriesValue out;
  cplx sum = 0.0;
  double last = 0.0;
  double prev = 0.0;
  for (int k = 0; k <= K; ++k) {
    const cplx term = h[k] * std::conj(phi_normalized(k, spec.n, z));
    sum += term;
    prev = last;
    last = std::abs(term);
  }
  out.value = sum;
  out.last_term = std::max(last, prev);
  out.terms = K + 1;
  if (out.last_term > kSeriesTailTolerance * std::abs(sum))
    throw Error(ErrorCode::TruncationTooSmall, "series tail " + std::to_string(out.last_term) +
                                                   " exceeds 1e-12 of the partial sum at K = " + std::to_string(K));
  return out;
}

SeriesValue kernel_w_series_auto(const KernelSpec& spec, cplx z, cplx w) {
  for (int K = std::max(spec.n + 2, 8);; K += 4) {
    K = std::min(K, kMaxScalarDegree);
    try {
      return kernel_w_series(spec, z, w, K);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::TruncationTooSmall || K == kMaxScalarDegree) throw;
    }
  }
}

cplx kernel_k_landau(int n, cplx z, cplx w) {
  require_level(n);
  return std::exp(z * std::conj(w)) * laguerre(n, 0.0, std::norm(z - w));
}

cplx kernel_k_landau_linear(int n, cplx z, cplx w) {
  require_level(n);
  return std::exp(z * std::conj(w)) * laguerre(n, 0.0, std::abs(z - w));
}

std::vector<cplx> transform_T(const KernelSpec& spec, const PlaneFunction& phi, const QuadratureGrid& grid,
                              const std::vector<cplx>& zs) {
  if (grid.kind != GridKind::EllipticNative || grid.tau != spec.tau)
    throw Error(ErrorCode::GridMismatch, "transform_T needs an elliptic grid built for the kernel's tau");
  require_tau_open(spec.tau, "transform_T");
  const std::size_t N = grid.size();
  std::vector<cplx> phi_w(N);
  parallel_for(N, [&](std::size_t i) { phi_w[i] = phi(grid.node(i)) * grid.weight(i); });
  std::vector<cplx> out(zs.size());
  parallel_for(zs.size(), [&](std::size_t j) {
    std::vector<cplx> terms(N);
    for (std::size_t i = 0; i < N; ++i) terms[i] = std::conj(kernel_w_closed(spec, zs[j], grid.node(i))) * phi_w[i];
    out[j] = pairwise_sum(std::span<const cplx>(terms));
  });
  return out;
}

PolyanalyticFit fit_polyanalytic(const std::vector<cplx>& zs, const std::vector<cplx>& values, int max_z,
                                 int max_zbar) {
  if (zs.size() != values.size()) throw Error(ErrorCode::InvalidArgument, "fit: points and values differ in length");
  if (max_z < 0 || max_zbar < 0) throw Error(ErrorCode::InvalidArgument, "fit: negative degree bound");
  const int cols = (max_z + 1) * (max_zbar + 1);
  const int rows = static_cast<int>(zs.size());
  if (rows < cols) throw Error(ErrorCode::InvalidArgument, "fit: fewer sample points than basis functions");
  ComplexMatrix A(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int a = 0; a <= max_z; ++a)
      for (int b = 0; b <= max_zbar; ++b) A(i, a * (max_zbar + 1) + b) = ipow(zs[i], a) * ipow(std::conj(zs[i]), b);
  const auto ls = least_squares(A, values);
  return {ls.x, max_z, max_zbar, ls.relative_residual};
}

std::vector<cplx> sample_disc(int count, double radius) {
  std::vector<cplx> pts;
  const double golden = kPi * (3.0 - std::sqrt(5.0));
  for (int i = 0; i < count; ++i) pts.push_back(std::polar(radius * std::sqrt((i + 0.5) / count), i * golden));
  return pts;
}

double w_cancellation(const KernelSpec& spec, cplx z, cplx w) {
  require_level(spec.n);
  const double r = std::abs(z);
  if (r == 0.0) throw Error(ErrorCode::InvalidArgument, "w_cancellation needs z != 0");
  const int n = spec.n;
  const double theta = std::arg(z);
  const auto h = h_tau_sequence(std::max(n, 1), w, spec.tau);
  cplx sum = 0.0;
  for (int k = 0; k < n; ++k) {
    const double sk = k % 2 ? -1.0 : 1.0;
    const double sn = n % 2 ? -1.0 : 1.0;
    const cplx first = sk * std::sqrt(factorial(k) / factorial(n)) * std::pow(r, n - k) *
                       laguerre(k, n - k, r * r);
    const cplx second = sn * std::sqrt(factorial(n) / factorial(k)) * std::pow(r, k - n) *
                        laguerre(n, k - n, r * r);
    sum += (first - second) * std::polar(1.0, (n - k) * theta) * h[k];
  }
  return std::abs(sum);
}

double squeeze_identity_residual(const KernelSpec& spec, cplx z, cplx w, int K) {
  require_degree(K, kMaxSqueezedDegree, "squeeze_identity_residual");
  const double tau = spec.tau;
  const double c = std::sqrt(1.0 - tau * tau);
  const auto series = kernel_w_series(spec, z, c * w, K);
  const cplx lhs = std::sqrt(c) * std::exp(0.5 * tau * w * w) * series.value;
  cplx rhs = 0.0;
  for (int k = 0; k <= K; ++k) rhs += std::conj(phi_normalized(k, spec.n, z)) * squeeze_monomial(k, tau)(w);
  return std::abs(lhs - rhs);
}

TpcsParams tpcs_ab(double tau) {
  require_tau_open(tau, "tpcs_ab");
  const double a = 1.0 / std::sqrt(1.0 - tau * tau);
  return {a, tau * a};
}

cplx tpcs_kernel(double tau, cplx z, cplx w) {
  const auto [a, b] = tpcs_ab(tau);
  const cplx zb = std::conj(z);
  return std::exp((2.0 * zb * w - b * zb * zb + b * w * w) / (2.0 * a) - 0.5 * std::norm(z) - 0.5 * std::norm(w)) /
         std::sqrt(a);
}

cplx tpcs_reference(double tau, cplx z, cplx w) {
  require_tau_open(tau, "tpcs_reference");
  const double c = std::sqrt(1.0 - tau * tau);
  const cplx W = kernel_w_closed({tau, 0}, z, c * w);
  return std::exp(-0.5 * std::norm(w) - 0.5 * std::norm(z) + 0.5 * tau * w * w) * std::sqrt(c) * W;
}

}  // namespace polyherm
