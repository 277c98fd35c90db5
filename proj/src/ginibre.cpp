#include "polyherm/ginibre.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "polyherm/error.hpp"

namespace polyherm {

namespace {

constexpr std::uint32_t kM0 = 0xD2511F53u;
constexpr std::uint32_t kM1 = 0xCD9E8D57u;
constexpr std::uint32_t kW0 = 0x9E3779B9u;
constexpr std::uint32_t kW1 = 0xBB67AE85u;

void require_size(int N) {
  if (N < 1 || N > kMaxMatrixSize)
    throw Error(ErrorCode::SizeOutOfRange, "N = " + std::to_string(N) + " outside [1, 512]");
}

}  // namespace

Philox::Block Philox::block(const Block& counter, std::array<std::uint32_t, 2> key) {
  Block c = counter;
  for (int round = 0; round < 10; ++round) {
    const std::uint64_t p0 = static_cast<std::uint64_t>(kM0) * c[0];
    const std::uint64_t p1 = static_cast<std::uint64_t>(kM1) * c[2];
    const auto hi0 = static_cast<std::uint32_t>(p0 >> 32), lo0 = static_cast<std::uint32_t>(p0);
    const auto hi1 = static_cast<std::uint32_t>(p1 >> 32), lo1 = static_cast<std::uint32_t>(p1);
    c = {hi1 ^ c[1] ^ key[0], lo1, hi0 ^ c[3] ^ key[1], lo0};
    key[0] += kW0;
    key[1] += kW1;
  }
  return c;
}

std::uint64_t Philox::next_u64() {
  if (buf_pos_ >= 4) {
    const Block ctr = {static_cast<std::uint32_t>(counter_), static_cast<std::uint32_t>(counter_ >> 32),
                       static_cast<std::uint32_t>(stream_), static_cast<std::uint32_t>(stream_ >> 32)};
    buf_ = block(ctr, {static_cast<std::uint32_t>(seed_), static_cast<std::uint32_t>(seed_ >> 32)});
    ++counter_;
    buf_pos_ = 0;
  }
  const std::uint64_t lo = buf_[buf_pos_];
  const std::uint64_t hi = buf_[buf_pos_ + 1];
  buf_pos_ += 2;
  return (hi << 32) | lo;
}

double Philox::next_uniform() { return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53; }

double Philox::next_normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = next_uniform();
  const double u2 = next_uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double t = 2.0 * kPi * u2;
  spare_ = r * std::sin(t);
  has_spare_ = true;
  return r * std::cos(t);
}

ComplexMatrix sample_gue(int N, std::uint64_t seed, std::uint64_t stream) {
  require_size(N);
  Philox rng(seed, stream);
  ComplexMatrix M(N, N);
  const double s = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < N; ++i) {
    M(i, i) = rng.next_normal();
    for (int j = i + 1; j < N; ++j) {
      const double g1 = rng.next_normal();
      const double g2 = rng.next_normal();
      M(i, j) = cplx(s * g1, s * g2);
      M(j, i) = std::conj(M(i, j));
    }
  }
  return M;
}

ComplexMatrix sample_elliptic(int N, double tau, std::uint64_t seed, bool raw) {
  require_size(N);
  if (!(tau >= 0.0 && tau <= 1.0)) throw Error(ErrorCode::TauOutOfRange, "sample_elliptic needs tau in [0, 1]");
  const auto U1 = sample_gue(N, seed, 1);
  const auto U2 = sample_gue(N, seed, 2);
  const double norm = raw ? 1.0 : 1.0 / std::sqrt(2.0);
  const double a = norm * std::sqrt(1.0 + tau);
  const double b = norm * std::sqrt(1.0 - tau);
  ComplexMatrix J(N, N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      J(i, j) = a * U1(i, j);
      if (b != 0.0) J(i, j) += cplx(0.0, b) * U2(i, j);
    }
  return J;
}

namespace {

void hessenberg(ComplexMatrix& H) {
  const int n = H.rows();
  std::vector<cplx> v(n);
  for (int k = 0; k + 2 < n; ++k) {
    double xnorm = 0.0;
    for (int i = k + 1; i < n; ++i) xnorm += std::norm(H(i, k));
    xnorm = std::sqrt(xnorm);
    if (xnorm == 0.0) continue;
    const cplx x0 = H(k + 1, k);
    const cplx phase = std::abs(x0) == 0.0 ? cplx(1.0) : x0 / std::abs(x0);
    const cplx alpha = -phase * xnorm;
    double vn = 0.0;
    for (int i = k + 1; i < n; ++i) {
      v[i] = H(i, k);
      if (i == k + 1) v[i] -= alpha;
      vn += std::norm(v[i]);
    }
    if (vn == 0.0) continue;
    const double beta = 2.0 / vn;
    // H <- P H, P = I - beta v v^H
    for (int j = k; j < n; ++j) {
      cplx s = 0.0;
      for (int i = k + 1; i < n; ++i) s += std::conj(v[i]) * H(i, j);
      s *= beta;
      for (int i = k + 1; i < n; ++i) H(i, j) -= s * v[i];
    }
    // H <- H P
    for (int i = 0; i < n; ++i) {
      cplx s = 0.0;
      for (int j = k + 1; j < n; ++j) s += H(i, j) * v[j];
      s *= beta;
      for (int j = k + 1; j < n; ++j) H(i, j) -= s * std::conj(v[j]);
    }
    H(k + 1, k) = alpha;
    for (int i = k + 2; i < n; ++i) H(i, k) = 0.0;
  }
}

cplx wilkinson_shift(cplx a, cplx b, cplx c, cplx d) {
  const cplx half = 0.5 * (a - d);
  const cplx disc = std::sqrt(half * half + b * c);
  const cplx mu1 = 0.5 * (a + d) + disc;
  const cplx mu2 = 0.5 * (a + d) - disc;
  return std::abs(mu1 - d) < std::abs(mu2 - d) ? mu1 : mu2;
}

struct Givens {
  double c;
  cplx s;
};

// G = [c s; -conj(s) c] with G [x; y] = [r; 0].
Givens make_givens(cplx x, cplx y) {
  const double ax = std::abs(x);
  const double ay = std::abs(y);
  if (ay == 0.0) return {1.0, 0.0};
  if (ax == 0.0) return {0.0, std::conj(y) / ay};
  const double r = std::hypot(ax, ay);
  const cplx phase = x / ax;
  return {ax / r, phase * std::conj(y) / r};
}

}  // namespace

std::vector<cplx> eigenvalues(const ComplexMatrix& M) {
  const int n = M.rows();
  if (M.cols() != n) throw Error(ErrorCode::InvalidArgument, "eigenvalues needs a square matrix");
  require_size(n);
  for (const auto& v : M.data())
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw Error(ErrorCode::InvalidArgument, "matrix has non-finite entries");
  ComplexMatrix H = M;
  hessenberg(H);
  const double eps = std::numeric_limits<double>::epsilon();
  const double hnorm = std::max(H.frobenius_norm(), std::numeric_limits<double>::min());
  std::vector<cplx> eig(n);
  std::vector<Givens> rot(n);
  int hi = n - 1;
  int iter = 0;
  long total = 0;
  const long cap = 30L * n;
  while (hi >= 0) {
    if (hi == 0) {
      eig[0] = H(0, 0);
      break;
    }
    int l = hi;
    while (l > 0) {
      double scale = std::abs(H(l - 1, l - 1)) + std::abs(H(l, l));
      if (scale == 0.0) scale = hnorm;
      if (std::abs(H(l, l - 1)) <= eps * scale) break;
      --l;
    }
    if (l > 0) H(l, l - 1) = 0.0;
    if (l == hi) {
      eig[hi] = H(hi, hi);
      --hi;
      iter = 0;
      continue;
    }
    if (++total > cap) throw Error(ErrorCode::NoConvergence, "shifted QR exceeded 30 N iterations");
    ++iter;
    cplx sigma;
    if (iter % 10 == 0) {
      // Exceptional shift to break cycles.
      sigma = H(hi, hi) + 0.75 * std::abs(H(hi, hi - 1));
    } else {
      sigma = wilkinson_shift(H(hi - 1, hi - 1), H(hi - 1, hi), H(hi, hi - 1), H(hi, hi));
    }
    for (int k = l; k <= hi; ++k) H(k, k) -= sigma;
    for (int k = l; k < hi; ++k) {
      const Givens g = make_givens(H(k, k), H(k + 1, k));
      rot[k] = g;
      for (int j = k; j <= hi; ++j) {
        const cplx x = H(k, j);
        const cplx y = H(k + 1, j);
        H(k, j) = g.c * x + g.s * y;
        H(k + 1, j) = -std::conj(g.s) * x + g.c * y;
      }
    }
    for (int k = l; k < hi; ++k) {
      const Givens g = rot[k];
      const int top = std::min(k + 2, hi);
      for (int i = l; i <= top; ++i) {
        const cplx x = H(i, k);
        const cplx y = H(i, k + 1);
        H(i, k) = g.c * x + std::conj(g.s) * y;
        H(i, k + 1) = -g.s * x + g.c * y;
      }
    }
    for (int k = l; k <= hi; ++k) H(k, k) += sigma;
  }
  return eig;
}

void canonical_sort(std::vector<cplx>& v) {
  std::sort(v.begin(), v.end(), [](cplx a, cplx b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
}

double eigen_residual(const ComplexMatrix& M, cplx lambda) {
  const int n = M.rows();
  ComplexMatrix S = M;
  for (int i = 0; i < n; ++i) S(i, i) -= lambda;
  const LuFactorization lu(S);
  std::vector<cplx> v(n);
  for (int i = 0; i < n; ++i) v[i] = cplx(1.0, 0.5 * std::sin(1.0 + i));
  for (int step = 0; step < 2; ++step) {
    v = lu.solve(v);
    const double vn = norm2(v);
    if (!(vn > 0.0) || !std::isfinite(vn)) throw Error(ErrorCode::EigensolveFailure, "inverse iteration broke down");
    for (auto& x : v) x /= vn;
  }
  auto Mv = M * v;
  for (int i = 0; i < n; ++i) Mv[i] -= lambda * v[i];
  return norm2(Mv) / std::max(M.frobenius_norm(), std::numeric_limits<double>::min());
}

SpectrumSample sample_spectrum(int N, double tau, std::uint64_t seed, bool raw) {
  SpectrumSample s;
  s.N = N;
  s.tau = tau;
  s.seed = seed;
  s.eigenvalues = eigenvalues(sample_elliptic(N, tau, seed, raw));
  canonical_sort(s.eigenvalues);
  return s;
}

SpectralStats spectral_stats(const SpectrumSample& sample) {
  if (sample.eigenvalues.empty()) throw Error(ErrorCode::InvalidArgument, "spectral_stats needs a nonempty sample");
  const double count = static_cast<double>(sample.eigenvalues.size());
  const double N = sample.N > 0 ? sample.N : count;
  const double ax = (1.0 + sample.tau) * (1.0 + kEllipseMargin);
  const double ay = (1.0 - sample.tau) * (1.0 + kEllipseMargin);
  const double rs = 1.0 / std::sqrt(N);
  cplx sum = 0.0, sum2 = 0.0;
  int inside = 0;
  for (const auto& l : sample.eigenvalues) {
    sum += l;
    sum2 += l * l;
    const double x = l.real() * rs;
    const double y = l.imag() * rs;
    const bool in = ay > 0.0 ? (x / ax) * (x / ax) + (y / ay) * (y / ay) <= 1.0 : (y == 0.0 && std::abs(x) <= ax);
    inside += in;
  }
  return {sum / count, sum2 / count / N, inside / count};
}

}  // namespace polyherm
