#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "polyherm/linalg.hpp"

namespace polyherm {

// Philox4x32-10 counter-based generator. The 128-bit counter is
// (draw index low, draw index high, stream low, stream high) and the key is
// the 64-bit seed, so distinct (seed, stream) pairs never share a block.
class Philox {
 public:
  using Block = std::array<std::uint32_t, 4>;
  static constexpr const char* kName = "philox4x32-10";

  Philox(std::uint64_t seed, std::uint64_t stream) : seed_(seed), stream_(stream) {}

  static Block block(const Block& counter, std::array<std::uint32_t, 2> key);

  std::uint64_t next_u64();
  // Uniform in (0, 1], 53 random bits.
  double next_uniform();
  // Standard normal by Box-Muller; values are produced in pairs.
  double next_normal();

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t counter_ = 0;
  Block buf_{};
  int buf_pos_ = 4;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

inline constexpr int kMaxMatrixSize = 512;

// Hermitian, real standard normal diagonal, (g1 + i g2)/sqrt(2) above the
// diagonal, mirrored below. Drawn from the given Philox stream.
ComplexMatrix sample_gue(int N, std::uint64_t seed, std::uint64_t stream = 0);

// (sqrt(1+tau) U1 + i sqrt(1-tau) U2)/sqrt(2) with U1, U2 from streams 1 and 2;
// `raw` drops the 1/sqrt(2).
ComplexMatrix sample_elliptic(int N, double tau, std::uint64_t seed, bool raw = false);

// Householder Hessenberg reduction followed by shifted complex QR with
// Wilkinson shifts. NoConvergence after 30 N iterations.
std::vector<cplx> eigenvalues(const ComplexMatrix& M);

// Sort by real part, then imaginary part.
void canonical_sort(std::vector<cplx>& v);

// ||M v - lambda v|| / ||M||_F with v from two steps of inverse iteration,
// using a dense LU of M - lambda I.
double eigen_residual(const ComplexMatrix& M, cplx lambda);

struct SpectrumSample {
  int N = 0;
  double tau = 0.0;
  std::uint64_t seed = 0;
  std::vector<cplx> eigenvalues;
};

SpectrumSample sample_spectrum(int N, double tau, std::uint64_t seed, bool raw = false);

struct SpectralStats {
  cplx mean;
  cplx second_moment_over_N;  // mean(lambda^2) / N
  double ellipse_fraction = 0.0;
};

inline constexpr double kEllipseMargin = 0.05;

SpectralStats spectral_stats(const SpectrumSample& sample);

}  // namespace polyherm
