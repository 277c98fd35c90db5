#pragma once

#include <cmath>
#include <complex>

#include "polyherm/error.hpp"

namespace polyherm {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

// A finite point of the plane. Construction rejects NaN/Inf.
class ComplexPoint {
 public:
  ComplexPoint() = default;
  ComplexPoint(double re, double im) : z_(re, im) { check(); }
  ComplexPoint(cplx z) : z_(z) { check(); }  // NOLINT(google-explicit-constructor)

  double re() const noexcept { return z_.real(); }
  double im() const noexcept { return z_.imag(); }
  cplx value() const noexcept { return z_; }
  cplx conj() const noexcept { return std::conj(z_); }
  operator cplx() const noexcept { return z_; }  // NOLINT(google-explicit-constructor)

 private:
  void check() const {
    if (!std::isfinite(z_.real()) || !std::isfinite(z_.imag()))
      throw Error(ErrorCode::InvalidArgument, "ComplexPoint must be finite");
  }
  cplx z_{0.0, 0.0};
};

// x^k by repeated squaring; exact 1 for k = 0 (also at x = 0).
inline cplx ipow(cplx x, int k) {
  cplx r = 1.0;
  while (k > 0) {
    if (k & 1) r *= x;
    x *= x;
    k >>= 1;
  }
  return r;
}

// Relative distance used across the checks: |a-b| / max(|b|, floor).
inline double rel_err(cplx a, cplx b, double floor = 1e-300) {
  return std::abs(a - b) / std::max(std::abs(b), floor);
}

}  // namespace polyherm
