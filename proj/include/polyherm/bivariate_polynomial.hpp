#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "polyherm/complex_point.hpp"

namespace polyherm {

// Exponent pair of the monomial z^a zbar^b.
struct Exponent {
  int a = 0;
  int b = 0;
  auto operator<=>(const Exponent&) const = default;
};

// Complex-coefficient polynomial in the two independent symbols z and zbar.
//
// The representation is sparse and trimmed: a coefficient is dropped only when
// its magnitude underflows below 1e-300. Values are immutable after
// construction; every operation returns a new polynomial.
class BivariatePolynomial {
 public:
  using Terms = std::map<Exponent, cplx>;

  static constexpr double kTrimThreshold = 1e-300;

  BivariatePolynomial() = default;
  explicit BivariatePolynomial(Terms terms);

  static BivariatePolynomial constant(cplx c);
  static BivariatePolynomial monomial(int a, int b, cplx c = 1.0);
  static BivariatePolynomial z() { return monomial(1, 0); }
  static BivariatePolynomial zbar() { return monomial(0, 1); }

  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  // -1 for the zero polynomial.
  int deg_z() const noexcept { return deg_z_; }
  int deg_zbar() const noexcept { return deg_zbar_; }

  cplx coeff(int a, int b) const;
  double max_abs_coeff() const noexcept;

  // Value at (z, conj z), two-level Horner (outer in z, inner in zbar).
  cplx operator()(cplx z) const { return eval_pair(z, std::conj(z)); }
  // Value with the two symbols bound to independent numbers.
  cplx eval_pair(cplx z, cplx zbar) const;

  // Coefficient of z^a zbar^b multiplied by sz^a szbar^b, i.e. the
  // polynomial p(sz * z, szbar * zbar).
  BivariatePolynomial scale_arguments(cplx sz, cplx szbar) const;
  // Exchange the roles of z and zbar: p(zbar, z).
  BivariatePolynomial swap_symbols() const;
  BivariatePolynomial conj_coefficients() const;

  std::string to_json() const;
  static BivariatePolynomial from_json(const std::string& text);

  friend BivariatePolynomial operator+(const BivariatePolynomial& p, const BivariatePolynomial& q);
  friend BivariatePolynomial operator-(const BivariatePolynomial& p, const BivariatePolynomial& q);
  friend BivariatePolynomial operator-(const BivariatePolynomial& p);
  friend BivariatePolynomial operator*(const BivariatePolynomial& p, const BivariatePolynomial& q);
  friend BivariatePolynomial operator*(cplx c, const BivariatePolynomial& p);
  friend BivariatePolynomial operator*(const BivariatePolynomial& p, cplx c) { return c * p; }
  friend BivariatePolynomial operator+(const BivariatePolynomial& p, cplx c) {
    return p + constant(c);
  }

  friend bool operator==(const BivariatePolynomial&, const BivariatePolynomial&) = default;

 private:
  void trim_and_cache();

  Terms terms_;
  int deg_z_ = -1;
  int deg_zbar_ = -1;
};

BivariatePolynomial d_z(const BivariatePolynomial& p);
BivariatePolynomial d_zbar(const BivariatePolynomial& p);
// Multiplication by z^a zbar^b.
BivariatePolynomial shift(const BivariatePolynomial& p, int a, int b);
BivariatePolynomial pow(const BivariatePolynomial& p, int k);

// max |p_ab - q_ab| over the union of supports.
double max_coeff_diff(const BivariatePolynomial& p, const BivariatePolynomial& q);
// max |p_ab - q_ab| / max |q_ab|; 0 when both vanish.
double rel_coeff_diff(const BivariatePolynomial& p, const BivariatePolynomial& q);

}  // namespace polyherm
