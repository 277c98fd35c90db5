#pragma once

#include <array>
#include <map>
#include <vector>

#include "polyherm/bivariate_polynomial.hpp"

namespace polyherm {

// c * exp(q20 z^2 + q11 z zbar + q02 zbar^2).
struct GaussianEnvelope {
  cplx q20{0.0};
  cplx q11{0.0};
  cplx q02{0.0};
  cplx c{1.0};

  // True when the real quadratic form Re(q20 z^2 + q11 |z|^2 + q02 zbar^2)
  // on (x, y) is negative definite, i.e. the envelope is in L^2(dx dy).
  bool integrable() const noexcept;

  // d_z and d_zbar of the exponent; both are linear polynomials.
  BivariatePolynomial dz_exponent() const;
  BivariatePolynomial dzbar_exponent() const;

  cplx operator()(cplx z) const;
};

// Polynomial part times a fixed Gaussian envelope.
struct WeightedFunction {
  BivariatePolynomial poly;
  GaussianEnvelope env;

  cplx operator()(cplx z) const { return poly(z) * env(z); }
};

WeightedFunction d_z(const WeightedFunction& f);
WeightedFunction d_zbar(const WeightedFunction& f);

// A single normal-ordered term  coeff * z^a zbar^b d_z^p d_zbar^q.
struct OperatorTerm {
  cplx coeff{0.0};
  int a = 0;
  int b = 0;
  int p = 0;
  int q = 0;
};

// Finite sum of normal-ordered terms (multiplications left of derivatives).
// Composition and commutators stay inside this type; terms with equal
// (a, b, p, q) are collected.
class LadderOperator {
 public:
  using Key = std::array<int, 4>;  // a, b, p, q

  LadderOperator() = default;
  explicit LadderOperator(const std::vector<OperatorTerm>& terms);

  static LadderOperator identity() { return LadderOperator({{1.0, 0, 0, 0, 0}}); }
  static LadderOperator zero() { return {}; }

  std::vector<OperatorTerm> terms() const;
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  cplx coeff(int a, int b, int p, int q) const;

  friend LadderOperator operator+(const LadderOperator& l, const LadderOperator& r);
  friend LadderOperator operator-(const LadderOperator& l, const LadderOperator& r);
  friend LadderOperator operator*(cplx c, const LadderOperator& l);
  // Operator product l o r, normal ordered through
  // d_z^p z^a = sum_j C(p,j) a!/(a-j)! z^(a-j) d_z^(p-j).
  friend LadderOperator operator*(const LadderOperator& l, const LadderOperator& r);

 private:
  void add(const Key& k, cplx c);
  void trim();

  std::map<Key, cplx> terms_;
};

LadderOperator commutator(const LadderOperator& l, const LadderOperator& r);
LadderOperator power(const LadderOperator& l, int k);
double max_coeff_diff(const LadderOperator& l, const LadderOperator& r);

// Action on a weighted function; derivatives of the envelope are folded into
// the polynomial part so the envelope is unchanged.
WeightedFunction gw_apply(const LadderOperator& op, const WeightedFunction& f);
// Action on a bare polynomial (trivial envelope).
BivariatePolynomial apply(const LadderOperator& op, const BivariatePolynomial& p);

}  // namespace polyherm
