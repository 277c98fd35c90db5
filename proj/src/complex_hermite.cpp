#include "polyherm/complex_hermite.hpp"

#include <algorithm>

#include "polyherm/hermite.hpp"
#include "polyherm/weighted_function.hpp"

namespace polyherm {

BivariatePolynomial complex_hermite(int m, int n) {
  require_degree(m, kMaxBivariateDegree, "complex_hermite");
  require_degree(n, kMaxBivariateDegree, "complex_hermite");
  BivariatePolynomial::Terms terms;
  for (int k = 0; k <= std::min(m, n); ++k)
    terms.emplace(Exponent{m - k, n - k},
                  (k % 2 ? -1.0 : 1.0) * factorial(k) * binomial(m, k) * binomial(n, k));
  return BivariatePolynomial(std::move(terms));
}

BivariatePolynomial complex_hermite_rodrigues(int m, int n) {
  require_degree(m, kMaxBivariateDegree, "complex_hermite_rodrigues");
  require_degree(n, kMaxBivariateDegree, "complex_hermite_rodrigues");
  WeightedFunction f{BivariatePolynomial::constant(1.0), GaussianEnvelope{0.0, -1.0, 0.0, 1.0}};
  for (int i = 0; i < m; ++i) f = d_zbar(f);
  for (int i = 0; i < n; ++i) f = d_z(f);
  return ((m + n) % 2 ? -1.0 : 1.0) * f.poly;
}

cplx phi_normalized(int m, int n, ComplexPoint z) {
  require_degree(m, kMaxScalarDegree, "phi_normalized");
  require_degree(n, kMaxScalarDegree, "phi_normalized");
  const double r = std::abs(z.value());
  if (r == 0.0) return m == n ? (m % 2 ? -1.0 : 1.0) : 0.0;
  const int k = std::min(m, n);
  const int d = std::abs(m - n);
  const double theta = std::arg(z.value());
  const double mag = std::exp(std::lgamma(k + 1.0) - 0.5 * (std::lgamma(m + 1.0) + std::lgamma(n + 1.0)));
  const cplx phase = std::polar(1.0, (m - n) * theta);
  return (k % 2 ? -1.0 : 1.0) * mag * std::pow(r, d) * phase * laguerre(k, d, r * r);
}

}  // namespace polyherm
