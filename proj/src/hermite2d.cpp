#include "polyherm/hermite2d.hpp"

#include <algorithm>
#include <vector>

#include "polyherm/hermite.hpp"
#include "polyherm/squeezed.hpp"

namespace polyherm {

SymMatrix2 SymMatrix2::r_tau(double tau) {
  require_tau_half_open(tau);
  const cplx off(0.0, std::sqrt(1.0 - tau * tau));
  return {tau, off, tau};
}

namespace {

void require_nonsingular(const SymMatrix2& R) {
  if (R.r11 * R.r22 == 0.0) throw Error(ErrorCode::SingularR, "hermite2d needs r11 * r22 != 0");
}

template <class T>
T hermite2d_impl(const SymMatrix2& R, int n, int m, const T& xi1, const T& xi2, const T& one) {
  require_degree(n, kMaxSqueezedDegree, "hermite2d");
  require_degree(m, kMaxSqueezedDegree, "hermite2d");
  require_nonsingular(R);
  const cplx s11 = std::sqrt(R.r11);
  const cplx s22 = std::sqrt(R.r22);
  const T zeta1 = xi1 * R.r11 + xi2 * R.r12;
  const T zeta2 = xi1 * R.r12 + xi2 * R.r22;
  const T x1 = zeta1 * (1.0 / (std::sqrt(2.0) * s11));
  const T x2 = zeta2 * (1.0 / (std::sqrt(2.0) * s22));
  const cplx prefactor = ipow(s11, n) * ipow(s22, m) * std::pow(2.0, -0.5 * (n + m));
  const cplx ratio = -2.0 * R.r12 / (s11 * s22);
  T acc = one * 0.0;
  for (int k = 0; k <= std::min(n, m); ++k) {
    const double comb = factorial(n) * factorial(m) / (factorial(n - k) * factorial(m - k) * factorial(k));
    acc = acc + hermite_recurrence(n - k, x1, one) * hermite_recurrence(m - k, x2, one) * (ipow(ratio, k) * comb);
  }
  return acc * prefactor;
}

}  // namespace

cplx hermite2d(const SymMatrix2& R, int n, int m, cplx xi1, cplx xi2) {
  return hermite2d_impl<cplx>(R, n, m, xi1, xi2, 1.0);
}

BivariatePolynomial hermite2d_poly(const SymMatrix2& R, int n, int m, const BivariatePolynomial& xi1,
                                   const BivariatePolynomial& xi2) {
  return hermite2d_impl(R, n, m, xi1, xi2, BivariatePolynomial::constant(1.0));
}

cplx hermite2d_genfun(const SymMatrix2& R, int n, int m, cplx xi1, cplx xi2, int K) {
  if (n < 0 || m < 0) throw Error(ErrorCode::InvalidArgument, "negative 2D-Hermite index");
  if (K < n + m)
    throw Error(ErrorCode::TruncationTooSmall,
                "exponential series truncated at K = " + std::to_string(K) + " < n + m = " +
                    std::to_string(n + m));
  // Dense truncated bivariate series in (gamma1, gamma2), degrees <= (n, m).
  using Series = std::vector<cplx>;
  const int w = m + 1;
  auto at = [w](Series& s, int i, int j) -> cplx& { return s[i * w + j]; };
  auto mul = [&](const Series& a, const Series& b) {
    Series out((n + 1) * w, 0.0);
    for (int i1 = 0; i1 <= n; ++i1)
      for (int j1 = 0; j1 <= m; ++j1) {
        const cplx c = a[i1 * w + j1];
        if (c == 0.0) continue;
        for (int i2 = 0; i1 + i2 <= n; ++i2)
          for (int j2 = 0; j1 + j2 <= m; ++j2) out[(i1 + i2) * w + j1 + j2] += c * b[i2 * w + j2];
      }
    return out;
  };
  Series q((n + 1) * w, 0.0);
  const cplx zeta1 = R.r11 * xi1 + R.r12 * xi2;
  const cplx zeta2 = R.r12 * xi1 + R.r22 * xi2;
  if (n >= 1) at(q, 1, 0) = zeta1;
  if (m >= 1) at(q, 0, 1) = zeta2;
  if (n >= 2) at(q, 2, 0) = -0.5 * R.r11;
  if (m >= 2) at(q, 0, 2) = -0.5 * R.r22;
  if (n >= 1 && m >= 1) at(q, 1, 1) = -R.r12;

  Series term((n + 1) * w, 0.0);
  at(term, 0, 0) = 1.0;
  cplx coeff = (n == 0 && m == 0) ? 1.0 : 0.0;  // j = 0 term
  for (int j = 1; j <= std::min(K, n + m); ++j) {
    term = mul(term, q);
    for (auto& c : term) c /= static_cast<double>(j);
    coeff += at(term, n, m);
  }
  return coeff * factorial(n) * factorial(m);
}

BivariatePolynomial squeezed_via_hermite2d(int m, int n, double tau) {
  require_degree(m, kMaxSqueezedDegree, "squeezed_via_hermite2d");
  require_degree(n, kMaxSqueezedDegree, "squeezed_via_hermite2d");
  if (!(tau > 0.0 && tau < 1.0))
    throw Error(ErrorCode::TauOutOfRange, "2D-Hermite route needs tau in (0, 1)");
  const double c = std::sqrt(1.0 - tau * tau);
  const auto xi1 = BivariatePolynomial::zbar();
  const auto xi2 = BivariatePolynomial({{Exponent{0, 1}, cplx(0.0, tau / c)}, {Exponent{1, 0}, cplx(0.0, -1.0 / c)}});
  static const cplx i_pow[4] = {1.0, {0.0, 1.0}, -1.0, {0.0, -1.0}};
  return (i_pow[n % 4] / std::sqrt(factorial(m))) * hermite2d_poly(SymMatrix2::r_tau(tau), m, n, xi1, xi2);
}

}  // namespace polyherm
