#include "polyherm/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "polyherm/error.hpp"

namespace polyherm {

ComplexMatrix ComplexMatrix::identity(int n) {
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = std::conj((*this)(i, j));
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& v : data_) s += std::norm(v);
  return std::sqrt(s);
}

std::vector<cplx> ComplexMatrix::operator*(const std::vector<cplx>& v) const {
  if (static_cast<int>(v.size()) != cols_) throw Error(ErrorCode::InvalidArgument, "matrix-vector size mismatch");
  std::vector<cplx> out(rows_);
  for (int i = 0; i < rows_; ++i) {
    cplx s = 0.0;
    for (int j = 0; j < cols_; ++j) s += (*this)(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

double norm2(const std::vector<cplx>& v) {
  double s = 0.0;
  for (const auto& x : v) s += std::norm(x);
  return std::sqrt(s);
}

LeastSquaresResult least_squares(const ComplexMatrix& A, const std::vector<cplx>& b) {
  const int m = A.rows();
  const int n = A.cols();
  if (m < n || static_cast<int>(b.size()) != m)
    throw Error(ErrorCode::InvalidArgument, "least_squares needs rows >= cols and a matching right-hand side");
  ComplexMatrix R = A;
  std::vector<cplx> y = b;
  for (int k = 0; k < n; ++k) {
    double alpha_norm = 0.0;
    for (int i = k; i < m; ++i) alpha_norm += std::norm(R(i, k));
    alpha_norm = std::sqrt(alpha_norm);
    if (alpha_norm == 0.0) continue;
    const cplx x0 = R(k, k);
    const cplx phase = std::abs(x0) == 0.0 ? cplx(1.0) : x0 / std::abs(x0);
    const cplx alpha = -phase * alpha_norm;
    std::vector<cplx> v(m - k);
    for (int i = k; i < m; ++i) v[i - k] = R(i, k);
    v[0] -= alpha;
    const double vnorm2 = [&] {
      double s = 0.0;
      for (const auto& c : v) s += std::norm(c);
      return s;
    }();
    if (vnorm2 == 0.0) continue;
    // H = I - 2 v v^H / (v^H v)
    for (int j = k; j < n; ++j) {
      cplx s = 0.0;
      for (int i = k; i < m; ++i) s += std::conj(v[i - k]) * R(i, j);
      s *= 2.0 / vnorm2;
      for (int i = k; i < m; ++i) R(i, j) -= s * v[i - k];
    }
    cplx s = 0.0;
    for (int i = k; i < m; ++i) s += std::conj(v[i - k]) * y[i];
    s *= 2.0 / vnorm2;
    for (int i = k; i < m; ++i) y[i] -= s * v[i - k];
  }
  LeastSquaresResult out;
  out.x.assign(n, 0.0);
  for (int i = n - 1; i >= 0; --i) {
    cplx s = y[i];
    for (int j = i + 1; j < n; ++j) s -= R(i, j) * out.x[j];
    out.x[i] = R(i, i) == 0.0 ? cplx(0.0) : s / R(i, i);
  }
  double rs = 0.0;
  for (int i = n; i < m; ++i) rs += std::norm(y[i]);
  out.residual = std::sqrt(rs);
  const double bn = norm2(b);
  out.relative_residual = bn > 0.0 ? out.residual / bn : out.residual;
  return out;
}

LuFactorization::LuFactorization(ComplexMatrix A) : lu_(std::move(A)), perm_(lu_.rows()) {
  const int n = lu_.rows();
  if (lu_.cols() != n) throw Error(ErrorCode::InvalidArgument, "LU needs a square matrix");
  const double floor = std::numeric_limits<double>::epsilon() * std::max(lu_.frobenius_norm(), 1e-300);
  for (int i = 0; i < n; ++i) perm_[i] = i;
  for (int k = 0; k < n; ++k) {
    int p = k;
    double best = std::abs(lu_(k, k));
    for (int i = k + 1; i < n; ++i)
      if (std::abs(lu_(i, k)) > best) {
        best = std::abs(lu_(i, k));
        p = i;
      }
    if (p != k) {
      for (int j = 0; j < n; ++j) std::swap(lu_(k, j), lu_(p, j));
      std::swap(perm_[k], perm_[p]);
    }
    if (std::abs(lu_(k, k)) == 0.0) lu_(k, k) = floor;
    for (int i = k + 1; i < n; ++i) {
      const cplx f = lu_(i, k) / lu_(k, k);
      lu_(i, k) = f;
      for (int j = k + 1; j < n; ++j) lu_(i, j) -= f * lu_(k, j);
    }
  }
}

std::vector<cplx> LuFactorization::solve(std::vector<cplx> b) const {
  const int n = lu_.rows();
  std::vector<cplx> x(n);
  for (int i = 0; i < n; ++i) x[i] = b[perm_[i]];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) x[i] -= lu_(i, j) * x[j];
  for (int i = n - 1; i >= 0; --i) {
    for (int j = i + 1; j < n; ++j) x[i] -= lu_(i, j) * x[j];
    x[i] /= lu_(i, i);
  }
  return x;
}

}  // namespace polyherm
