#pragma once

#include <vector>

#include "polyherm/complex_point.hpp"

namespace polyherm {

// Dense row-major complex matrix.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

  static ComplexMatrix identity(int n);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  cplx& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const cplx& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const std::vector<cplx>& data() const noexcept { return data_; }

  ComplexMatrix adjoint() const;
  double frobenius_norm() const;
  std::vector<cplx> operator*(const std::vector<cplx>& v) const;

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<cplx> data_;
};

double norm2(const std::vector<cplx>& v);

struct LeastSquaresResult {
  std::vector<cplx> x;
  double residual = 0.0;           // ||A x - b||
  double relative_residual = 0.0;  // ||A x - b|| / ||b||
};

// min ||A x - b|| by Householder QR; requires rows >= cols.
LeastSquaresResult least_squares(const ComplexMatrix& A, const std::vector<cplx>& b);

// Partial-pivot LU of a square matrix. A pivot that is exactly zero is
// replaced by eps * ||A|| so shifted solves near an eigenvalue still work.
class LuFactorization {
 public:
  explicit LuFactorization(ComplexMatrix A);
  std::vector<cplx> solve(std::vector<cplx> b) const;

 private:
  ComplexMatrix lu_;
  std::vector<int> perm_;
};

}  // namespace polyherm
