#pragma once

#include "ccr/exact_matrix.hpp"
#include "ccr/execution.hpp"

#include <complex>
#include <cstddef>
#include <vector>

namespace ccr {

using Complex = std::complex<double>;

/// Row-major dense complex matrix for the floating-point checks.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static CMatrix identity(std::size_t n);
  static CMatrix from_exact(const ExactMatrix& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Complex& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  Complex* data() { return a_.data(); }
  const Complex* data() const { return a_.data(); }

  CMatrix& operator+=(const CMatrix& rhs);
  CMatrix& operator-=(const CMatrix& rhs);
  CMatrix& operator*=(Complex s);
  friend CMatrix operator+(CMatrix lhs, const CMatrix& rhs) { return lhs += rhs; }
  friend CMatrix operator-(CMatrix lhs, const CMatrix& rhs) { return lhs -= rhs; }
  friend CMatrix operator*(CMatrix lhs, Complex s) { return lhs *= s; }
  friend CMatrix operator*(Complex s, CMatrix rhs) { return rhs *= s; }
  /// Dispatches to the parallel kernel for large operands.
  friend CMatrix operator*(const CMatrix& lhs, const CMatrix& rhs);

  friend bool operator==(const CMatrix&, const CMatrix&) = default;

  CMatrix transpose() const;
  CMatrix adjoint() const;
  double max_abs() const;
  /// Max-abs row sum.
  double norm_inf() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> a_;
};

double max_abs_diff(const CMatrix& a, const CMatrix& b);

/// Matrix exponential by scaling and squaring with a Taylor series.
CMatrix expm(const CMatrix& a);

namespace kernels {

/// Reference triple loop.
CMatrix matmul_serial(const CMatrix& a, const CMatrix& b);
/// Rows distributed over OpenMP threads; same accumulation order per entry as
/// the serial kernel, so results are bit-identical.
CMatrix matmul_parallel(const CMatrix& a, const CMatrix& b);
CMatrix matmul(const CMatrix& a, const CMatrix& b, Execution exec);

}  // namespace kernels

}  // namespace ccr
