#include "ccr/dense.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ccr {

namespace {

void require_same_shape(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("CMatrix: shape mismatch");
}

constexpr std::size_t kParallelThreshold = 64;

}  // namespace

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = 1.0;
  return m;
}

CMatrix CMatrix::from_exact(const ExactMatrix& m) {
  CMatrix out(m.n(), m.n());
  for (std::size_t r = 0; r < m.n(); ++r)
    for (std::size_t c = 0; c < m.n(); ++c) out(r, c) = m(r, c).to_complex();
  return out;
}

CMatrix& CMatrix::operator+=(const CMatrix& rhs) {
  require_same_shape(*this, rhs);
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += rhs.a_[k];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& rhs) {
  require_same_shape(*this, rhs);
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= rhs.a_[k];
  return *this;
}

CMatrix& CMatrix::operator*=(Complex s) {
  for (auto& v : a_) v *= s;
  return *this;
}

CMatrix operator*(const CMatrix& lhs, const CMatrix& rhs) {
  return kernels::matmul(lhs, rhs, lhs.rows() >= kParallelThreshold ? Execution::parallel : Execution::serial);
}

CMatrix CMatrix::transpose() const {
  CMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

CMatrix CMatrix::adjoint() const {
  CMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

double CMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& v : a_) m = std::max(m, std::abs(v));
  return m;
}

double CMatrix::norm_inf() const {
  double m = 0.0;
  for (std::size_t r = 0; r < rows_; ++r) {
    double s = 0.0;
    for (std::size_t c = 0; c < cols_; ++c) s += std::abs((*this)(r, c));
    m = std::max(m, s);
  }
  return m;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  require_same_shape(a, b);
  double m = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m = std::max(m, std::abs(a(r, c) - b(r, c)));
  return m;
}

CMatrix expm(const CMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("expm: matrix must be square");
  const std::size_t n = a.rows();
  const double norm = a.norm_inf();
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const CMatrix scaled = a * Complex(std::ldexp(1.0, -squarings), 0.0);

  CMatrix result = CMatrix::identity(n);
  CMatrix term = CMatrix::identity(n);
  for (int k = 1; k <= 30; ++k) {
    term = kernels::matmul_serial(term, scaled) * Complex(1.0 / k, 0.0);
    result += term;
    if (term.max_abs() < 1e-18) break;
  }
  for (int s = 0; s < squarings; ++s) result = kernels::matmul_serial(result, result);
  return result;
}

namespace kernels {

namespace {

void check_inner(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matmul: inner dimensions differ");
}

inline void multiply_row(const CMatrix& a, const CMatrix& b, CMatrix& out, std::size_t r) {
  const std::size_t inner = a.cols();
  const std::size_t cols = b.cols();
  Complex* dst = out.data() + r * cols;
  for (std::size_t k = 0; k < inner; ++k) {
    const Complex x = a(r, k);
    if (x == Complex(0.0, 0.0)) continue;
    const Complex* src = b.data() + k * cols;
    for (std::size_t c = 0; c < cols; ++c) dst[c] += x * src[c];
  }
}

}  // namespace

CMatrix matmul_serial(const CMatrix& a, const CMatrix& b) {
  check_inner(a, b);
  CMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) multiply_row(a, b, out, r);
  return out;
}

CMatrix matmul_parallel(const CMatrix& a, const CMatrix& b) {
  check_inner(a, b);
  CMatrix out(a.rows(), b.cols());
  const auto rows = static_cast<long>(a.rows());
#pragma omp parallel for schedule(static)
  for (long r = 0; r < rows; ++r) multiply_row(a, b, out, static_cast<std::size_t>(r));
  return out;
}

CMatrix matmul(const CMatrix& a, const CMatrix& b, Execution exec) {
  return exec == Execution::parallel ? matmul_parallel(a, b) : matmul_serial(a, b);
}

}  // namespace kernels

}  // namespace ccr
