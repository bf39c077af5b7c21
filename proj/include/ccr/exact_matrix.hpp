#pragma once

#include "ccr/exact_scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace ccr {

/// Dense square matrix over Q(i, sqrt2). Indices are 0-based.
class ExactMatrix {
 public:
  explicit ExactMatrix(std::size_t n = 0) : n_(n), a_(n * n) {}

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix diagonal(std::span<const ExactScalar> d);
  /// Single entry `value` at (row, col).
  static ExactMatrix unit(std::size_t n, std::size_t row, std::size_t col, const ExactScalar& value = 1);
  static ExactMatrix from_rows(std::initializer_list<std::initializer_list<ExactScalar>> rows);

  std::size_t n() const { return n_; }
  ExactScalar& operator()(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
  const ExactScalar& operator()(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }
  const std::vector<ExactScalar>& entries() const { return a_; }

  ExactMatrix& operator+=(const ExactMatrix& rhs);
  ExactMatrix& operator-=(const ExactMatrix& rhs);
  ExactMatrix& operator*=(const ExactScalar& s);

  friend ExactMatrix operator+(ExactMatrix lhs, const ExactMatrix& rhs) { return lhs += rhs; }
  friend ExactMatrix operator-(ExactMatrix lhs, const ExactMatrix& rhs) { return lhs -= rhs; }
  friend ExactMatrix operator*(ExactMatrix lhs, const ExactScalar& s) { return lhs *= s; }
  friend ExactMatrix operator*(const ExactScalar& s, ExactMatrix rhs) { return rhs *= s; }
  friend ExactMatrix operator*(const ExactMatrix& lhs, const ExactMatrix& rhs);
  ExactMatrix operator-() const;

  friend bool operator==(const ExactMatrix& lhs, const ExactMatrix& rhs) {
    return lhs.n_ == rhs.n_ && lhs.a_ == rhs.a_;
  }

  ExactMatrix transpose() const;
  /// Conjugate transpose.
  ExactMatrix adjoint() const;
  ExactScalar trace() const;
  bool is_zero() const;
  /// Principal submatrix on the given (sorted, distinct) indices.
  ExactMatrix principal_submatrix(std::span<const std::size_t> indices) const;

  /// Column-aligned text rendering, one row per line.
  std::string str() const;

 private:
  std::size_t n_;
  std::vector<ExactScalar> a_;
};

/// Kronecker product A (x) B.
ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b);

ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b);

}  // namespace ccr
