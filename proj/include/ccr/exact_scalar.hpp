#pragma once

#include <gmpxx.h>

#include <array>
#include <complex>
#include <iosfwd>
#include <string>

namespace ccr {

using Rational = mpq_class;

/// Element of Q(i, sqrt2), stored as q0 + q1*sqrt2 + q2*i + q3*i*sqrt2.
///
/// Every coefficient that appears in the oscillator and matrix generators
/// lives in this field, so all algebraic checks are exact.
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(long value) : q_{Rational(value), 0, 0, 0} {}  // NOLINT(google-explicit-constructor)
  ExactScalar(const Rational& value) : q_{value, 0, 0, 0} {}  // NOLINT(google-explicit-constructor)
  ExactScalar(Rational q0, Rational q1, Rational q2, Rational q3);

  static ExactScalar i();
  static ExactScalar sqrt2();
  static ExactScalar fraction(long num, long den);

  /// Component k of (1, sqrt2, i, i*sqrt2).
  const Rational& component(int k) const { return q_[static_cast<std::size_t>(k)]; }

  bool is_zero() const;
  bool is_real() const { return q_[2] == 0 && q_[3] == 0; }
  bool is_one() const;

  ExactScalar conj() const;
  /// Throws std::domain_error for zero.
  ExactScalar inverse() const;

  ExactScalar& operator+=(const ExactScalar& rhs);
  ExactScalar& operator-=(const ExactScalar& rhs);
  ExactScalar& operator*=(const ExactScalar& rhs);
  ExactScalar& operator/=(const ExactScalar& rhs) { return *this *= rhs.inverse(); }

  friend ExactScalar operator+(ExactScalar lhs, const ExactScalar& rhs) { return lhs += rhs; }
  friend ExactScalar operator-(ExactScalar lhs, const ExactScalar& rhs) { return lhs -= rhs; }
  friend ExactScalar operator*(ExactScalar lhs, const ExactScalar& rhs) { return lhs *= rhs; }
  friend ExactScalar operator/(ExactScalar lhs, const ExactScalar& rhs) { return lhs /= rhs; }
  ExactScalar operator-() const;

  friend bool operator==(const ExactScalar& lhs, const ExactScalar& rhs) { return lhs.q_ == rhs.q_; }

  std::complex<double> to_complex() const;

  /// Canonical text form, re-parseable by parse_expr: "1/2", "-i", "sqrt2/2",
  /// "(1/2 + 3*i)". Multi-component values are parenthesized.
  std::string str() const;
  /// True when str() needs no parentheses to be used as a factor.
  bool is_atomic() const;

 private:
  std::array<Rational, 4> q_{};
};

std::ostream& operator<<(std::ostream& os, const ExactScalar& s);

}  // namespace ccr
