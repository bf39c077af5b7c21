#include "ccr/exact_scalar.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace ccr {

namespace {

// (a + b*sqrt2) over Q, used for the real and imaginary halves.
struct RealSqrt2 {
  Rational a, b;
};

RealSqrt2 mul(const RealSqrt2& x, const RealSqrt2& y) {
  return {x.a * y.a + 2 * x.b * y.b, x.a * y.b + x.b * y.a};
}

RealSqrt2 invert(const RealSqrt2& x) {
  Rational norm = x.a * x.a - 2 * x.b * x.b;  // nonzero unless x == 0
  return {x.a / norm, -x.b / norm};
}

std::string basis_name(int k) {
  switch (k) {
    case 1:
      return "sqrt2";
    case 2:
      return "i";
    case 3:
      return "i*sqrt2";
    default:
      return "";
  }
}

// Renders |r| * basis(k) without sign.
std::string render_component(const Rational& magnitude, int k) {
  if (k == 0) return magnitude.get_str();
  std::string out;
  const mpz_class& num = magnitude.get_num();
  const mpz_class& den = magnitude.get_den();
  if (num != 1) out = num.get_str() + "*";
  out += basis_name(k);
  if (den != 1) out += "/" + den.get_str();
  return out;
}

}  // namespace

ExactScalar::ExactScalar(Rational q0, Rational q1, Rational q2, Rational q3)
    : q_{std::move(q0), std::move(q1), std::move(q2), std::move(q3)} {}

ExactScalar ExactScalar::i() { return {0, 0, 1, 0}; }

ExactScalar ExactScalar::sqrt2() { return {0, 1, 0, 0}; }

ExactScalar ExactScalar::fraction(long num, long den) {
  if (den == 0) throw std::domain_error("ExactScalar::fraction: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return {r, 0, 0, 0};
}

bool ExactScalar::is_zero() const {
  return q_[0] == 0 && q_[1] == 0 && q_[2] == 0 && q_[3] == 0;
}

bool ExactScalar::is_one() const {
  return q_[0] == 1 && q_[1] == 0 && q_[2] == 0 && q_[3] == 0;
}

ExactScalar ExactScalar::conj() const { return {q_[0], q_[1], -q_[2], -q_[3]}; }

ExactScalar ExactScalar::inverse() const {
  if (is_zero()) throw std::domain_error("ExactScalar::inverse: division by zero");
  // 1/(x + i y) = (x - i y) / (x^2 + y^2) with x, y in Q(sqrt2).
  RealSqrt2 x{q_[0], q_[1]};
  RealSqrt2 y{q_[2], q_[3]};
  RealSqrt2 xx = mul(x, x);
  RealSqrt2 yy = mul(y, y);
  RealSqrt2 inv = invert(RealSqrt2{xx.a + yy.a, xx.b + yy.b});
  RealSqrt2 re = mul(x, inv);
  RealSqrt2 im = mul(y, inv);
  return {re.a, re.b, -im.a, -im.b};
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& rhs) {
  for (std::size_t k = 0; k < 4; ++k) q_[k] += rhs.q_[k];
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& rhs) {
  for (std::size_t k = 0; k < 4; ++k) q_[k] -= rhs.q_[k];
  return *this;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& rhs) {
  RealSqrt2 x1{q_[0], q_[1]}, y1{q_[2], q_[3]};
  RealSqrt2 x2{rhs.q_[0], rhs.q_[1]}, y2{rhs.q_[2], rhs.q_[3]};
  RealSqrt2 xx = mul(x1, x2), yy = mul(y1, y2), xy = mul(x1, y2), yx = mul(y1, x2);
  q_ = {xx.a - yy.a, xx.b - yy.b, xy.a + yx.a, xy.b + yx.b};
  return *this;
}

ExactScalar ExactScalar::operator-() const { return {-q_[0], -q_[1], -q_[2], -q_[3]}; }

std::complex<double> ExactScalar::to_complex() const {
  const double s2 = 1.4142135623730950488;
  return {q_[0].get_d() + q_[1].get_d() * s2, q_[2].get_d() + q_[3].get_d() * s2};
}

bool ExactScalar::is_atomic() const {
  int nonzero = 0;
  for (const auto& q : q_) nonzero += (q != 0);
  return nonzero <= 1;
}

std::string ExactScalar::str() const {
  std::string out;
  int written = 0;
  for (int k = 0; k < 4; ++k) {
    const Rational& q = q_[static_cast<std::size_t>(k)];
    if (q == 0) continue;
    Rational magnitude = abs(q);
    bool negative = q < 0;
    if (written == 0) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    out += render_component(magnitude, k);
    ++written;
  }
  if (written == 0) return "0";
  if (written > 1) return "(" + out + ")";
  return out;
}

std::ostream& operator<<(std::ostream& os, const ExactScalar& s) { return os << s.str(); }

}  // namespace ccr
