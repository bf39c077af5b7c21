#pragma once

#include "ccr/catalog.hpp"
#include "ccr/dense.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace ccr {

/// Laurent polynomial in epsilon with exact coefficients; zero terms are never stored.
class Laurent {
 public:
  Laurent() = default;
  Laurent(const ExactScalar& c, int exponent = 0);  // NOLINT(google-explicit-constructor)

  static Laurent monomial(int exponent, const ExactScalar& c = 1) { return {c, exponent}; }

  const std::map<int, ExactScalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  ExactScalar coefficient(int exponent) const;
  /// Lowest exponent with a nonzero coefficient; requires !is_zero().
  int lowest_exponent() const;

  Laurent& operator+=(const Laurent& rhs);
  Laurent& operator-=(const Laurent& rhs);
  friend Laurent operator+(Laurent lhs, const Laurent& rhs) { return lhs += rhs; }
  friend Laurent operator-(Laurent lhs, const Laurent& rhs) { return lhs -= rhs; }
  friend Laurent operator*(const Laurent& lhs, const Laurent& rhs);
  friend bool operator==(const Laurent&, const Laurent&) = default;

  /// Multiplies by epsilon^k.
  Laurent shifted(int k) const;
  /// Drops every term with a positive exponent.
  Laurent without_vanishing() const;
  Complex evaluate(double epsilon) const;
  std::string str() const;

 private:
  void add(int exponent, const ExactScalar& c);
  std::map<int, ExactScalar> terms_;
};

/// Square matrix of Laurent polynomials in epsilon.
class EpsMatrix {
 public:
  explicit EpsMatrix(std::size_t n = 0) : n_(n), a_(n * n) {}
  static EpsMatrix from_exact(const ExactMatrix& m);

  std::size_t n() const { return n_; }
  Laurent& operator()(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
  const Laurent& operator()(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }

  friend EpsMatrix operator*(const EpsMatrix& lhs, const EpsMatrix& rhs);
  friend bool operator==(const EpsMatrix&, const EpsMatrix&) = default;
  EpsMatrix shifted(int k) const;
  EpsMatrix without_vanishing() const;
  bool is_identity() const;
  CMatrix evaluate(double epsilon) const;

 private:
  std::size_t n_;
  std::vector<Laurent> a_;
};

/// Determinant by permutation expansion (n <= 8).
Laurent determinant(const EpsMatrix& m);

/// C(eps) = diag(1/eps, ..., 1/eps, eps): the last coordinate is squeezed the other way.
EpsMatrix squeeze_matrix(std::size_t n = 5);
/// Exact inverse of squeeze_matrix(n).
EpsMatrix squeeze_inverse(std::size_t n = 5);

/// eps^scale_power * C * G * C^-1.
EpsMatrix conjugate(const ExactMatrix& g, int scale_power);

struct DivergentEntry {
  std::size_t row, col;
  int exponent;
  ExactScalar coeff;
};

struct Divergent {
  std::vector<DivergentEntry> entries;
};

using LimitResult = std::variant<ExactMatrix, Divergent>;

/// eps -> 0: keeps exponent-0 terms, drops positive ones, and reports every
/// entry that still carries a negative exponent.
LimitResult limit(const EpsMatrix& m);

/// Squeeze, drop the vanishing terms, then squeeze back: C^-1 (C G C^-1)' C.
/// Yields the same matrices as limit(conjugate(g, 2)) for the contracted generators.
LimitResult contract_by_inverse_squeeze(const ExactMatrix& g);

class ContractionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Contracts every generator with its own epsilon power, renaming as given.
/// Throws ContractionError if any limit diverges.
GeneratorFamily contract_family(const GeneratorFamily& family, const std::map<std::string, int>& powers,
                                const std::map<std::string, std::string>& renames, std::string name);

/// O(3,2) -> inhomogeneous Lorentz: J, K kept (power 0), Q_i -> P_i and
/// S0 -> P0 (power 2). Result labels {J1..3, K1..3, P1, P2, P3, P0}.
GeneratorFamily contract_o32(const GeneratorFamily& o32);
GeneratorFamily contract_o32();

/// The power each contracted generator label takes: 2 for P*, Q*, S0; 0 otherwise.
int default_scale_power(const std::string& label);

/// Floating-point route: substitutes a numeric epsilon before multiplying.
CMatrix numeric_conjugate(const ExactMatrix& g, int scale_power, double epsilon);

struct TrajectoryRow {
  std::size_t row, col;
  int exponent;
  ExactScalar coeff;
};

/// Every nonzero (entry, exponent, coefficient) of an EpsMatrix in row-major order.
std::vector<TrajectoryRow> trajectory(const EpsMatrix& m);

}  // namespace ccr
