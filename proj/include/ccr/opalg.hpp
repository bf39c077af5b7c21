#pragma once

#include "ccr/exact_scalar.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ccr {

enum class LadderKind { creation, annihilation };

/// One bosonic ladder operator a_mode or a^dagger_mode (modes are 1-based).
struct LadderSymbol {
  int mode = 1;
  LadderKind kind = LadderKind::annihilation;

  static LadderSymbol creation(int mode) { return {mode, LadderKind::creation}; }
  static LadderSymbol annihilation(int mode) { return {mode, LadderKind::annihilation}; }

  friend bool operator==(const LadderSymbol&, const LadderSymbol&) = default;
};

/// Exponents of prod_i (a^dagger_i)^cdeg[i] * prod_j (a_j)^adeg[j].
struct MonomialKey {
  std::vector<int> cdeg;
  std::vector<int> adeg;

  int degree() const;
  friend bool operator==(const MonomialKey&, const MonomialKey&) = default;
};

/// Deterministic term order: total degree descending, then creation exponents
/// descending lexicographically, then annihilation exponents descending.
struct CanonicalTermOrder {
  bool operator()(const MonomialKey& lhs, const MonomialKey& rhs) const;
};

struct NormalMonomial {
  ExactScalar coeff;
  MonomialKey key;
};

/// A normal-ordered polynomial in the ladder operators of `modes` modes.
///
/// The representation is canonical: terms are keyed by exponent vectors, zero
/// coefficients are never stored, and all creation operators precede all
/// annihilation operators. Structural equality is therefore operator equality.
class OperatorExpr {
 public:
  using TermMap = std::map<MonomialKey, ExactScalar, CanonicalTermOrder>;

  explicit OperatorExpr(int modes = 1);

  static OperatorExpr scalar(int modes, const ExactScalar& value);
  static OperatorExpr ladder(int modes, LadderSymbol symbol);
  static OperatorExpr creation(int modes, int mode) { return ladder(modes, LadderSymbol::creation(mode)); }
  static OperatorExpr annihilation(int modes, int mode) { return ladder(modes, LadderSymbol::annihilation(mode)); }
  /// x = (a + a^dagger)/sqrt2
  static OperatorExpr position(int modes, int mode);
  /// p = i (a^dagger - a)/sqrt2
  static OperatorExpr momentum(int modes, int mode);

  int modes() const { return modes_; }
  const TermMap& terms() const { return terms_; }
  std::vector<NormalMonomial> monomials() const;
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// Highest total degree among the terms; 0 for constants and for zero.
  int degree() const;
  ExactScalar coefficient(const MonomialKey& key) const;

  void add_term(const MonomialKey& key, const ExactScalar& coeff);

  OperatorExpr& operator+=(const OperatorExpr& rhs);
  OperatorExpr& operator-=(const OperatorExpr& rhs);
  OperatorExpr& operator*=(const ExactScalar& s);

  friend OperatorExpr operator+(OperatorExpr lhs, const OperatorExpr& rhs) { return lhs += rhs; }
  friend OperatorExpr operator-(OperatorExpr lhs, const OperatorExpr& rhs) { return lhs -= rhs; }
  friend OperatorExpr operator*(OperatorExpr lhs, const ExactScalar& s) { return lhs *= s; }
  friend OperatorExpr operator*(const ExactScalar& s, OperatorExpr rhs) { return rhs *= s; }
  /// Operator product, re-normal-ordered with the per-mode Wick formula.
  friend OperatorExpr operator*(const OperatorExpr& lhs, const OperatorExpr& rhs);
  OperatorExpr operator-() const;

  friend bool operator==(const OperatorExpr& lhs, const OperatorExpr& rhs) {
    return lhs.modes_ == rhs.modes_ && lhs.terms_ == rhs.terms_;
  }

  /// Canonical rendering, e.g. "ad1^2*a1^2 + 4*ad1*a1 + 2". Parseable by parse_expr.
  std::string str() const;

 private:
  int modes_;
  TermMap terms_;
};

class ModeMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A raw (not yet ordered) product coeff * s1 s2 ... sn.
struct RawProduct {
  ExactScalar coeff;
  std::vector<LadderSymbol> word;
};

/// Rewrites arbitrary ladder words to canonical form by adjacent
/// transpositions, contracting a_i a^dagger_i -> a^dagger_i a_i + 1.
OperatorExpr normal_order(std::span<const RawProduct> raw, int modes);
OperatorExpr normal_order(const RawProduct& raw, int modes);

/// normal_order(AB - BA). Throws ModeMismatchError if the mode counts differ.
OperatorExpr commutator(const OperatorExpr& a, const OperatorExpr& b);

/// Hermitian adjoint: conjugate coefficients, reverse words, swap kinds.
OperatorExpr adjoint(const OperatorExpr& a);

class ParseError : public std::runtime_error {
 public:
  enum class Kind { syntax, mode_range };
  ParseError(Kind kind, std::size_t position, const std::string& message);
  Kind kind() const { return kind_; }
  /// Byte offset into the input where the error was detected.
  std::size_t position() const { return position_; }

 private:
  Kind kind_;
  std::size_t position_;
};

/// Parses the operator grammar:
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := ('+' | '-') unary | power
///   power   := primary ('^' integer)?
///   primary := integer | 'i' | 'sqrt2' | symbol | '(' expr ')'
///   symbol  := ('a' | 'ad' | 'a†' | 'x' | 'p') integer
///
/// Division is only allowed by nonzero scalars. x_k and p_k expand to ladder
/// operators. Whitespace between tokens is ignored.
OperatorExpr parse_expr(std::string_view text, int modes);

}  // namespace ccr
