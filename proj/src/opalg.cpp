#include "ccr/opalg.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <utility>

namespace ccr {

int MonomialKey::degree() const {
  return std::accumulate(cdeg.begin(), cdeg.end(), 0) + std::accumulate(adeg.begin(), adeg.end(), 0);
}

bool CanonicalTermOrder::operator()(const MonomialKey& lhs, const MonomialKey& rhs) const {
  const int dl = lhs.degree();
  const int dr = rhs.degree();
  if (dl != dr) return dl > dr;
  if (lhs.cdeg != rhs.cdeg) return lhs.cdeg > rhs.cdeg;
  return lhs.adeg > rhs.adeg;
}

namespace {

MonomialKey unit_key(int modes) {
  return {std::vector<int>(static_cast<std::size_t>(modes), 0), std::vector<int>(static_cast<std::size_t>(modes), 0)};
}

void check_mode(int modes, const LadderSymbol& s) {
  if (s.mode < 1 || s.mode > modes) {
    throw std::invalid_argument("ladder symbol mode " + std::to_string(s.mode) + " outside 1.." +
                                std::to_string(modes));
  }
}

mpz_class binomial(int n, int k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

mpz_class factorial(int n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

// Product of two normal monomials: a^m (a^dagger)^n = sum_k C(m,k) C(n,k) k! (a^dagger)^(n-k) a^(m-k)
// applied independently in each mode.
void multiply_into(OperatorExpr& out, const MonomialKey& lhs, const ExactScalar& lc, const MonomialKey& rhs,
                   const ExactScalar& rc) {
  const std::size_t modes = lhs.cdeg.size();
  std::vector<std::vector<std::pair<int, mpz_class>>> choices(modes);
  for (std::size_t i = 0; i < modes; ++i) {
    const int m = lhs.adeg[i];
    const int n = rhs.cdeg[i];
    for (int k = 0; k <= std::min(m, n); ++k) {
      choices[i].emplace_back(k, binomial(m, k) * binomial(n, k) * factorial(k));
    }
  }
  const ExactScalar base = lc * rc;
  std::vector<std::size_t> pick(modes, 0);
  while (true) {
    MonomialKey key = unit_key(static_cast<int>(modes));
    mpz_class weight = 1;
    for (std::size_t i = 0; i < modes; ++i) {
      const auto& [k, w] = choices[i][pick[i]];
      weight *= w;
      key.cdeg[i] = lhs.cdeg[i] + rhs.cdeg[i] - k;
      key.adeg[i] = lhs.adeg[i] + rhs.adeg[i] - k;
    }
    out.add_term(key, base * ExactScalar(Rational(weight)));
    std::size_t i = 0;
    for (; i < modes; ++i) {
      if (++pick[i] < choices[i].size()) break;
      pick[i] = 0;
    }
    if (i == modes) break;
  }
}

std::string monomial_factors(const MonomialKey& key) {
  std::string out;
  auto emit = [&](const char* prefix, int mode, int power) {
    if (power == 0) return;
    if (!out.empty()) out += "*";
    out += prefix + std::to_string(mode);
    if (power > 1) out += "^" + std::to_string(power);
  };
  for (std::size_t i = 0; i < key.cdeg.size(); ++i) emit("ad", static_cast<int>(i + 1), key.cdeg[i]);
  for (std::size_t i = 0; i < key.adeg.size(); ++i) emit("a", static_cast<int>(i + 1), key.adeg[i]);
  return out;
}

std::string render_term(const MonomialKey& key, const ExactScalar& c) {
  const std::string factors = monomial_factors(key);
  if (factors.empty()) return c.str();
  if (c.is_one()) return factors;
  if ((-c).is_one()) return "-" + factors;
  return c.str() + "*" + factors;
}

}  // namespace

OperatorExpr::OperatorExpr(int modes) : modes_(modes) {
  if (modes < 1) throw std::invalid_argument("OperatorExpr: mode count must be positive");
}

OperatorExpr OperatorExpr::scalar(int modes, const ExactScalar& value) {
  OperatorExpr out(modes);
  out.add_term(unit_key(modes), value);
  return out;
}

OperatorExpr OperatorExpr::ladder(int modes, LadderSymbol symbol) {
  check_mode(modes, symbol);
  OperatorExpr out(modes);
  MonomialKey key = unit_key(modes);
  auto idx = static_cast<std::size_t>(symbol.mode - 1);
  (symbol.kind == LadderKind::creation ? key.cdeg : key.adeg)[idx] = 1;
  out.add_term(key, 1);
  return out;
}

OperatorExpr OperatorExpr::position(int modes, int mode) {
  const ExactScalar half_sqrt2 = ExactScalar::sqrt2() * ExactScalar::fraction(1, 2);
  return (annihilation(modes, mode) + creation(modes, mode)) * half_sqrt2;
}

OperatorExpr OperatorExpr::momentum(int modes, int mode) {
  const ExactScalar c = ExactScalar::i() * ExactScalar::sqrt2() * ExactScalar::fraction(1, 2);
  return (creation(modes, mode) - annihilation(modes, mode)) * c;
}

std::vector<NormalMonomial> OperatorExpr::monomials() const {
  std::vector<NormalMonomial> out;
  out.reserve(terms_.size());
  for (const auto& [key, c] : terms_) out.push_back({c, key});
  return out;
}

int OperatorExpr::degree() const {
  int d = 0;
  for (const auto& [key, c] : terms_) d = std::max(d, key.degree());
  return d;
}

ExactScalar OperatorExpr::coefficient(const MonomialKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? ExactScalar{} : it->second;
}

void OperatorExpr::add_term(const MonomialKey& key, const ExactScalar& coeff) {
  if (key.cdeg.size() != static_cast<std::size_t>(modes_) || key.adeg.size() != static_cast<std::size_t>(modes_)) {
    throw ModeMismatchError("monomial key has wrong mode count");
  }
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

OperatorExpr& OperatorExpr::operator+=(const OperatorExpr& rhs) {
  if (rhs.modes_ != modes_) throw ModeMismatchError("operator sum across different mode counts");
  for (const auto& [key, c] : rhs.terms_) add_term(key, c);
  return *this;
}

OperatorExpr& OperatorExpr::operator-=(const OperatorExpr& rhs) {
  if (rhs.modes_ != modes_) throw ModeMismatchError("operator difference across different mode counts");
  for (const auto& [key, c] : rhs.terms_) add_term(key, -c);
  return *this;
}

OperatorExpr& OperatorExpr::operator*=(const ExactScalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, c] : terms_) c *= s;
  return *this;
}

OperatorExpr operator*(const OperatorExpr& lhs, const OperatorExpr& rhs) {
  if (lhs.modes_ != rhs.modes_) throw ModeMismatchError("operator product across different mode counts");
  OperatorExpr out(lhs.modes_);
  for (const auto& [lk, lc] : lhs.terms_) {
    for (const auto& [rk, rc] : rhs.terms_) multiply_into(out, lk, lc, rk, rc);
  }
  return out;
}

OperatorExpr OperatorExpr::operator-() const {
  OperatorExpr out = *this;
  for (auto& [key, c] : out.terms_) c = -c;
  return out;
}

std::string OperatorExpr::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [key, c] : terms_) {
    std::string term = render_term(key, c);
    if (out.empty()) {
      out = term;
    } else if (term.front() == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Normal ordering by adjacent transposition

namespace {

int rank_of(const LadderSymbol& s) {
  return (s.kind == LadderKind::creation ? 0 : 1 << 20) + s.mode;
}

}  // namespace

OperatorExpr normal_order(std::span<const RawProduct> raw, int modes) {
  OperatorExpr out(modes);
  std::deque<RawProduct> work(raw.begin(), raw.end());
  for (const auto& p : work) {
    for (const auto& s : p.word) check_mode(modes, s);
  }
  while (!work.empty()) {
    RawProduct cur = std::move(work.front());
    work.pop_front();
    if (cur.coeff.is_zero()) continue;
    std::size_t pos = 0;
    while (pos + 1 < cur.word.size() && rank_of(cur.word[pos]) <= rank_of(cur.word[pos + 1])) ++pos;
    if (pos + 1 >= cur.word.size()) {
      MonomialKey key = unit_key(modes);
      for (const auto& s : cur.word) {
        auto idx = static_cast<std::size_t>(s.mode - 1);
        ++(s.kind == LadderKind::creation ? key.cdeg : key.adeg)[idx];
      }
      out.add_term(key, cur.coeff);
      continue;
    }
    const LadderSymbol left = cur.word[pos];
    const LadderSymbol right = cur.word[pos + 1];
    if (left.kind == LadderKind::annihilation && right.kind == LadderKind::creation && left.mode == right.mode) {
      // a a^dagger = a^dagger a + 1
      RawProduct contracted{cur.coeff, {}};
      contracted.word.reserve(cur.word.size() - 2);
      contracted.word.insert(contracted.word.end(), cur.word.begin(), cur.word.begin() + static_cast<long>(pos));
      contracted.word.insert(contracted.word.end(), cur.word.begin() + static_cast<long>(pos) + 2, cur.word.end());
      work.push_back(std::move(contracted));
    }
    std::swap(cur.word[pos], cur.word[pos + 1]);
    work.push_back(std::move(cur));
  }
  return out;
}

OperatorExpr normal_order(const RawProduct& raw, int modes) {
  return normal_order(std::span<const RawProduct>(&raw, 1), modes);
}

OperatorExpr commutator(const OperatorExpr& a, const OperatorExpr& b) {
  if (a.modes() != b.modes()) {
    throw ModeMismatchError("commutator: mode counts differ (" + std::to_string(a.modes()) + " vs " +
                            std::to_string(b.modes()) + ")");
  }
  return a * b - b * a;
}

OperatorExpr adjoint(const OperatorExpr& a) {
  std::vector<RawProduct> raw;
  raw.reserve(a.size());
  for (const auto& [key, c] : a.terms()) {
    // (a^dagger^c a^a)^dagger = a^dagger^a a^c, written as the reversed word with kinds swapped.
    RawProduct p{c.conj(), {}};
    for (std::size_t i = key.adeg.size(); i-- > 0;) {
      for (int k = 0; k < key.adeg[i]; ++k) p.word.push_back(LadderSymbol::creation(static_cast<int>(i + 1)));
    }
    for (std::size_t i = key.cdeg.size(); i-- > 0;) {
      for (int k = 0; k < key.cdeg[i]; ++k) p.word.push_back(LadderSymbol::annihilation(static_cast<int>(i + 1)));
    }
    raw.push_back(std::move(p));
  }
  return normal_order(raw, a.modes());
}

// ---------------------------------------------------------------------------
// Parser

ParseError::ParseError(Kind kind, std::size_t position, const std::string& message)
    : std::runtime_error(message + " at position " + std::to_string(position)), kind_(kind), position_(position) {}

namespace {

class Parser {
 public:
  Parser(std::string_view text, int modes) : text_(text), modes_(modes) {}

  OperatorExpr parse() {
    OperatorExpr e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  std::string_view text_;
  int modes_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(ParseError::Kind::syntax, pos_, msg); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool accept_word(std::string_view w) {
    if (text_.substr(pos_, w.size()) == w) {
      pos_ += w.size();
      return true;
    }
    return false;
  }

  bool at_digit() const { return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])); }

  mpz_class integer() {
    std::size_t start = pos_;
    while (at_digit()) ++pos_;
    if (start == pos_) fail("expected integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  OperatorExpr expr() {
    OperatorExpr lhs = term();
    while (true) {
      if (accept('+')) {
        lhs += term();
      } else if (accept('-')) {
        lhs -= term();
      } else {
        return lhs;
      }
    }
  }

  OperatorExpr term() {
    OperatorExpr lhs = unary();
    while (true) {
      if (accept('*')) {
        lhs = lhs * unary();
      } else if (accept('/')) {
        std::size_t at = pos_;
        OperatorExpr rhs = unary();
        lhs *= scalar_value(rhs, at).inverse();
      } else {
        return lhs;
      }
    }
  }

  ExactScalar scalar_value(const OperatorExpr& e, std::size_t at) const {
    if (e.is_zero()) throw ParseError(ParseError::Kind::syntax, at, "division by zero");
    if (e.size() != 1 || e.degree() != 0) {
      throw ParseError(ParseError::Kind::syntax, at, "division by a non-scalar operator");
    }
    return e.terms().begin()->second;
  }

  OperatorExpr unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  OperatorExpr power() {
    OperatorExpr base = primary();
    if (accept('^')) {
      skip_ws();
      mpz_class n = integer();
      if (n > 64) fail("exponent too large");
      OperatorExpr out = OperatorExpr::scalar(modes_, 1);
      for (long k = 0; k < n.get_si(); ++k) out = out * base;
      return out;
    }
    return base;
  }

  int mode_index() {
    std::size_t start = pos_;
    if (!at_digit()) fail("expected mode index");
    mpz_class m = integer();
    if (m < 1 || m > modes_) {
      throw ParseError(ParseError::Kind::mode_range, start,
                       "mode index " + m.get_str() + " outside 1.." + std::to_string(modes_));
    }
    return static_cast<int>(m.get_si());
  }

  OperatorExpr primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (accept('(')) {
      OperatorExpr e = expr();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (at_digit()) return OperatorExpr::scalar(modes_, ExactScalar(Rational(integer())));
    if (accept_word("sqrt2")) return OperatorExpr::scalar(modes_, ExactScalar::sqrt2());
    if (accept_word("a\xE2\x80\xA0") || accept_word("ad")) {
      return OperatorExpr::creation(modes_, mode_index());
    }
    if (accept_word("a")) return OperatorExpr::annihilation(modes_, mode_index());
    if (accept_word("x")) return OperatorExpr::position(modes_, mode_index());
    if (accept_word("p")) return OperatorExpr::momentum(modes_, mode_index());
    if (accept_word("i")) return OperatorExpr::scalar(modes_, ExactScalar::i());
    fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
  }
};

}  // namespace

OperatorExpr parse_expr(std::string_view text, int modes) {
  if (modes < 1) throw std::invalid_argument("parse_expr: mode count must be positive");
  return Parser(text, modes).parse();
}

}  // namespace ccr
