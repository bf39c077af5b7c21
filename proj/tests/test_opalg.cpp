#include "ccr/catalog.hpp"
#include "ccr/focknum.hpp"
#include "ccr/opalg.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace ccr;

namespace {

OperatorExpr P(const char* text, int modes = 1) { return parse_expr(text, modes); }

LadderSymbol a(int m) { return LadderSymbol::annihilation(m); }
LadderSymbol ad(int m) { return LadderSymbol::creation(m); }

std::vector<LadderSymbol> random_word(std::mt19937& rng, int modes, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), mode(1, modes), kind(0, 1);
  std::vector<LadderSymbol> w;
  for (int k = len(rng); k > 0; --k) w.push_back(kind(rng) ? ad(mode(rng)) : a(mode(rng)));
  return w;
}

ExactScalar random_coeff(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-3, 3), den(1, 3), imag(0, 1);
  ExactScalar c = ExactScalar::fraction(num(rng), den(rng));
  if (imag(rng)) c *= ExactScalar::i();
  return c;
}

OperatorExpr random_expr(std::mt19937& rng, int modes) {
  std::vector<RawProduct> raw;
  for (int k = 0; k < 3; ++k) raw.push_back({random_coeff(rng), random_word(rng, modes, 3)});
  return normal_order(raw, modes);
}

// Oracle: the product of truncated ladder matrices, read on low-lying columns
// where truncation cannot reach.
CMatrix word_matrix(const std::vector<LadderSymbol>& word, const FockRealization& fock) {
  CMatrix m = CMatrix::identity(fock.dimension());
  for (const auto& s : word) m = kernels::matmul_serial(m, fock.ladder(s));
  return m;
}

}  // namespace

TEST_CASE("parse examples") {
  const OperatorExpr n = P("ad1*a1");
  REQUIRE(n.size() == 1);
  CHECK(n.monomials().front().coeff.is_one());
  CHECK(n.monomials().front().key == MonomialKey{{1}, {1}});

  CHECK(P("x1*p1 - p1*x1") == OperatorExpr::scalar(1, ExactScalar::i()));
  CHECK(P("(1/2)*(a1*ad1 + ad1*a1)") == P("ad1*a1") + OperatorExpr::scalar(1, ExactScalar::fraction(1, 2)));
}

TEST_CASE("parser accepts both creation spellings and ignores whitespace") {
  CHECK(P("a†1 * a1") == P("ad1*a1"));
  CHECK(P("  ad1 ^ 2 *a1") == P("ad1*ad1*a1"));
  CHECK(P("x1") == (OperatorExpr::annihilation(1, 1) + OperatorExpr::creation(1, 1)) * ExactScalar::sqrt2().inverse());
  CHECK(P("p1") == OperatorExpr::momentum(1, 1));
  CHECK(P("sqrt2*sqrt2") == OperatorExpr::scalar(1, 2));
  CHECK(P("-(-a1)") == P("a1"));
  CHECK(P("a1/2") == P("(1/2)*a1"));
}

TEST_CASE("parse errors carry a position and kind") {
  try {
    (void)P("ad1 + * a1");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ParseError::Kind::syntax);
    CHECK(e.position() == 6);
  }
  try {
    (void)P("ad1*a3", 2);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ParseError::Kind::mode_range);
    CHECK(e.position() == 5);  // the offending mode index
  }
  CHECK_THROWS_AS(P("(a1"), ParseError);
  CHECK_THROWS_AS(P("a1/a1"), ParseError);
  CHECK_THROWS_AS(P("a1/0"), ParseError);
  CHECK_THROWS_AS(P(""), ParseError);
  CHECK_THROWS_AS(P("a0"), ParseError);
}

TEST_CASE("normal_order examples") {
  CHECK(normal_order(RawProduct{1, {a(1), ad(1)}}, 1) == P("ad1*a1 + 1"));
  CHECK(normal_order(RawProduct{1, {a(2), ad(1)}}, 2) == P("ad1*a2", 2));
  CHECK(normal_order(RawProduct{1, {a(1), a(1), ad(1), ad(1)}}, 1) == P("ad1^2*a1^2 + 4*ad1*a1 + 2"));
  CHECK(normal_order(RawProduct{1, {}}, 1) == OperatorExpr::scalar(1, 1));
  CHECK(normal_order(RawProduct{0, {a(1)}}, 1).is_zero());
}

TEST_CASE("normal_order rejects out-of-range modes") {
  CHECK_THROWS_AS(normal_order(RawProduct{1, {a(3)}}, 2), std::invalid_argument);
}

TEST_CASE("normal_order agrees with ladder-matrix products on protected states") {
  std::mt19937 rng(11);
  const int cutoff = 12;
  const FockRealization fock(cutoff, 2);
  for (int trial = 0; trial < 60; ++trial) {
    const auto word = random_word(rng, 2, 5);
    const CMatrix expected = word_matrix(word, fock);
    const CMatrix actual = realize(normal_order(RawProduct{1, word}, 2), fock);
    // A word of length L never leaves the truncation from states with total quanta <= cutoff - 1 - L.
    const auto states = protected_states(fock, static_cast<int>(word.size()));
    CHECK(protected_deviation(expected, actual, states) < 1e-9);
  }
}

TEST_CASE("Wick product and adjacent-transposition rewriting agree") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto u = random_word(rng, 2, 4);
    const auto v = random_word(rng, 2, 4);
    auto uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    CHECK(normal_order(RawProduct{1, u}, 2) * normal_order(RawProduct{1, v}, 2) == normal_order(RawProduct{1, uv}, 2));
  }
}

TEST_CASE("normal_order is idempotent and linear") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const OperatorExpr e = random_expr(rng, 2);
    std::vector<RawProduct> again;
    for (const auto& m : e.monomials()) {
      std::vector<LadderSymbol> word;
      for (int mode = 1; mode <= 2; ++mode)
        for (int k = 0; k < m.key.cdeg[static_cast<std::size_t>(mode - 1)]; ++k) word.push_back(ad(mode));
      for (int mode = 1; mode <= 2; ++mode)
        for (int k = 0; k < m.key.adeg[static_cast<std::size_t>(mode - 1)]; ++k) word.push_back(a(mode));
      again.push_back({m.coeff, word});
    }
    CHECK(normal_order(again, 2) == e);

    const RawProduct r1{random_coeff(rng), random_word(rng, 2, 4)};
    const RawProduct r2{random_coeff(rng), random_word(rng, 2, 4)};
    const std::vector<RawProduct> both{r1, r2};
    CHECK(normal_order(both, 2) == normal_order(r1, 2) + normal_order(r2, 2));
    const ExactScalar s = random_coeff(rng);
    CHECK(normal_order(RawProduct{r1.coeff * s, r1.word}, 2) == normal_order(r1, 2) * s);
  }
}

TEST_CASE("commutator examples") {
  CHECK(commutator(OperatorExpr::annihilation(1, 1), OperatorExpr::creation(1, 1)) == OperatorExpr::scalar(1, 1));
  std::mt19937 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const OperatorExpr x = random_expr(rng, 2);
    CHECK(commutator(x, x).is_zero());
  }
  const GeneratorFamily osc = two_mode_oscillator(Variant::canonical);
  CHECK(commutator(osc.op("J1"), osc.op("J2")) == osc.op("J3") * ExactScalar::i());
  CHECK_THROWS_AS(commutator(OperatorExpr::annihilation(1, 1), OperatorExpr::annihilation(2, 1)), ModeMismatchError);
}

TEST_CASE("commutator is bilinear, antisymmetric and satisfies Jacobi") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const OperatorExpr x = random_expr(rng, 2), y = random_expr(rng, 2), z = random_expr(rng, 2);
    const ExactScalar s = random_coeff(rng);
    CHECK(commutator(x, y) == -commutator(y, x));
    CHECK(commutator(x * s + y, z) == commutator(x, z) * s + commutator(y, z));
    const OperatorExpr jacobi =
        commutator(x, commutator(y, z)) + commutator(y, commutator(z, x)) + commutator(z, commutator(x, y));
    CHECK(jacobi.is_zero());
  }
}

TEST_CASE("[x_i, p_j] = i delta_ij") {
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      const OperatorExpr c = commutator(OperatorExpr::position(3, i), OperatorExpr::momentum(3, j));
      CHECK(c == OperatorExpr::scalar(3, i == j ? ExactScalar::i() : ExactScalar{}));
    }
}

TEST_CASE("adjoint") {
  CHECK(adjoint(OperatorExpr::annihilation(1, 1)) == OperatorExpr::creation(1, 1));
  CHECK(adjoint(P("a1*a2", 2)) == P("ad2*ad1", 2));
  CHECK(adjoint(P("a1*a2", 2)) == P("ad1*ad2", 2));
  const GeneratorFamily osc = two_mode_oscillator(Variant::canonical);
  CHECK(adjoint(osc.op("J2")) == osc.op("J2"));
  for (const auto& e : osc.elements()) CHECK(adjoint(std::get<OperatorExpr>(e)) == std::get<OperatorExpr>(e));

  std::mt19937 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const OperatorExpr x = random_expr(rng, 2), y = random_expr(rng, 2);
    CHECK(adjoint(adjoint(x)) == x);
    CHECK(adjoint(x * y) == adjoint(y) * adjoint(x));
  }
}

TEST_CASE("rendering is canonical and re-parseable") {
  CHECK(P("a1*a1*ad1*ad1").str() == "ad1^2*a1^2 + 4*ad1*a1 + 2");
  CHECK(OperatorExpr(2).str() == "0");
  std::mt19937 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const OperatorExpr e = random_expr(rng, 2);
    CHECK(parse_expr(e.str(), 2) == e);
    CHECK(parse_expr(e.str(), 2).str() == e.str());
  }
  const OperatorExpr irr = OperatorExpr::position(2, 1) * OperatorExpr::momentum(2, 2);
  CHECK(parse_expr(irr.str(), 2) == irr);
}

TEST_CASE("degree and term order") {
  const OperatorExpr e = P("ad1^2*a1^2 + 4*ad1*a1 + 2");
  CHECK(e.degree() == 4);
  const auto ms = e.monomials();
  REQUIRE(ms.size() == 3);
  CHECK(ms[0].key.degree() == 4);
  CHECK(ms[2].key.degree() == 0);
  CHECK(e.coefficient(MonomialKey{{1}, {1}}) == ExactScalar(4));
}
