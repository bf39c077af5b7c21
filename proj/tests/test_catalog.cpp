#include "ccr/catalog.hpp"

#include <catch_amalgamated.hpp>

#include <stdexcept>

using namespace ccr;

namespace {

const ExactScalar kI = ExactScalar::i();
const ExactScalar kHalf = ExactScalar::fraction(1, 2);

OperatorExpr P(const char* text, int modes) { return parse_expr(text, modes); }

bool traceless(const ExactMatrix& m) { return m.trace().is_zero(); }

}  // namespace

TEST_CASE("single-mode conventions") {
  const GeneratorFamily text = sp2_oscillator(Sp2Convention::text);
  const GeneratorFamily table = sp2_oscillator(Sp2Convention::table);
  const GeneratorFamily canon = sp2_oscillator(Sp2Convention::canonical);

  CHECK(text.op("J2") == P("(a1*ad1 + ad1*a1)/2", 1));
  CHECK(text.op("J2") == table.op("J2"));
  // The table forms differ from the text forms by a factor -i on K1 and K3.
  CHECK(table.op("K1") == text.op("K1") * -kI);
  CHECK(table.op("K3") == text.op("K3") * -kI);
  for (const char* l : {"J2", "K1", "K3"}) CHECK(canon.op(l) == text.op(l) * kHalf);

  CHECK(canon.variant() == Variant::canonical);
  CHECK(text.variant() == Variant::as_printed);
  CHECK(commutator(canon.op("J2"), canon.op("K1")) == canon.op("K3") * -kI);
}

TEST_CASE("Pauli family") {
  const GeneratorFamily f = sp2_pauli();
  CHECK(f.matrix("J2")(0, 1) == -kI * kHalf);
  CHECK(f.matrix("J2")(1, 0) == kI * kHalf);
  for (const auto& e : f.elements()) CHECK(traceless(std::get<ExactMatrix>(e)));
  CHECK(commutator(f.matrix("J2"), f.matrix("K1")) == f.matrix("K3") * -kI);
}

TEST_CASE("4x4 Minkowski family") {
  const GeneratorFamily f = sp2_minkowski4(Variant::canonical);
  CHECK(f.matrix("K1") == ExactMatrix::unit(4, 0, 3, kI) + ExactMatrix::unit(4, 3, 0, kI));
  for (const auto& e : f.elements()) {
    const auto& m = std::get<ExactMatrix>(e);
    for (std::size_t k = 0; k < 4; ++k) {
      CHECK(m(1, k).is_zero());
      CHECK(m(k, 1).is_zero());
    }
  }
  CHECK(f.matrix("J2").transpose() == -f.matrix("J2"));

  const GeneratorFamily printed = sp2_minkowski4(Variant::as_printed);
  CHECK(printed.matrix("J2")(0, 2) == kI);
  CHECK(printed.matrix("J2")(2, 0) == kI);
  CHECK(printed.matrix("K1") == f.matrix("K1"));
  CHECK(printed.matrix("K3") == f.matrix("K3"));
}

TEST_CASE("two-mode oscillator") {
  const GeneratorFamily f = two_mode_oscillator(Variant::canonical);
  CHECK(f.size() == 10);
  CHECK(f.labels() == std::vector<std::string>{"J1", "J2", "J3", "S0", "K1", "K2", "K3", "Q1", "Q2", "Q3"});
  CHECK(f.op("S0") == P("(ad1*a1 + a2*ad2)/2", 2));
  CHECK(f.op("Q3") == P("(i/2)*(ad1*ad2 - a1*a2)", 2));
  for (const auto& e : f.elements()) CHECK(adjoint(std::get<OperatorExpr>(e)) == std::get<OperatorExpr>(e));

  const GeneratorFamily printed = two_mode_oscillator(Variant::as_printed);
  for (const char* l : {"J1", "J2", "J3", "S0", "Q1", "Q2", "Q3"}) CHECK(printed.op(l) == f.op(l));
  for (const char* l : {"K1", "K2", "K3"}) CHECK(printed.op(l) == -f.op(l));
}

TEST_CASE("Sp(4) matrices") {
  const GeneratorFamily f = sp4_matrices(Variant::canonical);
  const ExactMatrix sigma3 = ExactMatrix::from_rows({{1, 0}, {0, -1}});
  const ExactMatrix eye = ExactMatrix::identity(2);
  CHECK(f.matrix("K2") == kron(eye, sigma3) * (kI * kHalf));
  const ExactMatrix offdiag = ExactMatrix::from_rows({{0, -1}, {1, 0}});
  CHECK(f.matrix("J2") == kron(offdiag, eye) * (kI * kHalf));

  REQUIRE(f.metric());
  const ExactMatrix& j = *f.metric();
  CHECK(j == symplectic_form());
  for (const auto& e : f.elements()) {
    const auto& g = std::get<ExactMatrix>(e);
    CHECK((g * j + j * g.transpose()).is_zero());
  }

  const GeneratorFamily table = sp4_matrices(Variant::as_printed);
  CHECK(table.matrix("Q3") == table.matrix("S0"));
  CHECK_FALSE(f.matrix("Q3") == f.matrix("S0"));
}

TEST_CASE("O(3,2) matrices") {
  const GeneratorFamily f = o32_matrices();
  CHECK(f.matrix("Q1") == ExactMatrix::unit(5, 0, 4, kI) + ExactMatrix::unit(5, 4, 0, kI));
  CHECK(f.matrix("S0") == ExactMatrix::unit(5, 3, 4, -kI) + ExactMatrix::unit(5, 4, 3, kI));
  const ExactMatrix eta = o32_metric();
  REQUIRE(f.metric());
  CHECK(*f.metric() == eta);
  for (const auto& e : f.elements()) {
    const auto& g = std::get<ExactMatrix>(e);
    CHECK((g * eta + eta * g.transpose()).is_zero());
  }
}

TEST_CASE("translation generators") {
  const GeneratorFamily f = translation_matrices();
  CHECK(f.matrix("P1") == ExactMatrix::unit(5, 0, 4, kI));
  CHECK(f.matrix("P0") == ExactMatrix::unit(5, 3, 4, -kI));
  for (const auto& e : f.elements()) {
    const auto& g = std::get<ExactMatrix>(e);
    CHECK((g * g).is_zero());
  }
}

TEST_CASE("quadratic-form arrays are Hermitian") {
  const OperatorMatrix one = single_mode_form_matrix();
  const OperatorMatrix two = two_mode_form_matrix();
  const OperatorMatrix block = coupling_block();
  for (const OperatorMatrix* m : {&one, &two}) {
    for (std::size_t r = 0; r < m->n; ++r)
      for (std::size_t c = 0; c < m->n; ++c) CHECK(adjoint((*m)(r, c)) == (*m)(c, r));
  }
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) {
      CHECK(two(r, c + 2) == block(r, c));
      CHECK(two(c + 2, r) == adjoint(block(r, c)));
    }
}

TEST_CASE("family validation") {
  CHECK_THROWS_AS(GeneratorFamily("dup", "", "", Variant::canonical, {"A", "A"},
                                  {ExactMatrix::identity(2), ExactMatrix::identity(2)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(GeneratorFamily("mixed", "", "", Variant::canonical, {"A", "B"},
                                  {ExactMatrix::identity(2), OperatorExpr::creation(1, 1)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(GeneratorFamily("sizes", "", "", Variant::canonical, {"A", "B"},
                                  {ExactMatrix::identity(2), ExactMatrix::identity(3)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(GeneratorFamily("metric", "", "", Variant::canonical, {"A"}, {ExactMatrix::identity(2)},
                                  ExactMatrix::identity(3)),
                  std::invalid_argument);
  CHECK_THROWS_AS(sp2_pauli().index_of("Q9"), std::out_of_range);
}

TEST_CASE("restriction keeps labels and shrinks matrices") {
  const std::vector<std::size_t> xzt{0, 2, 3};
  const GeneratorFamily r = restrict_family(sp2_minkowski4(Variant::canonical), xzt, "m3");
  CHECK(r.dimension() == 3);
  CHECK(r.labels() == sp2_minkowski4(Variant::canonical).labels());
  CHECK(r.matrix("K1") == ExactMatrix::unit(3, 0, 2, kI) + ExactMatrix::unit(3, 2, 0, kI));
}
