#include "ccr/focknum.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>
#include <stdexcept>

using namespace ccr;

namespace {

const ExactScalar kI = ExactScalar::i();

}  // namespace

TEST_CASE("basis index convention") {
  const FockRealization fock(5, 2);
  CHECK(fock.dimension() == 25);
  CHECK(fock.index_of({2, 3}) == 13);
  CHECK(fock.occupation(13, 1) == 2);
  CHECK(fock.occupation(13, 2) == 3);
  CHECK(fock.total_quanta(13) == 5);
  CHECK_THROWS_AS(fock.index_of({5, 0}), std::out_of_range);
  CHECK_THROWS_AS(FockRealization(0, 1), std::invalid_argument);
}

TEST_CASE("ladder matrices") {
  const FockRealization fock(6, 1);
  const CMatrix& a = fock.ladder(LadderSymbol::annihilation(1));
  const CMatrix& ad = fock.ladder(LadderSymbol::creation(1));
  for (std::size_t n = 1; n < 6; ++n) CHECK(a(n - 1, n) == Complex(std::sqrt(static_cast<double>(n)), 0.0));
  CHECK(ad == a.transpose());
  CHECK(ad(5, 4) == Complex(std::sqrt(5.0), 0.0));
  CHECK_THROWS_AS(fock.ladder(LadderSymbol::creation(2)), std::out_of_range);
}

TEST_CASE("realize examples") {
  const int n = 8;
  const FockRealization fock(n, 1);
  const CMatrix number = realize(parse_expr("ad1*a1", 1), fock);
  for (std::size_t r = 0; r < static_cast<std::size_t>(n); ++r)
    for (std::size_t c = 0; c < static_cast<std::size_t>(n); ++c) {
      CHECK(number(r, c) == Complex(r == c ? static_cast<double>(r) : 0.0, 0.0));
    }

  // The normal-ordered form is n + 1/2 on every level; the truncated product
  // (A A^+ + A^+ A)/2 differs only on the top level.
  const CMatrix j2 = realize(parse_expr("(a1*ad1 + ad1*a1)/2", 1), fock);
  const CMatrix& a = fock.ladder(LadderSymbol::annihilation(1));
  const CMatrix& ad = fock.ladder(LadderSymbol::creation(1));
  const CMatrix product = (kernels::matmul_serial(a, ad) + kernels::matmul_serial(ad, a)) * Complex(0.5, 0.0);
  for (std::size_t k = 0; k < static_cast<std::size_t>(n); ++k) {
    CHECK(j2(k, k).real() == Catch::Approx(k + 0.5));
    if (k + 1 < static_cast<std::size_t>(n)) {
      CHECK(std::abs(product(k, k) - j2(k, k)) < 1e-14);
    }
  }
  CHECK(product(n - 1, n - 1).real() == Catch::Approx((n - 1) / 2.0));
}

TEST_CASE("truncated [a, a^+] is the identity except on the top level") {
  const int n = 7;
  const FockRealization fock(n, 1);
  const CMatrix& a = fock.ladder(LadderSymbol::annihilation(1));
  const CMatrix& ad = fock.ladder(LadderSymbol::creation(1));
  const CMatrix c = kernels::matmul_serial(a, ad) - kernels::matmul_serial(ad, a);
  CMatrix expected = CMatrix::identity(n);
  expected(n - 1, n - 1) = 1.0 - n;
  CHECK(max_abs_diff(c, expected) < 1e-13);
  // The symbolic commutator realizes to the exact identity.
  CHECK(realize(commutator(OperatorExpr::annihilation(1, 1), OperatorExpr::creation(1, 1)), fock) == CMatrix::identity(n));
}

TEST_CASE("protected commutator checks") {
  const GeneratorFamily osc = two_mode_oscillator(Variant::canonical);
  const FockRealization fock(16, 2);
  CHECK(commutator(osc.op("K3"), osc.op("Q3")) == osc.op("S0") * -kI);
  CHECK(protected_commutator_check(osc.op("K3"), osc.op("Q3"), fock, 4) <= 1e-12);
  CHECK(protected_commutator_check(osc.op("K3"), osc.op("K3"), fock, 4) == 0.0);

  const FockRealization small(4, 1);
  CHECK(protected_commutator_check(OperatorExpr::annihilation(1, 1), OperatorExpr::creation(1, 1), small, 0) > 1.0);
  CHECK_THROWS_AS(protected_states(small, 4), std::invalid_argument);
  CHECK_THROWS_AS(protected_states(small, -1), std::invalid_argument);
  CHECK(protected_states(small, 3).size() == 1);
}

TEST_CASE("all 45 pairs on the protected subspace") {
  const GeneratorFamily osc = two_mode_oscillator(Variant::canonical);
  const FockRealization fock(16, 2);
  const auto pairs = protected_family_check(osc, fock, 4);
  REQUIRE(pairs.size() == 45);
  for (const auto& p : pairs) CHECK(p.deviation <= 1e-12);
  CHECK_THROWS_AS(protected_family_check(o32_matrices(), fock, 4), std::invalid_argument);
}

TEST_CASE("serial and parallel pair checks agree exactly") {
  const GeneratorFamily osc = two_mode_oscillator(Variant::canonical);
  const FockRealization fock(8, 2);
  const auto s = protected_family_check(osc, fock, 4, Execution::serial);
  const auto p = protected_family_check(osc, fock, 4, Execution::parallel);
  REQUIRE(s.size() == p.size());
  for (std::size_t k = 0; k < s.size(); ++k) {
    CHECK(s[k].a == p[k].a);
    CHECK(s[k].deviation == p[k].deviation);
  }
}

TEST_CASE("realized generators are exactly Hermitian") {
  const FockRealization fock(10, 2);
  const GeneratorFamily osc = two_mode_oscillator(Variant::canonical);
  for (const auto& e : osc.elements()) {
    const CMatrix m = realize(std::get<OperatorExpr>(e), fock);
    CHECK(m == m.adjoint());
  }
}

TEST_CASE("S0 spectrum on the protected subspace") {
  const GeneratorFamily osc = two_mode_oscillator(Variant::canonical);
  const FockRealization fock(16, 2);
  const CMatrix s0 = realize(osc.op("S0"), fock);
  for (std::size_t st : protected_states(fock, 4)) {
    const double n1 = fock.occupation(st, 1), n2 = fock.occupation(st, 2);
    CHECK(s0(st, st) == Complex((n1 + n2 + 1) / 2, 0.0));
    for (std::size_t r = 0; r < s0.rows(); ++r) {
      if (r != st) CHECK(s0(r, st) == Complex(0.0, 0.0));
    }
  }
}

TEST_CASE("realize rejects expressions with more modes") {
  CHECK_THROWS_AS(realize(OperatorExpr::creation(2, 2), FockRealization(4, 1)), std::invalid_argument);
}
