#pragma once

#include "ccr/catalog.hpp"
#include "ccr/dense.hpp"
#include "ccr/execution.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace ccr {

/// Truncated number basis for `modes` oscillators with `cutoff` levels each.
///
/// Basis index = sum_i n_i * cutoff^(modes - i), so mode 1 is the slowest index.
/// a|n> = sqrt(n)|n-1>, a^dagger|n> = sqrt(n+1)|n+1> for n + 1 < cutoff, and
/// a^dagger|cutoff-1> = 0.
class FockRealization {
 public:
  FockRealization(int cutoff, int modes);

  int cutoff() const { return cutoff_; }
  int modes() const { return modes_; }
  std::size_t dimension() const { return dimension_; }

  /// Occupation of `mode` (1-based) in basis state `index`.
  int occupation(std::size_t index, int mode) const;
  int total_quanta(std::size_t index) const;
  std::size_t index_of(const std::vector<int>& occupations) const;

  /// Ladder matrix acting on the full tensor-product space.
  const CMatrix& ladder(LadderSymbol s) const;

 private:
  int cutoff_;
  int modes_;
  std::size_t dimension_;
  std::vector<CMatrix> annihilators_;
  std::vector<CMatrix> creators_;
};

/// Substitutes truncated ladder matrices into a normal-ordered expression.
/// Throws std::invalid_argument if the expression needs more modes.
CMatrix realize(const OperatorExpr& expr, const FockRealization& fock);

/// Basis states with total quanta <= cutoff - 1 - guard. Throws
/// std::invalid_argument when that set is empty.
std::vector<std::size_t> protected_states(const FockRealization& fock, int guard);

/// Max |entry| of (lhs - rhs) over the columns of the given states.
double protected_deviation(const CMatrix& lhs, const CMatrix& rhs, const std::vector<std::size_t>& states);

/// Compares realize([A, B]) with [realize(A), realize(B)] on every column of
/// the protected subspace.
double protected_commutator_check(const OperatorExpr& a, const OperatorExpr& b, const FockRealization& fock,
                                  int guard, Execution exec = Execution::parallel);

struct PairDeviation {
  std::string a, b;
  double deviation;
};

/// protected_commutator_check over every pair a < b of a symbolic family.
/// Pairs run on separate OpenMP threads in the parallel path.
std::vector<PairDeviation> protected_family_check(const GeneratorFamily& family, const FockRealization& fock,
                                                  int guard, Execution exec = Execution::parallel);

}  // namespace ccr
