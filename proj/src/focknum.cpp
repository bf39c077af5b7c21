#include "ccr/focknum.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ccr {

FockRealization::FockRealization(int cutoff, int modes) : cutoff_(cutoff), modes_(modes), dimension_(1) {
  if (cutoff < 1 || modes < 1) throw std::invalid_argument("FockRealization: cutoff and modes must be positive");
  for (int m = 0; m < modes; ++m) dimension_ *= static_cast<std::size_t>(cutoff);
  for (int mode = 1; mode <= modes; ++mode) {
    CMatrix a(dimension_, dimension_);
    for (std::size_t s = 0; s < dimension_; ++s) {
      const int n = occupation(s, mode);
      if (n == 0) continue;
      std::vector<int> occ(static_cast<std::size_t>(modes));
      for (int k = 1; k <= modes; ++k) occ[static_cast<std::size_t>(k - 1)] = occupation(s, k);
      --occ[static_cast<std::size_t>(mode - 1)];
      a(index_of(occ), s) = std::sqrt(static_cast<double>(n));
    }
    creators_.push_back(a.transpose());
    annihilators_.push_back(std::move(a));
  }
}

int FockRealization::occupation(std::size_t index, int mode) const {
  std::size_t stride = 1;
  for (int k = modes_; k > mode; --k) stride *= static_cast<std::size_t>(cutoff_);
  return static_cast<int>((index / stride) % static_cast<std::size_t>(cutoff_));
}

int FockRealization::total_quanta(std::size_t index) const {
  int total = 0;
  for (int mode = 1; mode <= modes_; ++mode) total += occupation(index, mode);
  return total;
}

std::size_t FockRealization::index_of(const std::vector<int>& occupations) const {
  if (occupations.size() != static_cast<std::size_t>(modes_)) throw std::invalid_argument("index_of: wrong mode count");
  std::size_t index = 0;
  for (int n : occupations) {
    if (n < 0 || n >= cutoff_) throw std::out_of_range("index_of: occupation outside the truncation");
    index = index * static_cast<std::size_t>(cutoff_) + static_cast<std::size_t>(n);
  }
  return index;
}

const CMatrix& FockRealization::ladder(LadderSymbol s) const {
  if (s.mode < 1 || s.mode > modes_) throw std::out_of_range("FockRealization::ladder: mode out of range");
  const auto k = static_cast<std::size_t>(s.mode - 1);
  return s.kind == LadderKind::creation ? creators_[k] : annihilators_[k];
}

namespace {

double falling(int n, int k) {
  double out = 1.0;
  for (int j = 0; j < k; ++j) out *= static_cast<double>(n - j);
  return out;
}

}  // namespace

CMatrix realize(const OperatorExpr& expr, const FockRealization& fock) {
  if (expr.modes() > fock.modes()) throw std::invalid_argument("realize: expression has more modes than the realization");
  const std::size_t dim = fock.dimension();
  const int modes = expr.modes();
  CMatrix out(dim, dim);
  const auto monomials = expr.monomials();
  std::vector<int> occ(static_cast<std::size_t>(fock.modes()));
  for (std::size_t s = 0; s < dim; ++s) {
    for (int k = 1; k <= fock.modes(); ++k) occ[static_cast<std::size_t>(k - 1)] = fock.occupation(s, k);
    for (const auto& m : monomials) {
      // (a^dagger)^c a^a |n> = sqrt(n!/(n-a)! * (n-a+c)!/(n-a)!) |n-a+c>, per mode.
      std::vector<int> target = occ;
      double squared = 1.0;
      bool alive = true;
      for (int k = 0; k < modes && alive; ++k) {
        const auto i = static_cast<std::size_t>(k);
        const int n = occ[i];
        const int lowered = n - m.key.adeg[i];
        const int raised = lowered + m.key.cdeg[i];
        if (lowered < 0 || raised >= fock.cutoff()) {
          alive = false;
          break;
        }
        squared *= falling(n, m.key.adeg[i]) * falling(raised, m.key.cdeg[i]);
        target[i] = raised;
      }
      if (!alive) continue;
      out(fock.index_of(target), s) += m.coeff.to_complex() * std::sqrt(squared);
    }
  }
  return out;
}

std::vector<std::size_t> protected_states(const FockRealization& fock, int guard) {
  const int limit = fock.cutoff() - 1 - guard;
  if (guard < 0 || limit < 0) {
    throw std::invalid_argument("guard " + std::to_string(guard) + " too large for cutoff " +
                                std::to_string(fock.cutoff()));
  }
  std::vector<std::size_t> states;
  for (std::size_t s = 0; s < fock.dimension(); ++s) {
    if (fock.total_quanta(s) <= limit) states.push_back(s);
  }
  return states;
}

double protected_deviation(const CMatrix& lhs, const CMatrix& rhs, const std::vector<std::size_t>& states) {
  double dev = 0.0;
  for (std::size_t s : states)
    for (std::size_t r = 0; r < lhs.rows(); ++r) dev = std::max(dev, std::abs(lhs(r, s) - rhs(r, s)));
  return dev;
}

namespace {

double pair_deviation(const CMatrix& ra, const CMatrix& rb, const CMatrix& symbolic,
                      const std::vector<std::size_t>& states, Execution exec) {
  const CMatrix numeric = kernels::matmul(ra, rb, exec) - kernels::matmul(rb, ra, exec);
  return protected_deviation(symbolic, numeric, states);
}

}  // namespace

double protected_commutator_check(const OperatorExpr& a, const OperatorExpr& b, const FockRealization& fock,
                                  int guard, Execution exec) {
  const auto states = protected_states(fock, guard);
  return pair_deviation(realize(a, fock), realize(b, fock), realize(commutator(a, b), fock), states, exec);
}

std::vector<PairDeviation> protected_family_check(const GeneratorFamily& family, const FockRealization& fock,
                                                  int guard, Execution exec) {
  if (!family.symbolic()) throw std::invalid_argument("protected_family_check: symbolic family required");
  const auto states = protected_states(fock, guard);
  const std::size_t n = family.size();
  std::vector<CMatrix> realized(n);
  for (std::size_t k = 0; k < n; ++k) realized[k] = realize(std::get<OperatorExpr>(family.elements()[k]), fock);

  std::vector<PairDeviation> out;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) out.push_back({family.labels()[a], family.labels()[b], 0.0});

  const auto npairs = static_cast<long>(out.size());
#pragma omp parallel for schedule(dynamic) if (exec == Execution::parallel)
  for (long k = 0; k < npairs; ++k) {
    auto& pd = out[static_cast<std::size_t>(k)];
    const std::size_t a = family.index_of(pd.a);
    const std::size_t b = family.index_of(pd.b);
    const CMatrix symbolic = realize(commutator(family.op(pd.a), family.op(pd.b)), fock);
    pd.deviation = pair_deviation(realized[a], realized[b], symbolic, states, Execution::serial);
  }
  return out;
}

}  // namespace ccr
