#include "ccr/contract.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ccr {

// ---------------------------------------------------------------------------
// Laurent

Laurent::Laurent(const ExactScalar& c, int exponent) { add(exponent, c); }

void Laurent::add(int exponent, const ExactScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ExactScalar Laurent::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? ExactScalar{} : it->second;
}

int Laurent::lowest_exponent() const {
  if (terms_.empty()) throw std::logic_error("Laurent::lowest_exponent of zero");
  return terms_.begin()->first;
}

Laurent& Laurent::operator+=(const Laurent& rhs) {
  for (const auto& [e, c] : rhs.terms_) add(e, c);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& rhs) {
  for (const auto& [e, c] : rhs.terms_) add(e, -c);
  return *this;
}

Laurent operator*(const Laurent& lhs, const Laurent& rhs) {
  Laurent out;
  for (const auto& [e1, c1] : lhs.terms_)
    for (const auto& [e2, c2] : rhs.terms_) out.add(e1 + e2, c1 * c2);
  return out;
}

Laurent Laurent::shifted(int k) const {
  Laurent out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + k, c);
  return out;
}

Laurent Laurent::without_vanishing() const {
  Laurent out;
  for (const auto& [e, c] : terms_) {
    if (e <= 0) out.terms_.emplace(e, c);
  }
  return out;
}

Complex Laurent::evaluate(double epsilon) const {
  Complex s = 0.0;
  for (const auto& [e, c] : terms_) s += c.to_complex() * std::pow(epsilon, e);
  return s;
}

std::string Laurent::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    std::string t = c.str();
    if (e != 0) {
      const std::string power = "eps^" + std::to_string(e);
      if (c.is_one()) {
        t = power;
      } else if ((-c).is_one()) {
        t = "-" + power;
      } else {
        t += "*" + power;
      }
    }
    if (out.empty()) {
      out = t;
    } else if (t.front() == '-') {
      out += " - " + t.substr(1);
    } else {
      out += " + " + t;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// EpsMatrix

EpsMatrix EpsMatrix::from_exact(const ExactMatrix& m) {
  EpsMatrix out(m.n());
  for (std::size_t r = 0; r < m.n(); ++r)
    for (std::size_t c = 0; c < m.n(); ++c) out(r, c) = Laurent(m(r, c));
  return out;
}

EpsMatrix operator*(const EpsMatrix& lhs, const EpsMatrix& rhs) {
  if (lhs.n_ != rhs.n_) throw std::invalid_argument("EpsMatrix *: dimension mismatch");
  const std::size_t n = lhs.n_;
  EpsMatrix out(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) {
      if (lhs(r, k).is_zero()) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (!rhs(k, c).is_zero()) out(r, c) += lhs(r, k) * rhs(k, c);
      }
    }
  return out;
}

EpsMatrix EpsMatrix::shifted(int k) const {
  EpsMatrix out(n_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i].shifted(k);
  return out;
}

EpsMatrix EpsMatrix::without_vanishing() const {
  EpsMatrix out(n_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i].without_vanishing();
  return out;
}

bool EpsMatrix::is_identity() const {
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) {
      if (!((*this)(r, c) == (r == c ? Laurent(1) : Laurent()))) return false;
    }
  return true;
}

CMatrix EpsMatrix::evaluate(double epsilon) const {
  CMatrix out(n_, n_);
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) out(r, c) = (*this)(r, c).evaluate(epsilon);
  return out;
}

Laurent determinant(const EpsMatrix& m) {
  const std::size_t n = m.n();
  if (n > 8) throw std::invalid_argument("determinant: permutation expansion limited to n <= 8");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Laurent det;
  do {
    Laurent term(1);
    for (std::size_t r = 0; r < n && !term.is_zero(); ++r) term = term * m(r, perm[r]);
    if (term.is_zero()) continue;
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    if (inversions % 2 == 1) term = term * Laurent(-1);
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

EpsMatrix squeeze_matrix(std::size_t n) {
  EpsMatrix c(n);
  for (std::size_t k = 0; k + 1 < n; ++k) c(k, k) = Laurent::monomial(-1);
  c(n - 1, n - 1) = Laurent::monomial(1);
  return c;
}

EpsMatrix squeeze_inverse(std::size_t n) {
  EpsMatrix c(n);
  for (std::size_t k = 0; k + 1 < n; ++k) c(k, k) = Laurent::monomial(1);
  c(n - 1, n - 1) = Laurent::monomial(-1);
  return c;
}

EpsMatrix conjugate(const ExactMatrix& g, int scale_power) {
  return (squeeze_matrix(g.n()) * EpsMatrix::from_exact(g) * squeeze_inverse(g.n())).shifted(scale_power);
}

LimitResult limit(const EpsMatrix& m) {
  Divergent divergent;
  ExactMatrix out(m.n());
  for (std::size_t r = 0; r < m.n(); ++r)
    for (std::size_t c = 0; c < m.n(); ++c) {
      for (const auto& [e, coeff] : m(r, c).terms()) {
        if (e < 0) {
          divergent.entries.push_back({r, c, e, coeff});
        } else if (e == 0) {
          out(r, c) = coeff;
        }
      }
    }
  if (!divergent.entries.empty()) return divergent;
  return out;
}

LimitResult contract_by_inverse_squeeze(const ExactMatrix& g) {
  const EpsMatrix squeezed = conjugate(g, 0).without_vanishing();
  return limit(squeeze_inverse(g.n()) * squeezed * squeeze_matrix(g.n()));
}

int default_scale_power(const std::string& label) {
  if (label.empty()) return 0;
  return (label.front() == 'Q' || label.front() == 'P' || label == "S0") ? 2 : 0;
}

GeneratorFamily contract_family(const GeneratorFamily& family, const std::map<std::string, int>& powers,
                                const std::map<std::string, std::string>& renames, std::string name) {
  if (family.symbolic()) throw std::invalid_argument("contract_family: matrix representation required");
  std::vector<std::string> labels;
  std::vector<Element> elements;
  for (std::size_t k = 0; k < family.size(); ++k) {
    const std::string& label = family.labels()[k];
    auto p = powers.find(label);
    const int power = p == powers.end() ? 0 : p->second;
    LimitResult lim = limit(conjugate(std::get<ExactMatrix>(family.elements()[k]), power));
    if (const auto* div = std::get_if<Divergent>(&lim)) {
      const auto& e = div->entries.front();
      throw ContractionError("contraction of " + label + " diverges at (" + std::to_string(e.row + 1) + "," +
                             std::to_string(e.col + 1) + ") with eps^" + std::to_string(e.exponent));
    }
    auto r = renames.find(label);
    labels.push_back(r == renames.end() ? label : r->second);
    elements.emplace_back(std::get<ExactMatrix>(std::move(lim)));
  }
  return {std::move(name),
          family.representation(),
          "contraction of " + family.name() + " under the squeeze C(eps)",
          family.variant(),
          std::move(labels),
          std::move(elements)};
}

GeneratorFamily contract_o32(const GeneratorFamily& o32) {
  std::map<std::string, int> powers;
  for (const auto& l : o32.labels()) powers[l] = default_scale_power(l);
  GeneratorFamily contracted =
      contract_family(o32, powers, {{"Q1", "P1"}, {"Q2", "P2"}, {"Q3", "P3"}, {"S0", "P0"}}, "poincare");
  // Present in the conventional order: Lorentz part first, then translations.
  const std::vector<std::string> order{"J1", "J2", "J3", "K1", "K2", "K3", "P1", "P2", "P3", "P0"};
  std::vector<Element> elements;
  for (const auto& l : order) elements.push_back(contracted.at(l));
  return {"poincare",
          "5x5 affine (x, y, z, t, 1)",
          "epsilon-squeeze contraction of the O(3,2) generators",
          Variant::canonical,
          order,
          std::move(elements)};
}

GeneratorFamily contract_o32() { return contract_o32(o32_matrices()); }

CMatrix numeric_conjugate(const ExactMatrix& g, int scale_power, double epsilon) {
  const std::size_t n = g.n();
  CMatrix c(n, n), cinv(n, n);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    c(k, k) = 1.0 / epsilon;
    cinv(k, k) = epsilon;
  }
  c(n - 1, n - 1) = epsilon;
  cinv(n - 1, n - 1) = 1.0 / epsilon;
  return kernels::matmul_serial(kernels::matmul_serial(c, CMatrix::from_exact(g)), cinv) *
         Complex(std::pow(epsilon, scale_power), 0.0);
}

std::vector<TrajectoryRow> trajectory(const EpsMatrix& m) {
  std::vector<TrajectoryRow> out;
  for (std::size_t r = 0; r < m.n(); ++r)
    for (std::size_t c = 0; c < m.n(); ++c)
      for (const auto& [e, coeff] : m(r, c).terms()) out.push_back({r, c, e, coeff});
  return out;
}

}  // namespace ccr
