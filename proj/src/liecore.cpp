#include "ccr/liecore.hpp"

#include <omp.h>

#include <set>
#include <stdexcept>

namespace ccr {

// ---------------------------------------------------------------------------
// SpanSolver

SpanSolver::SpanSolver(const GeneratorFamily& basis)
    : symbolic_(basis.symbolic()), dimension_(basis.dimension()), basis_size_(basis.size()) {
  if (symbolic_) {
    for (const auto& e : basis.elements()) {
      for (const auto& [key, c] : std::get<OperatorExpr>(e).terms()) coords_.try_emplace(key, 0);
    }
    std::size_t k = 0;
    for (auto& [key, idx] : coords_) {
      idx = k++;
      keys_.push_back(key);
    }
    ncoords_ = coords_.size();
  } else {
    ncoords_ = dimension_ * dimension_;
  }

  for (std::size_t j = 0; j < basis.size(); ++j) {
    std::vector<ExactScalar> v = vectorize(basis.elements()[j], nullptr);
    std::vector<ExactScalar> t(basis_size_);
    t[j] = 1;
    for (const Row& row : rows_) {
      const ExactScalar c = v[row.pivot];
      if (c.is_zero()) continue;
      for (std::size_t k = 0; k < ncoords_; ++k) {
        if (!row.values[k].is_zero()) v[k] -= c * row.values[k];
      }
      for (std::size_t k = 0; k < basis_size_; ++k) {
        if (!row.transform[k].is_zero()) t[k] -= c * row.transform[k];
      }
    }
    std::size_t pivot = 0;
    while (pivot < ncoords_ && v[pivot].is_zero()) ++pivot;
    if (pivot == ncoords_) {
      dependent_.push_back(basis.labels()[j]);
      continue;
    }
    const ExactScalar inv = v[pivot].inverse();
    for (auto& x : v) x *= inv;
    for (auto& x : t) x *= inv;
    for (Row& row : rows_) {
      const ExactScalar c = row.values[pivot];
      if (c.is_zero()) continue;
      for (std::size_t k = 0; k < ncoords_; ++k) row.values[k] -= c * v[k];
      for (std::size_t k = 0; k < basis_size_; ++k) row.transform[k] -= c * t[k];
    }
    rows_.push_back({pivot, std::move(v), std::move(t)});
  }
}

std::vector<ExactScalar> SpanSolver::vectorize(const Element& x,
                                               std::vector<std::pair<MonomialKey, ExactScalar>>* extra) const {
  if (is_symbolic(x) != symbolic_ || element_dimension(x) != dimension_) {
    throw std::invalid_argument("expand_in_basis: element kind or dimension does not match the basis");
  }
  std::vector<ExactScalar> v(ncoords_);
  if (symbolic_) {
    for (const auto& [key, c] : std::get<OperatorExpr>(x).terms()) {
      auto it = coords_.find(key);
      if (it != coords_.end()) {
        v[it->second] = c;
      } else if (extra != nullptr) {
        extra->emplace_back(key, c);
      }
    }
  } else {
    v = std::get<ExactMatrix>(x).entries();
  }
  return v;
}

Element SpanSolver::devectorize(const std::vector<ExactScalar>& v,
                                const std::vector<std::pair<MonomialKey, ExactScalar>>& extra) const {
  if (symbolic_) {
    OperatorExpr out(static_cast<int>(dimension_));
    for (std::size_t k = 0; k < ncoords_; ++k) out.add_term(keys_[k], v[k]);
    for (const auto& [key, c] : extra) out.add_term(key, c);
    return out;
  }
  ExactMatrix m(dimension_);
  for (std::size_t r = 0; r < dimension_; ++r)
    for (std::size_t c = 0; c < dimension_; ++c) m(r, c) = v[r * dimension_ + c];
  return m;
}

ExpansionResult SpanSolver::expand(const Element& x) const {
  std::vector<std::pair<MonomialKey, ExactScalar>> extra;
  std::vector<ExactScalar> v = vectorize(x, &extra);
  std::vector<ExactScalar> coeffs(basis_size_);
  for (const Row& row : rows_) {
    const ExactScalar c = v[row.pivot];
    if (c.is_zero()) continue;
    for (std::size_t k = 0; k < ncoords_; ++k) {
      if (!row.values[k].is_zero()) v[k] -= c * row.values[k];
    }
    for (std::size_t k = 0; k < basis_size_; ++k) {
      if (!row.transform[k].is_zero()) coeffs[k] += c * row.transform[k];
    }
  }
  bool residual_zero = extra.empty();
  for (const auto& x_k : v) residual_zero = residual_zero && x_k.is_zero();
  if (!residual_zero) return NotInSpan{devectorize(v, extra)};
  return coeffs;
}

ExpansionResult expand_in_basis(const Element& x, const GeneratorFamily& basis) { return SpanSolver(basis).expand(x); }

// ---------------------------------------------------------------------------
// StructureConstants

StructureConstants::StructureConstants(std::vector<std::string> labels)
    : labels_(std::move(labels)), f_(labels_.size() * labels_.size() * labels_.size()) {}

std::size_t StructureConstants::index_of(std::string_view label) const {
  for (std::size_t k = 0; k < labels_.size(); ++k) {
    if (labels_[k] == label) return k;
  }
  throw std::out_of_range("structure constants have no label '" + std::string(label) + "'");
}

const ExactScalar& StructureConstants::get(std::string_view a, std::string_view b, std::string_view c) const {
  return (*this)(index_of(a), index_of(b), index_of(c));
}

void StructureConstants::set_bracket(std::string_view a, std::string_view b, std::string_view c,
                                     const ExactScalar& value) {
  const std::size_t ia = index_of(a), ib = index_of(b), ic = index_of(c);
  (*this)(ia, ib, ic) = value;
  (*this)(ib, ia, ic) = -value;
}

bool StructureConstants::is_antisymmetric() const {
  const std::size_t n = size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        if (!((*this)(a, b, c) + (*this)(b, a, c)).is_zero()) return false;
      }
  return true;
}

std::vector<StructureConstants::Triplet> StructureConstants::nonzero() const {
  std::vector<Triplet> out;
  const std::size_t n = size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        if (!(*this)(a, b, c).is_zero()) out.push_back({labels_[a], labels_[b], labels_[c], (*this)(a, b, c)});
      }
  return out;
}

namespace {

std::string linear_term(const ExactScalar& c, const std::string& label) {
  if (c.is_one()) return label;
  if ((-c).is_one()) return "-" + label;
  return c.str() + " " + label;
}

std::string linear_combination(const std::vector<std::pair<std::string, ExactScalar>>& terms) {
  std::string out;
  for (const auto& [label, c] : terms) {
    if (c.is_zero()) continue;
    std::string t = linear_term(c, label);
    if (out.empty()) {
      out = t;
    } else if (t.front() == '-') {
      out += " - " + t.substr(1);
    } else {
      out += " + " + t;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string StructureConstants::bracket_text(std::size_t a, std::size_t b) const {
  std::vector<std::pair<std::string, ExactScalar>> terms;
  for (std::size_t c = 0; c < size(); ++c) terms.emplace_back(labels_[c], (*this)(a, b, c));
  return "[" + labels_[a] + ", " + labels_[b] + "] = " + linear_combination(terms);
}

std::string StructureConstants::render_text() const {
  std::string out;
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = a + 1; b < size(); ++b) out += bracket_text(a, b) + "\n";
  return out;
}

nlohmann::json StructureConstants::to_json() const {
  nlohmann::json f = nlohmann::json::array();
  for (const auto& t : nonzero()) f.push_back({{"a", t.a}, {"b", t.b}, {"c", t.c}, {"value", t.value.str()}});
  return {{"labels", labels_}, {"f", f}};
}

// ---------------------------------------------------------------------------
// Closure, Jacobi, comparison

ClosureReport structure_constants(const GeneratorFamily& basis, Execution exec) {
  const SpanSolver solver(basis);
  const std::size_t n = basis.size();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) pairs.emplace_back(a, b);

  std::vector<std::optional<ExpansionResult>> results(pairs.size());
  const auto npairs = static_cast<long>(pairs.size());
#pragma omp parallel for schedule(dynamic) if (exec == Execution::parallel)
  for (long k = 0; k < npairs; ++k) {
    const auto [a, b] = pairs[static_cast<std::size_t>(k)];
    results[static_cast<std::size_t>(k)] =
        solver.expand(element_commutator(basis.elements()[a], basis.elements()[b]));
  }

  ClosureReport report;
  report.dependent = solver.dependent_labels();
  StructureConstants table(basis.labels());
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto [a, b] = pairs[k];
    if (const auto* miss = std::get_if<NotInSpan>(&*results[k])) {
      report.failures.push_back({basis.labels()[a], basis.labels()[b], miss->residual});
      continue;
    }
    const auto& coeffs = std::get<std::vector<ExactScalar>>(*results[k]);
    for (std::size_t c = 0; c < n; ++c) {
      table(a, b, c) = coeffs[c];
      table(b, a, c) = -coeffs[c];
    }
  }
  report.closed = report.failures.empty() && report.dependent.empty();
  if (report.closed) report.table = std::move(table);
  return report;
}

bool jacobi_check(const StructureConstants& sc) {
  const std::size_t n = sc.size();
  // term(a, b, c, e) = sum_d f(a,b,d) f(d,c,e)
  auto term = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t e) {
    ExactScalar s;
    for (std::size_t d = 0; d < n; ++d) {
      const ExactScalar& x = sc(a, b, d);
      if (x.is_zero()) continue;
      const ExactScalar& y = sc(d, c, e);
      if (!y.is_zero()) s += x * y;
    }
    return s;
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t e = 0; e < n; ++e) {
          if (!(term(a, b, c, e) + term(b, c, a, e) + term(c, a, b, e)).is_zero()) return false;
        }
  return true;
}

Comparison compare(const StructureConstants& lhs, const StructureConstants& rhs,
                   const std::map<std::string, std::string>& correspondence) {
  if (lhs.size() != rhs.size() || correspondence.size() != lhs.size()) {
    throw std::invalid_argument("compare: label counts differ");
  }
  std::vector<std::size_t> map(lhs.size());
  std::set<std::size_t> targets;
  for (std::size_t a = 0; a < lhs.size(); ++a) {
    auto it = correspondence.find(lhs.labels()[a]);
    if (it == correspondence.end()) throw std::invalid_argument("compare: label " + lhs.labels()[a] + " unmapped");
    map[a] = rhs.index_of(it->second);
    targets.insert(map[a]);
  }
  if (targets.size() != lhs.size()) throw std::invalid_argument("compare: correspondence is not a bijection");

  Comparison out;
  const std::size_t n = lhs.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        const ExactScalar& x = lhs(a, b, c);
        const ExactScalar& y = rhs(map[a], map[b], map[c]);
        if (!(x == y)) out.mismatches.push_back({lhs.labels()[a], lhs.labels()[b], lhs.labels()[c], x, y});
      }
  out.match = out.mismatches.empty();
  return out;
}

std::map<std::string, std::string> identity_correspondence(const std::vector<std::string>& labels) {
  std::map<std::string, std::string> out;
  for (const auto& l : labels) out.emplace(l, l);
  return out;
}

std::vector<ClaimResult> check_claims(const StructureConstants& sc, const std::vector<BracketClaim>& claims) {
  std::vector<ClaimResult> out;
  for (const auto& claim : claims) {
    const std::size_t a = sc.index_of(claim.a);
    const std::size_t b = sc.index_of(claim.b);
    std::vector<ExactScalar> expected(sc.size());
    for (const auto& [label, c] : claim.rhs) expected[sc.index_of(label)] += c;
    bool holds = true;
    for (std::size_t c = 0; c < sc.size(); ++c) holds = holds && sc(a, b, c) == expected[c];
    out.push_back({claim, holds, sc.bracket_text(a, b)});
  }
  return out;
}

StructureConstants table_from_claims(std::vector<std::string> labels, const std::vector<BracketClaim>& claims) {
  StructureConstants sc(std::move(labels));
  for (const auto& claim : claims) {
    for (const auto& [label, c] : claim.rhs) {
      const std::size_t a = sc.index_of(claim.a), b = sc.index_of(claim.b), k = sc.index_of(label);
      sc(a, b, k) += c;
      sc(b, a, k) -= c;
    }
  }
  return sc;
}

// ---------------------------------------------------------------------------
// Published bracket sets

namespace reference {

int levi_civita(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  // even permutations of (1,2,3)
  if ((i == 1 && j == 2) || (i == 2 && j == 3) || (i == 3 && j == 1)) return 1;
  return -1;
}

namespace {

const ExactScalar kI = ExactScalar::i();

std::string lbl(const char* prefix, int i) { return prefix + std::to_string(i); }

// [A_i, B_j] = sign * i * eps_ijk C_k, for all i, j (or i < j when `upper_only`).
void epsilon_family(std::vector<BracketClaim>& out, const char* A, const char* B, const char* C, long sign,
                    bool upper_only, const std::string& source) {
  for (int i = 1; i <= 3; ++i)
    for (int j = upper_only ? i + 1 : 1; j <= 3; ++j) {
      BracketClaim claim{lbl(A, i), lbl(B, j), {}, source};
      for (int k = 1; k <= 3; ++k) {
        const int e = levi_civita(i, j, k);
        if (e != 0) claim.rhs.emplace_back(lbl(C, k), kI * ExactScalar(sign * e));
      }
      out.push_back(std::move(claim));
    }
}

}  // namespace

std::vector<BracketClaim> sp2_brackets() {
  const std::string src = "Sp(2) brackets";
  return {{"J2", "K1", {{"K3", -kI}}, src}, {"J2", "K3", {{"K1", kI}}, src}, {"K1", "K3", {{"J2", kI}}, src}};
}

std::vector<BracketClaim> ten_generator_brackets() {
  std::vector<BracketClaim> out;
  epsilon_family(out, "J", "J", "J", 1, true, "[Ji, Jj] = i eps_ijk Jk");
  epsilon_family(out, "J", "K", "K", 1, false, "[Ji, Kj] = i eps_ijk Kk");
  epsilon_family(out, "J", "Q", "Q", 1, false, "[Ji, Qj] = i eps_ijk Qk");
  epsilon_family(out, "K", "K", "J", -1, true, "[Ki, Kj] = -i eps_ijk Jk");
  epsilon_family(out, "Q", "Q", "J", -1, true, "[Qi, Qj] = -i eps_ijk Jk");
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      BracketClaim claim{lbl("K", i), lbl("Q", j), {}, "[Ki, Qj] = -i delta_ij S0"};
      if (i == j) claim.rhs.emplace_back("S0", -kI);
      out.push_back(std::move(claim));
    }
  for (int i = 1; i <= 3; ++i) out.push_back({lbl("J", i), "S0", {}, "[Ji, S0] = 0"});
  for (int i = 1; i <= 3; ++i) out.push_back({lbl("K", i), "S0", {{lbl("Q", i), -kI}}, "[Ki, S0] = -i Qi"});
  for (int i = 1; i <= 3; ++i) out.push_back({lbl("Q", i), "S0", {{lbl("K", i), kI}}, "[Qi, S0] = i Ki"});
  return out;
}

std::vector<BracketClaim> poincare_published_brackets() {
  std::vector<BracketClaim> out;
  epsilon_family(out, "J", "J", "J", 1, true, "rotation: [Ji, Jj] = i eps_ijk Jk");
  epsilon_family(out, "J", "P", "P", 1, false, "Galilei: [Ji, Pj] = i eps_ijk Pk");
  epsilon_family(out, "K", "K", "J", -1, true, "boosts: [Ki, Kj] = -i eps_ijk Jk");
  epsilon_family(out, "J", "K", "K", 1, false, "rotation-boost: [Ji, Kj] = i eps_ijk Kk");
  const char* four[] = {"P1", "P2", "P3", "P0"};
  for (int m = 0; m < 4; ++m)
    for (int n = m + 1; n < 4; ++n) out.push_back({four[m], four[n], {}, "translations commute: [Pmu, Pnu] = 0"});
  // Published as [Pi, Ki] = i delta_0i P0, which vanishes for spatial i.
  for (int i = 1; i <= 3; ++i) out.push_back({lbl("P", i), lbl("K", i), {}, "boost-translation: [Pi, Ki] = i delta_0i P0"});
  return out;
}

}  // namespace reference

}  // namespace ccr
