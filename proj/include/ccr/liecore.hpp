#pragma once

#include "ccr/catalog.hpp"
#include "ccr/execution.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace ccr {

struct NotInSpan {
  Element residual;
};

/// Either the exact coefficients (one per basis label) or the residual left
/// after reducing against the basis.
using ExpansionResult = std::variant<std::vector<ExactScalar>, NotInSpan>;

/// Exact Gauss-Jordan elimination over vectorized generators.
class SpanSolver {
 public:
  explicit SpanSolver(const GeneratorFamily& basis);

  /// Throws std::invalid_argument on kind or dimension mismatch.
  ExpansionResult expand(const Element& x) const;
  /// Labels whose generator is a combination of earlier ones.
  const std::vector<std::string>& dependent_labels() const { return dependent_; }
  std::size_t rank() const { return rows_.size(); }

 private:
  struct Row {
    std::size_t pivot;
    std::vector<ExactScalar> values;     // over coordinates
    std::vector<ExactScalar> transform;  // over basis elements
  };

  std::vector<ExactScalar> vectorize(const Element& x, std::vector<std::pair<MonomialKey, ExactScalar>>* extra) const;
  Element devectorize(const std::vector<ExactScalar>& v,
                      const std::vector<std::pair<MonomialKey, ExactScalar>>& extra) const;

  bool symbolic_;
  std::size_t dimension_;
  std::size_t basis_size_;
  std::map<MonomialKey, std::size_t, CanonicalTermOrder> coords_;
  std::vector<MonomialKey> keys_;
  std::size_t ncoords_ = 0;
  std::vector<Row> rows_;
  std::vector<std::string> dependent_;
};

ExpansionResult expand_in_basis(const Element& x, const GeneratorFamily& basis);

/// Rank-3 tensor f with [X_a, X_b] = sum_c f(a, b, c) X_c.
class StructureConstants {
 public:
  explicit StructureConstants(std::vector<std::string> labels);

  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t size() const { return labels_.size(); }
  std::size_t index_of(std::string_view label) const;

  const ExactScalar& operator()(std::size_t a, std::size_t b, std::size_t c) const { return f_[flat(a, b, c)]; }
  ExactScalar& operator()(std::size_t a, std::size_t b, std::size_t c) { return f_[flat(a, b, c)]; }
  const ExactScalar& get(std::string_view a, std::string_view b, std::string_view c) const;
  /// Sets f(a,b,c) = value and f(b,a,c) = -value.
  void set_bracket(std::string_view a, std::string_view b, std::string_view c, const ExactScalar& value);

  bool is_antisymmetric() const;

  struct Triplet {
    std::string a, b, c;
    ExactScalar value;
  };
  /// All nonzero entries, ordered by (a, b, c) label index.
  std::vector<Triplet> nonzero() const;

  /// "[K1, Q1] = -i S0", or "[A, B] = 0".
  std::string bracket_text(std::size_t a, std::size_t b) const;
  /// One line per pair a < b in label order.
  std::string render_text() const;
  nlohmann::json to_json() const;

  friend bool operator==(const StructureConstants&, const StructureConstants&) = default;

 private:
  std::size_t flat(std::size_t a, std::size_t b, std::size_t c) const { return (a * labels_.size() + b) * labels_.size() + c; }

  std::vector<std::string> labels_;
  std::vector<ExactScalar> f_;
};

struct ClosureFailure {
  std::string a, b;
  Element residual;
};

struct ClosureReport {
  bool closed = false;
  /// Labels that are linear combinations of earlier generators.
  std::vector<std::string> dependent;
  /// Pairs (a < b) whose bracket leaves the span, in label order.
  std::vector<ClosureFailure> failures;
  std::optional<StructureConstants> table;
};

/// Expands every pairwise commutator. Closed iff the basis is independent and
/// every residual vanishes. Pairs are independent, so the parallel path
/// distributes them over OpenMP threads.
ClosureReport structure_constants(const GeneratorFamily& basis, Execution exec = Execution::parallel);

/// Exact Jacobi contraction on every (a, b, c, e).
bool jacobi_check(const StructureConstants& sc);

struct TableMismatch {
  std::string a, b, c;  // labels of the first table
  ExactScalar lhs, rhs;
};

struct Comparison {
  bool match = false;
  std::vector<TableMismatch> mismatches;
};

/// Entrywise comparison of `lhs` against `rhs` under a label map from lhs
/// labels to rhs labels. Throws std::invalid_argument unless the map is a
/// bijection between the two label sets.
Comparison compare(const StructureConstants& lhs, const StructureConstants& rhs,
                   const std::map<std::string, std::string>& correspondence);
std::map<std::string, std::string> identity_correspondence(const std::vector<std::string>& labels);

/// A published bracket [a, b] = sum coeff * label.
struct BracketClaim {
  std::string a, b;
  std::vector<std::pair<std::string, ExactScalar>> rhs;
  std::string source;
};

struct ClaimResult {
  BracketClaim claim;
  bool holds = false;
  /// Rendered bracket from the table.
  std::string actual;
};

std::vector<ClaimResult> check_claims(const StructureConstants& sc, const std::vector<BracketClaim>& claims);
/// Builds a table from claims; unlisted brackets are zero.
StructureConstants table_from_claims(std::vector<std::string> labels, const std::vector<BracketClaim>& claims);

/// Published bracket sets, used as golden data.
namespace reference {

/// [J2,K1] = -iK3, [J2,K3] = iK1, [K1,K3] = iJ2.
std::vector<BracketClaim> sp2_brackets();
/// Every bracket of the ten-generator two-oscillator algebra.
std::vector<BracketClaim> ten_generator_brackets();
/// Rotation, Galilei, boost and boost-translation brackets as published,
/// including the published boost-translation form.
std::vector<BracketClaim> poincare_published_brackets();
/// Levi-Civita symbol on {1,2,3}.
int levi_civita(int i, int j, int k);

}  // namespace reference

}  // namespace ccr
