#pragma once

#include "ccr/exact_matrix.hpp"
#include "ccr/opalg.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ccr {

/// `as_printed` keeps the published coefficients verbatim, including ones that
/// break closure or disagree with the published brackets. `canonical` is the
/// closure-consistent form used by every verification gate.
enum class Variant { canonical, as_printed };

std::string_view to_string(Variant v);

/// A generator is either a symbolic oscillator expression or an exact matrix.
using Element = std::variant<OperatorExpr, ExactMatrix>;

bool is_symbolic(const Element& e);
/// Mode count for operators, matrix size for matrices.
std::size_t element_dimension(const Element& e);
Element element_commutator(const Element& a, const Element& b);
Element element_scale(const Element& e, const ExactScalar& s);
Element element_add(const Element& a, const Element& b);
bool element_is_zero(const Element& e);
std::string element_str(const Element& e);

/// Named, ordered generator basis in one representation.
class GeneratorFamily {
 public:
  GeneratorFamily(std::string name, std::string representation, std::string provenance, Variant variant,
                  std::vector<std::string> labels, std::vector<Element> elements,
                  std::optional<ExactMatrix> metric = std::nullopt, std::string note = {});

  const std::string& name() const { return name_; }
  const std::string& representation() const { return representation_; }
  /// Where the generators come from, in words.
  const std::string& provenance() const { return provenance_; }
  /// How the canonical form differs from the published one, if it does.
  const std::string& note() const { return note_; }
  Variant variant() const { return variant_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Element>& elements() const { return elements_; }
  const std::optional<ExactMatrix>& metric() const { return metric_; }

  std::size_t size() const { return labels_.size(); }
  bool symbolic() const { return is_symbolic(elements_.front()); }
  std::size_t dimension() const { return element_dimension(elements_.front()); }

  /// Throws std::out_of_range for unknown labels.
  std::size_t index_of(std::string_view label) const;
  const Element& at(std::string_view label) const { return elements_[index_of(label)]; }
  const OperatorExpr& op(std::string_view label) const { return std::get<OperatorExpr>(at(label)); }
  const ExactMatrix& matrix(std::string_view label) const { return std::get<ExactMatrix>(at(label)); }

 private:
  std::string name_;
  std::string representation_;
  std::string provenance_;
  Variant variant_;
  std::vector<std::string> labels_;
  std::vector<Element> elements_;
  std::optional<ExactMatrix> metric_;
  std::string note_;
};

/// Single-mode coefficient conventions: `text` and `table` are the two
/// published normalizations; `canonical` rescales `text` by 1/2, which is the
/// normalization that reproduces the Sp(2) brackets exactly.
enum class Sp2Convention { text, table, canonical };

/// {J2, K1, K3} as single-mode quadratic forms.
GeneratorFamily sp2_oscillator(Sp2Convention convention);
/// {sigma2/2, i sigma1/2, i sigma3/2}.
GeneratorFamily sp2_pauli();
/// 4x4 generators on (x, y, z, t). The published J2 is symmetric; the
/// canonical one is antisymmetric.
GeneratorFamily sp2_minkowski4(Variant variant);
/// {J1, J2, J3, S0, K1, K2, K3, Q1, Q2, Q3} over two modes. The canonical
/// variant flips the sign of every K_i.
GeneratorFamily two_mode_oscillator(Variant variant);
/// Ten 4x4 generators on (x1, p1, x2, p2); metric holds the symplectic form.
/// The as-printed variant is the summary table, which repeats S0 as Q3.
GeneratorFamily sp4_matrices(Variant variant);
/// Ten 5x5 generators on (x, y, z, t, s); metric diag(1, 1, 1, -1, -1).
GeneratorFamily o32_matrices();
/// {P1, P2, P3, P0}, 5x5 nilpotent translation generators.
GeneratorFamily translation_matrices();

/// Restricts every matrix generator to the principal submatrix on `indices`.
GeneratorFamily restrict_family(const GeneratorFamily& family, std::span<const std::size_t> indices,
                                std::string name);

/// The phase-space symplectic form J on (x1, p1, x2, p2).
ExactMatrix symplectic_form();
/// diag(1, 1, 1, -1, -1).
ExactMatrix o32_metric();

/// Small square matrix of operators (the quadratic-form arrays).
struct OperatorMatrix {
  std::size_t n = 0;
  std::vector<OperatorExpr> entries;

  const OperatorExpr& operator()(std::size_t r, std::size_t c) const { return entries[r * n + c]; }
};

/// The 2x2 array [[(aa^+ + a^+a)/2, aa], [a^+a^+, (aa^+ + a^+a)/2]].
OperatorMatrix single_mode_form_matrix();
/// The 2x2 coupling block [[a1^+ a2, a1 a2], [a1^+ a2^+, a1 a2^+]].
OperatorMatrix coupling_block();
/// The 4x4 two-mode array with the coupling block and its conjugate off-diagonal.
OperatorMatrix two_mode_form_matrix();

}  // namespace ccr
