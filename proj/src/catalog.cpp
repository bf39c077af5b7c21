#include "ccr/catalog.hpp"

#include <set>
#include <stdexcept>
#include <utility>

namespace ccr {

std::string_view to_string(Variant v) { return v == Variant::canonical ? "canonical" : "as-printed"; }

bool is_symbolic(const Element& e) { return std::holds_alternative<OperatorExpr>(e); }

std::size_t element_dimension(const Element& e) {
  if (const auto* op = std::get_if<OperatorExpr>(&e)) return static_cast<std::size_t>(op->modes());
  return std::get<ExactMatrix>(e).n();
}

Element element_commutator(const Element& a, const Element& b) {
  if (is_symbolic(a) != is_symbolic(b)) throw std::invalid_argument("commutator of operator and matrix");
  if (is_symbolic(a)) return commutator(std::get<OperatorExpr>(a), std::get<OperatorExpr>(b));
  return commutator(std::get<ExactMatrix>(a), std::get<ExactMatrix>(b));
}

Element element_scale(const Element& e, const ExactScalar& s) {
  return std::visit([&](const auto& x) -> Element { return x * s; }, e);
}

Element element_add(const Element& a, const Element& b) {
  if (is_symbolic(a) != is_symbolic(b)) throw std::invalid_argument("sum of operator and matrix");
  if (is_symbolic(a)) return std::get<OperatorExpr>(a) + std::get<OperatorExpr>(b);
  return std::get<ExactMatrix>(a) + std::get<ExactMatrix>(b);
}

bool element_is_zero(const Element& e) {
  return std::visit([](const auto& x) { return x.is_zero(); }, e);
}

std::string element_str(const Element& e) {
  return std::visit([](const auto& x) { return x.str(); }, e);
}

GeneratorFamily::GeneratorFamily(std::string name, std::string representation, std::string provenance,
                                 Variant variant, std::vector<std::string> labels, std::vector<Element> elements,
                                 std::optional<ExactMatrix> metric, std::string note)
    : name_(std::move(name)),
      representation_(std::move(representation)),
      provenance_(std::move(provenance)),
      variant_(variant),
      labels_(std::move(labels)),
      elements_(std::move(elements)),
      metric_(std::move(metric)),
      note_(std::move(note)) {
  if (labels_.empty() || labels_.size() != elements_.size()) {
    throw std::invalid_argument("GeneratorFamily " + name_ + ": labels and elements must match and be non-empty");
  }
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second) throw std::invalid_argument("GeneratorFamily " + name_ + ": duplicate label " + l);
  }
  const bool sym = is_symbolic(elements_.front());
  const std::size_t dim = element_dimension(elements_.front());
  for (const auto& e : elements_) {
    if (is_symbolic(e) != sym || element_dimension(e) != dim) {
      throw std::invalid_argument("GeneratorFamily " + name_ + ": elements differ in kind or dimension");
    }
  }
  if (metric_ && (sym || metric_->n() != dim)) {
    throw std::invalid_argument("GeneratorFamily " + name_ + ": metric does not fit the representation");
  }
}

std::size_t GeneratorFamily::index_of(std::string_view label) const {
  for (std::size_t k = 0; k < labels_.size(); ++k) {
    if (labels_[k] == label) return k;
  }
  throw std::out_of_range("family " + name_ + " has no generator '" + std::string(label) + "'");
}

namespace {

const ExactScalar kI = ExactScalar::i();
const ExactScalar kHalf = ExactScalar::fraction(1, 2);

ExactMatrix sigma1() { return ExactMatrix::from_rows({{0, 1}, {1, 0}}); }
ExactMatrix sigma2() { return ExactMatrix::from_rows({{0, -kI}, {kI, 0}}); }
ExactMatrix sigma3() { return ExactMatrix::from_rows({{1, 0}, {0, -1}}); }
ExactMatrix eye2() { return ExactMatrix::identity(2); }

// 2x2 block pattern (x) 2x2 matrix, matching the block notation for 4x4 phase-space generators.
ExactMatrix blocks(long a, long b, long c, long d, const ExactMatrix& s) {
  return kron(ExactMatrix::from_rows({{a, b}, {c, d}}), s);
}

// Symmetric-or-antisymmetric pair of entries at 1-based positions.
ExactMatrix pair(std::size_t n, std::size_t r, std::size_t c, const ExactScalar& upper, const ExactScalar& lower) {
  ExactMatrix m(n);
  m(r - 1, c - 1) = upper;
  m(c - 1, r - 1) = lower;
  return m;
}

std::vector<Element> parse_all(std::initializer_list<const char*> texts, int modes) {
  std::vector<Element> out;
  for (const char* t : texts) out.emplace_back(parse_expr(t, modes));
  return out;
}

}  // namespace

GeneratorFamily sp2_oscillator(Sp2Convention convention) {
  const std::vector<std::string> labels{"J2", "K1", "K3"};
  switch (convention) {
    case Sp2Convention::text:
      return {"sp2-oscillator-text",
              "single-mode oscillator",
              "single-mode quadratic forms read off the 2x2 operator array",
              Variant::as_printed,
              labels,
              parse_all({"(1/2)*(a1*ad1 + ad1*a1)", "(1/2)*(ad1*ad1 + a1*a1)", "(i/2)*(ad1*ad1 - a1*a1)"}, 1)};
    case Sp2Convention::table:
      return {"sp2-oscillator-table",
              "single-mode oscillator",
              "single-mode quadratic forms in the three-representation summary table",
              Variant::as_printed,
              labels,
              parse_all({"(1/2)*(a1*ad1 + ad1*a1)", "(1/(2*i))*(ad1*ad1 + a1*a1)", "(1/2)*(ad1*ad1 - a1*a1)"}, 1)};
    case Sp2Convention::canonical:
      break;
  }
  return {"sp2-oscillator",
          "single-mode oscillator",
          "single-mode quadratic forms, normalized to the Sp(2) brackets",
          Variant::canonical,
          labels,
          parse_all({"(1/4)*(a1*ad1 + ad1*a1)", "(1/4)*(ad1*ad1 + a1*a1)", "(i/4)*(ad1*ad1 - a1*a1)"}, 1),
          std::nullopt,
          "published text forms scaled by 1/2"};
}

GeneratorFamily sp2_pauli() {
  return {"sp2-pauli",
          "2x2 phase space",
          "Pauli-matrix generators of phase-space rotations and squeezes",
          Variant::canonical,
          {"J2", "K1", "K3"},
          {sigma2() * kHalf, sigma1() * (kI * kHalf), sigma3() * (kI * kHalf)}};
}

GeneratorFamily sp2_minkowski4(Variant variant) {
  const ExactScalar lower = variant == Variant::canonical ? -kI : kI;
  return {variant == Variant::canonical ? "sp2-minkowski4" : "sp2-minkowski4-printed",
          "4x4 Minkowski (x, y, z, t)",
          "Lorentz generators on (x, z, t) with null y row and column",
          variant,
          {"J2", "K1", "K3"},
          {pair(4, 1, 3, kI, lower), pair(4, 1, 4, kI, kI), pair(4, 3, 4, kI, kI)},
          std::nullopt,
          variant == Variant::canonical ? "J2 entry (3,1) is -i; the published matrix has +i" : ""};
}

GeneratorFamily two_mode_oscillator(Variant variant) {
  const char* k1 = "-(1/4)*(ad1*ad1 + a1*a1 - ad2*ad2 - a2*a2)";
  const char* k2 = "(i/4)*(ad1*ad1 - a1*a1 + ad2*ad2 - a2*a2)";
  const char* k3 = "(1/2)*(ad1*ad2 + a1*a2)";
  std::vector<Element> elements = parse_all({"(1/2)*(ad1*a2 + ad2*a1)", "(1/(2*i))*(ad1*a2 - ad2*a1)",
                                             "(1/2)*(ad1*a1 - ad2*a2)", "(1/2)*(ad1*a1 + a2*ad2)", k1, k2, k3,
                                             "-(i/4)*(ad1*ad1 - a1*a1 - ad2*ad2 + a2*a2)",
                                             "-(1/4)*(ad1*ad1 + a1*a1 + ad2*ad2 + a2*a2)",
                                             "(i/2)*(ad1*ad2 - a1*a2)"},
                                            2);
  std::string note;
  if (variant == Variant::canonical) {
    for (std::size_t k = 4; k < 7; ++k) elements[k] = element_scale(elements[k], -1);
    note = "K1, K2, K3 carry the opposite sign of the published forms";
  }
  return {variant == Variant::canonical ? "two-mode-oscillator" : "two-mode-oscillator-printed",
          "two-mode oscillator",
          "four rotation-like and six squeeze-like two-oscillator quadratic forms",
          variant,
          {"J1", "J2", "J3", "S0", "K1", "K2", "K3", "Q1", "Q2", "Q3"},
          std::move(elements),
          std::nullopt,
          note};
}

GeneratorFamily sp4_matrices(Variant variant) {
  const ExactScalar h = kHalf;
  const ExactScalar ih = kI * kHalf;
  ExactMatrix s0 = blocks(1, 0, 0, 1, sigma2()) * h;
  ExactMatrix q3 = variant == Variant::canonical ? blocks(0, 1, 1, 0, sigma3()) * ih : s0;
  return {variant == Variant::canonical ? "sp4" : "sp4-table",
          "4x4 phase space (x1, p1, x2, p2)",
          variant == Variant::canonical ? "block-form Sp(4) generators on two canonical pairs"
                                        : "phase-space column of the two-oscillator summary table",
          variant,
          {"J1", "J2", "J3", "S0", "K1", "K2", "K3", "Q1", "Q2", "Q3"},
          {blocks(0, 1, 1, 0, sigma2()) * (-h), blocks(0, -1, 1, 0, eye2()) * ih, blocks(-1, 0, 0, 1, sigma2()) * h,
           s0, blocks(1, 0, 0, -1, sigma1()) * ih, blocks(1, 0, 0, 1, sigma3()) * ih,
           blocks(0, 1, 1, 0, sigma1()) * (-ih), blocks(1, 0, 0, -1, sigma3()) * (-ih),
           blocks(1, 0, 0, 1, sigma1()) * ih, q3},
          symplectic_form(),
          variant == Variant::canonical ? "" : "Q3 repeats the S0 matrix"};
}

GeneratorFamily o32_matrices() {
  return {"o32",
          "5x5 (x, y, z, t, s)",
          "O(3,2) generators: rotations, boosts along t, boosts along s, and the t-s rotation",
          Variant::canonical,
          {"J1", "J2", "J3", "S0", "K1", "K2", "K3", "Q1", "Q2", "Q3"},
          {pair(5, 2, 3, -kI, kI), pair(5, 1, 3, kI, -kI), pair(5, 1, 2, -kI, kI), pair(5, 4, 5, -kI, kI),
           pair(5, 1, 4, kI, kI), pair(5, 2, 4, kI, kI), pair(5, 3, 4, kI, kI), pair(5, 1, 5, kI, kI),
           pair(5, 2, 5, kI, kI), pair(5, 3, 5, kI, kI)},
          o32_metric()};
}

GeneratorFamily translation_matrices() {
  return {"translations",
          "5x5 affine (x, y, z, t, 1)",
          "space-time translation generators acting on the affine fifth column",
          Variant::canonical,
          {"P1", "P2", "P3", "P0"},
          {ExactMatrix::unit(5, 0, 4, kI), ExactMatrix::unit(5, 1, 4, kI), ExactMatrix::unit(5, 2, 4, kI),
           ExactMatrix::unit(5, 3, 4, -kI)}};
}

GeneratorFamily restrict_family(const GeneratorFamily& family, std::span<const std::size_t> indices,
                                std::string name) {
  if (family.symbolic()) throw std::invalid_argument("restrict_family: family is symbolic");
  std::vector<Element> elements;
  for (const auto& e : family.elements()) elements.emplace_back(std::get<ExactMatrix>(e).principal_submatrix(indices));
  std::optional<ExactMatrix> metric;
  if (family.metric()) metric = family.metric()->principal_submatrix(indices);
  return {std::move(name), family.representation() + " (restricted)", family.provenance(), family.variant(),
          family.labels(), std::move(elements), std::move(metric), family.note()};
}

ExactMatrix symplectic_form() { return blocks(1, 0, 0, 1, sigma2() * kI); }

ExactMatrix o32_metric() {
  const std::vector<ExactScalar> d{1, 1, 1, -1, -1};
  return ExactMatrix::diagonal(d);
}

namespace {

OperatorMatrix operator_matrix(std::size_t n, std::initializer_list<const char*> texts, int modes) {
  OperatorMatrix m{n, {}};
  for (const char* t : texts) m.entries.push_back(parse_expr(t, modes));
  return m;
}

}  // namespace

OperatorMatrix single_mode_form_matrix() {
  return operator_matrix(2, {"(a1*ad1 + ad1*a1)/2", "a1*a1", "ad1*ad1", "(a1*ad1 + ad1*a1)/2"}, 1);
}

OperatorMatrix coupling_block() { return operator_matrix(2, {"ad1*a2", "a1*a2", "ad1*ad2", "a1*ad2"}, 2); }

OperatorMatrix two_mode_form_matrix() {
  return operator_matrix(4,
                         {"(a1*ad1 + ad1*a1)/2", "a1*a1", "ad1*a2", "a1*a2",          //
                          "ad1*ad1", "(a1*ad1 + ad1*a1)/2", "ad1*ad2", "a1*ad2",      //
                          "a1*ad2", "a1*a2", "(a2*ad2 + ad2*a2)/2", "a2*a2",          //
                          "ad1*ad2", "ad1*a2", "ad2*ad2", "(a2*ad2 + ad2*a2)/2"},
                         2);
}

}  // namespace ccr
