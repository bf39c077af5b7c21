#include "ccr/verify.hpp"

#include "ccr/contract.hpp"
#include "ccr/focknum.hpp"
#include "ccr/liecore.hpp"
#include "ccr/phspace.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

namespace ccr {

void VerifyConfig::validate() const {
  if (guard < 0) throw std::invalid_argument("guard must be non-negative");
  if (fock_n < guard + 2) {
    throw std::invalid_argument("fock cutoff " + std::to_string(fock_n) + " must be at least guard + 2 = " +
                                std::to_string(guard + 2));
  }
  if (!(tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "PASS";
    case Status::fail:
      return "FAIL";
    case Status::warn:
      return "WARN";
    case Status::note:
      return "NOTE";
  }
  return "?";
}

namespace {

std::string_view to_string(VariantPolicy v) {
  switch (v) {
    case VariantPolicy::canonical:
      return "canonical";
    case VariantPolicy::as_printed:
      return "as-printed";
    case VariantPolicy::both:
      return "both";
  }
  return "?";
}

}  // namespace

std::string sci(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", value);
  return buf;
}

std::size_t Report::count(Status s) const {
  return static_cast<std::size_t>(std::count_if(checks_.begin(), checks_.end(), [s](const auto& c) { return c.status == s; }));
}

int Report::exit_code() const { return count(Status::fail) == 0 ? 0 : 1; }

std::string Report::text() const {
  std::ostringstream os;
  os << "verify: fock_n=" << config_.fock_n << " guard=" << config_.guard << " tolerance=" << sci(config_.tolerance)
     << " variant=" << to_string(config_.variant) << '\n';
  os << "flows use exp(-i t G), so every catalog generator yields a real one-parameter group\n";
  std::string suite;
  for (const auto& c : checks_) {
    if (c.suite != suite) {
      suite = c.suite;
      os << '\n' << '[' << suite << "]\n";
    }
    os << "  " << to_string(c.status) << "  " << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << '\n';
  }
  os << "\nsummary: " << count(Status::pass) << " pass, " << count(Status::fail) << " fail, " << count(Status::warn)
     << " warn, " << count(Status::note) << " note\n";
  return os.str();
}

nlohmann::json Report::json() const {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : checks_) {
    checks.push_back({{"suite", c.suite}, {"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
  }
  return {{"schema", 1},
          {"config",
           {{"fock_n", config_.fock_n},
            {"guard", config_.guard},
            {"tolerance", config_.tolerance},
            {"variant", to_string(config_.variant)}}},
          {"checks", checks},
          {"summary",
           {{"pass", count(Status::pass)},
            {"fail", count(Status::fail)},
            {"warn", count(Status::warn)},
            {"note", count(Status::note)}}},
          {"exit_code", exit_code()}};
}

std::string Report::render() const { return config_.format == Format::json ? json().dump(2) + "\n" : text(); }

std::vector<std::string> family_names() {
  return {"sp2-oscillator",      "sp2-oscillator-text", "sp2-oscillator-table",        "sp2-pauli", "sp2-minkowski4",
          "sp2-minkowski4-printed", "two-mode-oscillator", "two-mode-oscillator-printed", "sp4",       "sp4-table",
          "o32",                 "translations",        "poincare"};
}

GeneratorFamily family_by_name(std::string_view name) {
  if (name == "sp2-oscillator") return sp2_oscillator(Sp2Convention::canonical);
  if (name == "sp2-oscillator-text") return sp2_oscillator(Sp2Convention::text);
  if (name == "sp2-oscillator-table") return sp2_oscillator(Sp2Convention::table);
  if (name == "sp2-pauli") return sp2_pauli();
  if (name == "sp2-minkowski4") return sp2_minkowski4(Variant::canonical);
  if (name == "sp2-minkowski4-printed") return sp2_minkowski4(Variant::as_printed);
  if (name == "two-mode-oscillator") return two_mode_oscillator(Variant::canonical);
  if (name == "two-mode-oscillator-printed") return two_mode_oscillator(Variant::as_printed);
  if (name == "sp4") return sp4_matrices(Variant::canonical);
  if (name == "sp4-table") return sp4_matrices(Variant::as_printed);
  if (name == "o32") return o32_matrices();
  if (name == "translations") return translation_matrices();
  if (name == "poincare") return contract_o32();
  throw std::out_of_range("unknown family '" + std::string(name) + "'");
}

namespace {

class Suite {
 public:
  Suite(Report& report, std::string name) : report_(report), name_(std::move(name)) {}

  bool canonical() const { return report_.config().variant != VariantPolicy::as_printed; }
  bool printed() const { return report_.config().variant != VariantPolicy::canonical; }
  double bound(double stated) const { return std::min(stated, report_.config().tolerance); }

  void check(std::string name, bool ok, std::string detail = {}) {
    report_.add({name_, std::move(name), ok ? Status::pass : Status::fail, std::move(detail)});
  }
  void finding(std::string name, bool ok, std::string detail = {}) {
    report_.add({name_, std::move(name), ok ? Status::pass : Status::warn, std::move(detail)});
  }
  void note(std::string name, std::string detail) {
    report_.add({name_, std::move(name), Status::note, std::move(detail)});
  }
  /// check() that also turns an exception into a failure.
  void guarded(const std::string& name, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      check(name, false, std::string("exception: ") + e.what());
    }
  }

  const VerifyConfig& config() const { return report_.config(); }

 private:
  Report& report_;
  std::string name_;
};

std::string within(double measured, double bound) { return "max deviation " + sci(measured) + " (bound " + sci(bound) + ")"; }

OperatorExpr kronecker(int modes, bool equal) { return OperatorExpr::scalar(modes, equal ? 1 : 0); }

// ---------------------------------------------------------------------------

void opalg_suite(Report& report) {
  Suite s(report, "opalg");
  if (!s.canonical()) return;

  s.guarded("position-momentum", [&] {
    const OperatorExpr c = parse_expr("x1*p1 - p1*x1", 1);
    s.check("position-momentum", c == OperatorExpr::scalar(1, ExactScalar::i()), "[x1, p1] = " + c.str());
  });

  bool ladder_ok = true, xp_ok = true;
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) {
      ladder_ok = ladder_ok && commutator(OperatorExpr::annihilation(2, i), OperatorExpr::creation(2, j)) == kronecker(2, i == j);
      xp_ok = xp_ok && commutator(OperatorExpr::position(2, i), OperatorExpr::momentum(2, j)) ==
                           kronecker(2, i == j) * ExactScalar::i();
    }
  s.check("ladder-ccr", ladder_ok, "[a_i, ad_j] = delta_ij for i, j in {1, 2}");
  s.check("two-mode-position-momentum", xp_ok, "[x_i, p_j] = i delta_ij for i, j in {1, 2}");

  const LadderSymbol a = LadderSymbol::annihilation(1), ad = LadderSymbol::creation(1);
  const OperatorExpr wick = normal_order(RawProduct{1, {a, a, ad, ad}}, 1);
  s.check("normal-order", wick == parse_expr("ad1^2*a1^2 + 4*ad1*a1 + 2", 1), "a1 a1 ad1 ad1 = " + wick.str());

  for (const auto& family : {sp2_oscillator(Sp2Convention::canonical), two_mode_oscillator(Variant::canonical)}) {
    std::vector<std::string> bad;
    for (std::size_t k = 0; k < family.size(); ++k) {
      const auto& g = std::get<OperatorExpr>(family.elements()[k]);
      if (!(adjoint(g) == g)) bad.push_back(family.labels()[k]);
    }
    s.check("self-adjoint " + family.name(), bad.empty(),
            bad.empty() ? std::to_string(family.size()) + " generators" : "not self-adjoint: " + bad.front());
  }
}

// ---------------------------------------------------------------------------

bool all_of(const GeneratorFamily& f, const std::function<bool(const ExactMatrix&)>& pred) {
  return std::all_of(f.elements().begin(), f.elements().end(),
                     [&](const Element& e) { return pred(std::get<ExactMatrix>(e)); });
}

bool single_entry(const ExactMatrix& m, std::size_t r, std::size_t c, const ExactScalar& v) {
  return m == ExactMatrix::unit(m.n(), r, c, v);
}

bool operator_matrix_hermitian(const OperatorMatrix& m) {
  for (std::size_t r = 0; r < m.n; ++r)
    for (std::size_t c = 0; c < m.n; ++c) {
      if (!(adjoint(m(r, c)) == m(c, r))) return false;
    }
  return true;
}

// Ratio s with b == s * a, if one exists.
std::optional<ExactScalar> scalar_ratio(const OperatorExpr& a, const OperatorExpr& b) {
  if (a.is_zero()) return std::nullopt;
  const auto& [key, coeff] = *a.terms().begin();
  const ExactScalar s = b.coefficient(key) / coeff;
  if (!(a * s == b)) return std::nullopt;
  return s;
}

void catalog_suite(Report& report) {
  Suite s(report, "catalog");
  const ExactScalar i = ExactScalar::i();
  const ExactScalar half = ExactScalar::fraction(1, 2);

  if (s.canonical()) {
    const GeneratorFamily pauli = sp2_pauli();
    s.check("sp2-pauli entries", pauli.matrix("J2")(0, 1) == -i * half &&
                                     all_of(pauli, [](const ExactMatrix& m) { return m.trace().is_zero(); }),
            "J2(1,2) = " + pauli.matrix("J2")(0, 1).str() + ", all traceless");

    const GeneratorFamily mink = sp2_minkowski4(Variant::canonical);
    const bool null_y = all_of(mink, [](const ExactMatrix& m) {
      for (std::size_t k = 0; k < 4; ++k) {
        if (!m(1, k).is_zero() || !m(k, 1).is_zero()) return false;
      }
      return true;
    });
    const ExactMatrix& k1 = mink.matrix("K1");
    s.check("sp2-minkowski4 entries",
            null_y && k1 == ExactMatrix::unit(4, 0, 3, i) + ExactMatrix::unit(4, 3, 0, i) &&
                mink.matrix("J2").transpose() == -mink.matrix("J2"),
            "null y row and column, K1 = i at (1,4) and (4,1), J2 antisymmetric");

    const GeneratorFamily osc = two_mode_oscillator(Variant::canonical);
    s.check("two-mode-oscillator entries",
            osc.op("S0") == parse_expr("(1/2)*(ad1*a1 + a2*ad2)", 2) &&
                osc.op("Q3") == parse_expr("(i/2)*(ad1*ad2 - a1*a2)", 2),
            "S0 = " + osc.op("S0").str() + ", Q3 = " + osc.op("Q3").str());

    const GeneratorFamily sp4 = sp4_matrices(Variant::canonical);
    const ExactMatrix j = symplectic_form();
    const ExactMatrix sigma3 = ExactMatrix::from_rows({{1, 0}, {0, -1}});
    s.check("sp4 entries", sp4.matrix("K2") == kron(ExactMatrix::identity(2), sigma3) * (i * half),
            "K2 = (i/2) diag(sigma3, sigma3)");
    s.check("sp4 infinitesimal symplectic",
            all_of(sp4, [&](const ExactMatrix& g) { return (g * j + j * g.transpose()).is_zero(); }),
            "G J + J G^T = 0 for all ten");

    const GeneratorFamily o32 = o32_matrices();
    const ExactMatrix eta = o32_metric();
    s.check("o32 entries",
            o32.matrix("Q1") == ExactMatrix::unit(5, 0, 4, i) + ExactMatrix::unit(5, 4, 0, i) &&
                o32.matrix("S0") == ExactMatrix::unit(5, 3, 4, -i) + ExactMatrix::unit(5, 4, 3, i),
            "Q1 = i at (1,5) and (5,1), S0 = -i at (4,5) and i at (5,4)");
    s.check("o32 infinitesimal pseudo-orthogonal",
            all_of(o32, [&](const ExactMatrix& g) { return (g * eta + eta * g.transpose()).is_zero(); }),
            "G eta + eta G^T = 0 for all ten");

    const GeneratorFamily p = translation_matrices();
    s.check("translation entries",
            single_entry(p.matrix("P1"), 0, 4, i) && single_entry(p.matrix("P0"), 3, 4, -i) &&
                all_of(p, [](const ExactMatrix& g) { return (g * g).is_zero(); }),
            "P1 = i at (1,5), P0 = -i at (4,5), P^2 = 0");

    const OperatorMatrix two = two_mode_form_matrix();
    const OperatorMatrix block = coupling_block();
    bool block_ok = true;
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 2; ++c) block_ok = block_ok && two(r, c + 2) == block(r, c);
    s.check("quadratic-form arrays hermitian",
            operator_matrix_hermitian(single_mode_form_matrix()) && operator_matrix_hermitian(two) && block_ok,
            "both arrays equal their adjoint entrywise; the upper-right block is the coupling block");
  }

  if (s.printed()) {
    const GeneratorFamily text = sp2_oscillator(Sp2Convention::text);
    const GeneratorFamily table = sp2_oscillator(Sp2Convention::table);
    const auto r1 = scalar_ratio(text.op("K1"), table.op("K1"));
    const auto r3 = scalar_ratio(text.op("K3"), table.op("K3"));
    const bool ok = text.op("J2") == table.op("J2") && r1 && r3;
    s.finding("sp2 text vs table forms", ok,
              ok ? "J2 equal; table K1 = (" + r1->str() + ") text K1, table K3 = (" + r3->str() + ") text K3"
                 : "forms differ by more than scalar factors");

    const GeneratorFamily mink = sp2_minkowski4(Variant::as_printed);
    const ExactMatrix& j2 = mink.matrix("J2");
    s.finding("sp2-minkowski4-printed J2 antisymmetric", j2.transpose() == -j2,
              "J2 has " + j2(0, 2).str() + " at (1,3) and " + j2(2, 0).str() + " at (3,1)");

    const GeneratorFamily sp4t = sp4_matrices(Variant::as_printed);
    s.finding("sp4-table distinct generators", !(sp4t.matrix("Q3") == sp4t.matrix("S0")),
              "Q3 and S0 are the same matrix (1/2) diag(sigma2, sigma2)");
  }
}

// ---------------------------------------------------------------------------

std::string closure_detail(const GeneratorFamily& f, const ClosureReport& r) {
  const std::size_t pairs = f.size() * (f.size() - 1) / 2;
  if (r.closed) {
    return std::to_string(f.size()) + "/" + std::to_string(f.size()) + " generators independent, " +
           std::to_string(pairs) + "/" + std::to_string(pairs) + " brackets in span";
  }
  std::string out;
  if (!r.dependent.empty()) {
    out = "dependent:";
    for (const auto& l : r.dependent) out += " " + l;
  }
  if (!r.failures.empty()) {
    if (!out.empty()) out += "; ";
    out += std::to_string(r.failures.size()) + (r.failures.size() == 1 ? " bracket leaves" : " brackets leave") +
           " the span, first [" + r.failures.front().a + ", " + r.failures.front().b + "]";
  }
  return out;
}

std::string claims_detail(const std::vector<ClaimResult>& results) {
  const auto bad = std::count_if(results.begin(), results.end(), [](const auto& r) { return !r.holds; });
  std::string out = std::to_string(results.size() - static_cast<std::size_t>(bad)) + "/" +
                    std::to_string(results.size()) + " published brackets reproduced";
  for (const auto& r : results) {
    if (!r.holds) {
      out += "; first differing: " + r.actual + " (" + r.claim.source + ")";
      break;
    }
  }
  return out;
}

bool all_hold(const std::vector<ClaimResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.holds; });
}

void liecore_suite(Report& report) {
  Suite s(report, "liecore");

  if (s.canonical()) {
    std::map<std::string, StructureConstants> tables;
    const std::vector<GeneratorFamily> families{sp2_oscillator(Sp2Convention::canonical),
                                                sp2_pauli(),
                                                sp2_minkowski4(Variant::canonical),
                                                two_mode_oscillator(Variant::canonical),
                                                sp4_matrices(Variant::canonical),
                                                o32_matrices(),
                                                translation_matrices()};
    for (const auto& f : families) {
      const ClosureReport r = structure_constants(f);
      s.check("closure " + f.name(), r.closed, closure_detail(f, r));
      if (!r.closed) continue;
      s.check("jacobi " + f.name(), r.table->is_antisymmetric() && jacobi_check(*r.table), "antisymmetric, Jacobi exact");
      tables.emplace(f.name(), *r.table);
    }
    auto claims = [&](const std::string& name, const std::vector<BracketClaim>& published) {
      auto it = tables.find(name);
      if (it == tables.end()) return;
      const auto results = check_claims(it->second, published);
      s.check("brackets " + name, all_hold(results), claims_detail(results));
    };
    for (const char* n : {"sp2-oscillator", "sp2-pauli", "sp2-minkowski4"}) claims(n, reference::sp2_brackets());
    for (const char* n : {"two-mode-oscillator", "sp4", "o32"}) claims(n, reference::ten_generator_brackets());
    if (auto it = tables.find("translations"); it != tables.end()) {
      s.check("abelian translations", it->second.nonzero().empty(), "every bracket vanishes");
    }

    auto same = [&](const std::string& lhs, const std::string& rhs) {
      if (!tables.contains(lhs) || !tables.contains(rhs)) return;
      const Comparison c = compare(tables.at(lhs), tables.at(rhs), identity_correspondence(tables.at(lhs).labels()));
      s.check("isomorphic " + lhs + " ~ " + rhs, c.match,
              c.match ? "identical structure constants under the identity label map"
                      : std::to_string(c.mismatches.size()) + " mismatched entries");
    };
    same("sp2-oscillator", "sp2-pauli");
    same("sp2-oscillator", "sp2-minkowski4");
    same("sp2-pauli", "sp2-minkowski4");
    same("two-mode-oscillator", "sp4");
    same("two-mode-oscillator", "o32");
    same("sp4", "o32");

    s.guarded("minkowski restricted to (x, z, t)", [&] {
      const std::vector<std::size_t> xzt{0, 2, 3};
      const GeneratorFamily restricted = restrict_family(sp2_minkowski4(Variant::canonical), xzt, "sp2-minkowski3");
      const ClosureReport r = structure_constants(restricted);
      const bool ok = r.closed && tables.contains("sp2-pauli") &&
                      compare(*r.table, tables.at("sp2-pauli"), identity_correspondence(r.table->labels())).match;
      s.check("minkowski restricted to (x, z, t)", ok, "3x3 restriction matches sp2-pauli");
    });

    if (tables.contains("two-mode-oscillator")) {
      const StructureConstants& t = tables.at("two-mode-oscillator");
      auto swap = identity_correspondence(t.labels());
      swap["S0"] = "Q3";
      swap["Q3"] = "S0";
      const Comparison c = compare(t, t, swap);
      s.check("S0/Q3 swap detected", !c.match, std::to_string(c.mismatches.size()) + " entries differ under the swap");
    }

    const ExpansionResult id = expand_in_basis(ExactMatrix::identity(2), sp2_pauli());
    s.check("identity outside sp2-pauli span", std::holds_alternative<NotInSpan>(id), "residual reported");

    const GeneratorFamily open{"number-and-ladders", "single-mode oscillator", "counterexample", Variant::canonical,
                               {"N", "ad", "a"},
                               {parse_expr("ad1*a1", 1), parse_expr("ad1", 1), parse_expr("a1", 1)}};
    const ClosureReport r = structure_constants(open);
    s.check("non-closure reported", !r.closed && r.failures.size() == 1,
            closure_detail(open, r) + ": [ad, a] = -1 is not in the span");
  }

  if (s.printed()) {
    for (const auto& f : {sp2_oscillator(Sp2Convention::text), sp2_oscillator(Sp2Convention::table),
                          sp2_minkowski4(Variant::as_printed)}) {
      const ClosureReport r = structure_constants(f);
      if (!r.closed) {
        s.finding("brackets " + f.name(), false, "not closed: " + closure_detail(f, r));
        continue;
      }
      const auto results = check_claims(*r.table, reference::sp2_brackets());
      s.finding("brackets " + f.name(), all_hold(results), claims_detail(results));
    }
    const GeneratorFamily printed = two_mode_oscillator(Variant::as_printed);
    const ClosureReport r = structure_constants(printed);
    if (r.closed) {
      const auto results = check_claims(*r.table, reference::ten_generator_brackets());
      s.finding("brackets " + printed.name(), all_hold(results), claims_detail(results));
    } else {
      s.finding("brackets " + printed.name(), false, "not closed: " + closure_detail(printed, r));
    }
    const GeneratorFamily table = sp4_matrices(Variant::as_printed);
    const ClosureReport rt = structure_constants(table);
    s.finding("closure " + table.name(), rt.closed, rt.closed ? closure_detail(table, rt) : "not closed: " + closure_detail(table, rt));
  }
}

// ---------------------------------------------------------------------------

double max_deviation(const CMatrix& numeric, const ExactMatrix& exact) {
  return max_abs_diff(numeric, CMatrix::from_exact(exact));
}

void contract_suite(Report& report) {
  Suite s(report, "contract");
  if (!s.canonical()) return;

  const EpsMatrix c = squeeze_matrix(5);
  s.check("squeeze determinant", determinant(c) == Laurent::monomial(-3), "det C = " + determinant(c).str());
  s.check("squeeze inverse", (c * squeeze_inverse(5)).is_identity(), "C C^-1 = I at every order");

  const GeneratorFamily o32 = o32_matrices();
  const GeneratorFamily p = translation_matrices();
  const std::vector<std::pair<std::string, std::string>> contracted{{"Q1", "P1"}, {"Q2", "P2"}, {"Q3", "P3"}, {"S0", "P0"}};

  bool limits_ok = true, inverse_ok = true, power1_diverges = true, power3_zero = true;
  for (const auto& [q, target] : contracted) {
    const ExactMatrix& g = o32.matrix(q);
    const LimitResult lim = limit(conjugate(g, 2));
    limits_ok = limits_ok && std::holds_alternative<ExactMatrix>(lim) && std::get<ExactMatrix>(lim) == p.matrix(target);
    const LimitResult back = contract_by_inverse_squeeze(g);
    inverse_ok = inverse_ok && std::holds_alternative<ExactMatrix>(back) && std::get<ExactMatrix>(back) == p.matrix(target);
    power1_diverges = power1_diverges && std::holds_alternative<Divergent>(limit(conjugate(g, 1)));
    const LimitResult three = limit(conjugate(g, 3));
    power3_zero = power3_zero && std::holds_alternative<ExactMatrix>(three) && std::get<ExactMatrix>(three).is_zero();
  }
  s.check("eps^2 limits", limits_ok, "Q1, Q2, Q3, S0 -> P1, P2, P3, P0 entry for entry");
  s.check("inverse-squeeze route", inverse_ok, "C^-1 (C G C^-1 without vanishing terms) C gives the same P");
  s.check("scale power uniqueness", power1_diverges && power3_zero, "power 1 diverges, power 3 vanishes");

  bool fixed = true;
  for (const char* l : {"J1", "J2", "J3", "K1", "K2", "K3"}) {
    fixed = fixed && conjugate(o32.matrix(l), 0) == EpsMatrix::from_exact(o32.matrix(l));
  }
  s.check("rotation and boost fixed points", fixed, "C J C^-1 = J and C K C^-1 = K exactly");

  double err3 = 0.0, err2 = 0.0;
  for (const auto& [q, target] : contracted) {
    err3 = std::max(err3, max_deviation(numeric_conjugate(o32.matrix(q), 2, 1e-3), p.matrix(target)));
    err2 = std::max(err2, max_deviation(numeric_conjugate(o32.matrix(q), 2, 1e-2), p.matrix(target)));
  }
  const double b = s.bound(1e-5);
  s.check("numeric path at eps = 1e-3", err3 <= b && err3 <= err2,
          within(err3, b) + ", eps = 1e-2 gives " + sci(err2));

  s.guarded("poincare closure", [&] {
    const GeneratorFamily poincare = contract_o32();
    bool p_ok = true;
    for (const auto& [q, target] : contracted) p_ok = p_ok && poincare.matrix(target) == p.matrix(target);
    s.check("translation block", p_ok, "contracted P equal the translation generators");

    const ClosureReport r = structure_constants(poincare);
    s.check("poincare closure", r.closed && jacobi_check(*r.table), closure_detail(poincare, r));
    if (!r.closed) return;
    std::vector<BracketClaim> exact, boost_translation;
    for (auto& claim : reference::poincare_published_brackets()) {
      (claim.a.front() == 'P' && claim.b.front() == 'K' ? boost_translation : exact).push_back(claim);
    }
    const auto results = check_claims(*r.table, exact);
    s.check("poincare brackets", all_hold(results), claims_detail(results));

    const auto bt = check_claims(*r.table, boost_translation);
    std::string computed;
    for (const auto& res : bt) computed += (computed.empty() ? "" : ", ") + res.actual;
    const StructureConstants& t = *r.table;
    const bool shape = t.get("P1", "K1", "P0") == ExactScalar::i() && t.get("K1", "P0", "P1") == -ExactScalar::i();
    s.check("boost-translation bracket computed", shape, computed + "; [K1, P0] = -i P1");
    if (!all_hold(bt)) {
      s.note("boost-translation bracket", "published form i delta_0i P0 vanishes for spatial i; computed " + computed);
    }

    std::map<std::string, int> powers;
    for (const auto& l : poincare.labels()) powers[l] = default_scale_power(l);
    const GeneratorFamily again = contract_family(poincare, powers, {}, "poincare");
    s.check("contraction idempotent", again.elements() == poincare.elements(), "re-contracting the output changes nothing");
  });
}

// ---------------------------------------------------------------------------

void focknum_suite(Report& report) {
  Suite s(report, "focknum");
  if (!s.canonical()) return;
  const VerifyConfig& cfg = s.config();

  const GeneratorFamily osc = two_mode_oscillator(Variant::canonical);
  const FockRealization fock(cfg.fock_n, 2);
  const auto pairs = protected_family_check(osc, fock, cfg.guard);
  const auto worst = std::max_element(pairs.begin(), pairs.end(),
                                      [](const auto& x, const auto& y) { return x.deviation < y.deviation; });
  const double b = s.bound(1e-12);
  s.check("protected commutators", worst->deviation <= b,
          std::to_string(pairs.size()) + " pairs at N = " + std::to_string(cfg.fock_n) + ", guard = " +
              std::to_string(cfg.guard) + ", " + within(worst->deviation, b) + " at [" + worst->a + ", " + worst->b + "]");

  bool hermitian = true;
  for (const auto& e : osc.elements()) {
    const CMatrix m = realize(std::get<OperatorExpr>(e), fock);
    hermitian = hermitian && m == m.adjoint();
  }
  s.check("hermitian realizations", hermitian, "realize(G) equals its conjugate transpose exactly");

  const CMatrix s0 = realize(osc.op("S0"), fock);
  double spectrum = 0.0;
  for (std::size_t st : protected_states(fock, cfg.guard)) {
    for (std::size_t r = 0; r < s0.rows(); ++r) {
      const double expected = r == st ? 0.5 * (fock.total_quanta(st) + 1) : 0.0;
      spectrum = std::max(spectrum, std::abs(s0(r, st) - Complex(expected, 0.0)));
    }
  }
  s.check("S0 spectrum", spectrum <= b, "(n1 + n2 + 1)/2 on protected states, " + within(spectrum, b));

  const FockRealization small(4, 1);
  const double edge = protected_commutator_check(OperatorExpr::annihilation(1, 1), OperatorExpr::creation(1, 1), small, 0);
  s.check("truncation edge", edge > 1.0, "guard 0 at N = 4 leaves deviation " + sci(edge) + " on the top state");
}

// ---------------------------------------------------------------------------

void phspace_suite(Report& report) {
  Suite s(report, "phspace");
  if (!s.canonical()) return;

  const GaussianState ground = GaussianState::ground();
  const double w0 = wigner_eval(ground, 0.0, 0.0);
  const double w1 = wigner_eval(ground, 1.0, 0.0);
  const double wb = s.bound(1e-12);
  s.check("ground-state wigner",
          std::abs(w0 - std::numbers::inv_pi) <= wb && std::abs(w1 - std::exp(-1.0) * std::numbers::inv_pi) <= wb,
          "W(0,0) = " + sci(w0) + ", W(1,0) = " + sci(w1));

  const auto xs = linspace(-8.0, 8.0, 321);
  const double h = xs[1] - xs[0];
  double integral = 0.0;
  for (const auto& sample : wigner_grid(ground, xs, xs)) integral += sample.w * h * h;
  const double qb = s.bound(1e-6);
  s.check("wigner normalization", std::abs(integral - 1.0) <= qb, "grid integral " + within(std::abs(integral - 1.0), qb));

  const double fb = s.bound(1e-10);
  const std::vector<double> ts{-1.0, -0.5, 0.1, 0.5, 1.0};
  double symp = 0.0;
  const GeneratorFamily sp4 = sp4_matrices(Variant::canonical);
  for (const auto& e : sp4.elements()) {
    for (double t : ts) symp = std::max(symp, symplectic_residual(flow(std::get<ExactMatrix>(e), t)));
  }
  s.check("sp4 flows symplectic", symp <= fb, "10 generators x 5 parameters, " + within(symp, fb));

  double pseudo = 0.0;
  const GeneratorFamily o32 = o32_matrices();
  for (const auto& e : o32.elements()) {
    for (double t : ts) pseudo = std::max(pseudo, o32_residual(flow(std::get<ExactMatrix>(e), t)));
  }
  s.check("o32 flows preserve metric", pseudo <= fb, "10 generators x 5 parameters, " + within(pseudo, fb));

  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> eta(-1.5, 1.5);
  double drift = 0.0;
  const double det0 = det(ground.covariance);
  for (int k = 0; k < 100; ++k) {
    const Mat2 m = multiply(multiply(rotation(angle(rng)), squeeze(eta(rng))), rotation(angle(rng)));
    drift = std::max(drift, std::abs(det(apply_sp2(ground, m).covariance) - det0));
  }
  const double db = s.bound(1e-12);
  s.check("covariance determinant", drift <= db, "100 unit-determinant maps, " + within(drift, db));

  double shell = 0.0;
  for (double m : {0.5, 1.0, 2.0}) {
    const FourMomentum rest{0.0, 0.0, 0.0, m};
    for (int axis = 1; axis <= 3; ++axis) {
      for (double y : {-2.0, -1.0, -0.25, 0.5, 1.5, 2.0}) {
        const FourMomentum boosted = boost_momentum(rest, axis, y);
        shell = std::max(shell, std::abs(mass_shell(boosted) + m * m));
        for (int raxis = 1; raxis <= 3; ++raxis) {
          for (double theta : {0.3, 1.7, 4.0}) {
            shell = std::max(shell, std::abs(mass_shell(rotate_momentum(boosted, raxis, theta)) + m * m));
          }
        }
      }
    }
  }
  s.check("mass shell", shell <= fb, "m in {0.5, 1, 2}, rapidity up to 2, rotations, " + within(shell, fb));

  s.guarded("translation action", [&] {
    const Affine5Vector v{{1.0, 2.0, 3.0, 4.0}};
    const Affine5Vector out = apply(translate(1.5, -2.0, 0.25, 3.0), v);
    const bool action = out.xyzt == std::array<double, 4>{2.5, 0.0, 3.25, 1.0};

    const GeneratorFamily poincare = contract_o32();
    const ExactScalar a = ExactScalar::fraction(3, 2), b2 = -2, c = ExactScalar::fraction(1, 4), d = 3;
    const ExactMatrix exponent =
        (poincare.matrix("P1") * a + poincare.matrix("P2") * b2 + poincare.matrix("P3") * c + poincare.matrix("P0") * d) *
        (-ExactScalar::i());
    ExactMatrix closed = ExactMatrix::identity(5);
    closed(0, 4) = a;
    closed(1, 4) = b2;
    closed(2, 4) = c;
    closed(3, 4) = -d;
    const bool series = exp_nilpotent(exponent) == closed && CMatrix::from_exact(closed) == translate(1.5, -2.0, 0.25, 3.0);
    s.check("translation action", action && series,
            "(x + a, y + b, z + c, t - d, 1) exactly; exp(-i(a P1 + b P2 + c P3 + d P0)) equals the closed form");
  });
}

}  // namespace

Report run_verify(const VerifyConfig& config) {
  config.validate();
  Report report(config);
  opalg_suite(report);
  catalog_suite(report);
  liecore_suite(report);
  contract_suite(report);
  focknum_suite(report);
  phspace_suite(report);
  return report;
}

}  // namespace ccr
