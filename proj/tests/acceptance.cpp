// Prints one PASS/FAIL line per acceptance criterion; exits 1 if any fails.

#include "ccr/contract.hpp"
#include "ccr/focknum.hpp"
#include "ccr/liecore.hpp"
#include "ccr/phspace.hpp"
#include "ccr/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

using namespace ccr;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0 && secs >= limit_seconds) {
    o.ok = false;
    o.detail += "; over time budget";
  }
  if (!o.ok) ++failures;
  std::printf("%s  %2d %s: %s (%.3f s)\n", o.ok ? "PASS" : "FAIL", id, title, o.detail.c_str(), secs);
}

std::string fmt(double v) { return sci(v); }

StructureConstants closed_table(const GeneratorFamily& f) {
  ClosureReport r = structure_constants(f);
  if (!r.closed) throw std::runtime_error(f.name() + " is not closed");
  return std::move(*r.table);
}

bool all_hold(const StructureConstants& t, const std::vector<BracketClaim>& claims) {
  for (const auto& r : check_claims(t, claims))
    if (!r.holds) return false;
  return true;
}

}  // namespace

int main() {
  criterion(1, "canonical commutation relations", 1.0, [] {
    const ExactScalar i = ExactScalar::i();
    bool ok = commutator(OperatorExpr::position(1, 1), OperatorExpr::momentum(1, 1)) == OperatorExpr::scalar(1, i);
    ok = ok && parse_expr("x1*p1 - p1*x1", 1) == OperatorExpr::scalar(1, i);
    const int modes = 3;
    for (int a = 1; a <= modes; ++a)
      for (int b = 1; b <= modes; ++b) {
        const OperatorExpr c = commutator(OperatorExpr::annihilation(modes, a), OperatorExpr::creation(modes, b));
        ok = ok && c == OperatorExpr::scalar(modes, a == b ? ExactScalar(1) : ExactScalar(0));
        ok = ok && commutator(OperatorExpr::annihilation(modes, a), OperatorExpr::annihilation(modes, b)).is_zero();
        ok = ok && commutator(OperatorExpr::position(modes, a), OperatorExpr::momentum(modes, b)) ==
                       OperatorExpr::scalar(modes, a == b ? i : ExactScalar(0));
      }
    return Outcome{ok, "[x,p] = i and [a_i, ad_j] = delta_ij for 3 modes, exact"};
  });

  criterion(2, "Sp(2) closure in three representations", 0, [] {
    const StructureConstants osc = closed_table(sp2_oscillator(Sp2Convention::canonical));
    const StructureConstants pauli = closed_table(sp2_pauli());
    const StructureConstants mink = closed_table(sp2_minkowski4(Variant::canonical));
    bool ok = all_hold(osc, reference::sp2_brackets()) && all_hold(pauli, reference::sp2_brackets()) &&
              all_hold(mink, reference::sp2_brackets());
    const auto id = identity_correspondence(osc.labels());
    ok = ok && compare(osc, pauli, id).match && compare(osc, mink, id).match;
    std::vector<std::string> warned;
    for (const GeneratorFamily& f : {sp2_oscillator(Sp2Convention::text), sp2_oscillator(Sp2Convention::table),
                                     sp2_minkowski4(Variant::as_printed)}) {
      const ClosureReport r = structure_constants(f);
      if (!r.closed || !all_hold(*r.table, reference::sp2_brackets())) warned.push_back(f.name());
    }
    std::string detail = "oscillator, 2x2 and 4x4 tables identical; WARN as-printed:";
    for (const auto& w : warned) detail += " " + w;
    return Outcome{ok && warned.size() == 3, detail};
  });

  criterion(3, "ten-generator algebra", 0, [] {
    const StructureConstants t = closed_table(two_mode_oscillator(Variant::canonical));
    const auto claims = reference::ten_generator_brackets();
    std::size_t held = 0;
    for (const auto& r : check_claims(t, claims)) held += r.holds;
    bool ok = held == claims.size() && jacobi_check(t);
    for (int k = 1; k <= 3; ++k) {
      ok = ok && t.get("J" + std::to_string(k), "S0", "S0").is_zero();
      for (int q = 1; q <= 3; ++q) {
        const ExactScalar want = k == q ? -ExactScalar::i() : ExactScalar(0);
        ok = ok && t.get("K" + std::to_string(k), "Q" + std::to_string(q), "S0") == want;
      }
    }
    // The published table lists each bracket once; every other entry must vanish.
    const StructureConstants published = table_from_claims(t.labels(), claims);
    ok = ok && compare(t, published, identity_correspondence(t.labels())).match;
    return Outcome{ok, std::to_string(held) + "/" + std::to_string(claims.size()) + " brackets, Jacobi exact"};
  });

  criterion(4, "Sp(4) and O(3,2) isomorphism", 0, [] {
    const StructureConstants osc = closed_table(two_mode_oscillator(Variant::canonical));
    const auto id = identity_correspondence(osc.labels());
    const bool sp4 = compare(closed_table(sp4_matrices(Variant::canonical)), osc, id).match;
    const bool o32 = compare(closed_table(o32_matrices()), osc, id).match;
    const bool printed_open = !structure_constants(sp4_matrices(Variant::as_printed)).closed;
    const ClosureReport tm = structure_constants(two_mode_oscillator(Variant::as_printed));
    const bool printed_differs = !tm.closed || !compare(*tm.table, osc, id).match;
    return Outcome{sp4 && o32 && printed_open && printed_differs,
                   "sp4 and o32 tables equal the oscillator table; WARN sp4-table, two-mode-oscillator-printed"};
  });

  criterion(5, "contraction limits", 0, [] {
    const GeneratorFamily o32 = o32_matrices();
    const GeneratorFamily p = translation_matrices();
    bool ok = true;
    double worst = 0.0;
    const std::vector<std::pair<const char*, const char*>> pairs{{"Q1", "P1"}, {"Q2", "P2"}, {"Q3", "P3"}, {"S0", "P0"}};
    for (const auto& [q, target] : pairs) {
      const LimitResult l = limit(conjugate(o32.matrix(q), 2));
      ok = ok && std::holds_alternative<ExactMatrix>(l) && std::get<ExactMatrix>(l) == p.matrix(target);
      worst = std::max(worst, max_abs_diff(numeric_conjugate(o32.matrix(q), 2, 1e-3), CMatrix::from_exact(p.matrix(target))));
    }
    for (const char* l : {"J1", "J2", "J3", "K1", "K2", "K3"})
      ok = ok && conjugate(o32.matrix(l), 0) == EpsMatrix::from_exact(o32.matrix(l));
    return Outcome{ok && worst <= 1e-5, "exact limits equal P matrices; numeric error at eps=1e-3 " + fmt(worst)};
  });

  criterion(6, "Poincare output", 0, [] {
    const StructureConstants t = closed_table(contract_o32());
    bool ok = jacobi_check(t);
    for (const char* a : {"P1", "P2", "P3", "P0"})
      for (const char* b : {"P1", "P2", "P3", "P0"})
        for (const auto& c : t.labels()) ok = ok && t.get(a, b, c).is_zero();
    std::size_t exact = 0, differing = 0;
    for (const auto& r : check_claims(t, reference::poincare_published_brackets())) {
      const bool boost_translation = r.claim.a.front() == 'P' && r.claim.b.front() == 'K';
      if (boost_translation) {
        differing += !r.holds;
      } else {
        ok = ok && r.holds;
        ++exact;
      }
    }
    for (int i = 1; i <= 3; ++i) {
      const std::string pi = "P" + std::to_string(i), ki = "K" + std::to_string(i);
      ok = ok && t.get(pi, ki, "P0") == ExactScalar::i();
    }
    VerifyConfig config;
    const Report report = run_verify(config);
    ok = ok && report.exit_code() == 0 && report.count(Status::note) == 1;
    return Outcome{ok, std::to_string(exact) + " brackets exact, computed [Pi, Ki] = i P0 recorded; verify exit " +
                           std::to_string(report.exit_code()) + " with " + std::to_string(report.count(Status::note)) +
                           " note"};
  });

  criterion(7, "Fock validation N=16 guard=4", 10.0, [] {
    const FockRealization fock(16, 2);
    const auto pairs = protected_family_check(two_mode_oscillator(Variant::canonical), fock, 4);
    double worst = 0.0;
    for (const auto& p : pairs) worst = std::max(worst, p.deviation);
    return Outcome{pairs.size() == 45 && worst <= 1e-12,
                   std::to_string(pairs.size()) + " pairs, max deviation " + fmt(worst)};
  });

  criterion(8, "invariance flows", 0, [] {
    const std::vector<double> ts{-1.0, -0.5, 0.1, 0.5, 1.0};
    double sym = 0.0, metric = 0.0, drift = 0.0;
    const GeneratorFamily sp4 = sp4_matrices(Variant::canonical);
    for (const auto& e : sp4.elements())
      for (double t : ts) sym = std::max(sym, symplectic_residual(flow(std::get<ExactMatrix>(e), t)));
    const GeneratorFamily o32 = o32_matrices();
    for (const auto& e : o32.elements())
      for (double t : ts) metric = std::max(metric, o32_residual(flow(std::get<ExactMatrix>(e), t)));
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> angle(0.0, 6.283185307179586), eta(-1.5, 1.5);
    const GaussianState ground = GaussianState::ground();
    for (int k = 0; k < 100; ++k) {
      const Mat2 m = multiply(multiply(rotation(angle(rng)), squeeze(eta(rng))), rotation(angle(rng)));
      drift = std::max(drift, std::abs(det(apply_sp2(ground, m).covariance) - det(ground.covariance)));
    }
    return Outcome{sym <= 1e-10 && metric <= 1e-10 && drift <= 1e-12,
                   "symplectic " + fmt(sym) + ", O(3,2) " + fmt(metric) + ", det drift " + fmt(drift)};
  });

  criterion(9, "mass shell", 0, [] {
    double worst = 0.0;
    for (double m : {0.5, 1.0, 2.0}) {
      const FourMomentum rest{0.0, 0.0, 0.0, m};
      for (int axis = 1; axis <= 3; ++axis) {
        for (double y : {-2.0, -1.5, -1.0, -0.5, 0.0, 0.5, 1.0, 1.5, 2.0}) {
          const FourMomentum p = boost_momentum(rest, axis, y);
          worst = std::max(worst, std::abs(mass_shell(p) + m * m));
          for (int r = 1; r <= 3; ++r)
            for (double theta : {0.4, 2.2, 5.9})
              worst = std::max(worst, std::abs(mass_shell(rotate_momentum(p, r, theta)) + m * m));
        }
      }
    }
    return Outcome{worst <= 1e-10, "max |p^2 + m^2| " + fmt(worst)};
  });

  criterion(10, "translation action", 0, [] {
    const double a = 1.25, b = -0.5, c = 3.0, d = 0.75;
    const Affine5Vector v{{2.0, -4.0, 0.5, 8.0}};
    const Affine5Vector out = apply(translate(a, b, c, d), v);
    bool ok = out.xyzt == std::array<double, 4>{2.0 + a, -4.0 + b, 0.5 + c, 8.0 - d};

    const GeneratorFamily poincare = contract_o32();
    const ExactScalar ea = ExactScalar::fraction(5, 4), eb = ExactScalar::fraction(-1, 2), ec = 3,
                      ed = ExactScalar::fraction(3, 4);
    ExactMatrix sum = poincare.matrix("P1") * ea + poincare.matrix("P2") * eb + poincare.matrix("P3") * ec +
                      poincare.matrix("P0") * ed;
    const ExactMatrix exponential = exp_nilpotent(sum * -ExactScalar::i());
    ok = ok && exponential == exp_nilpotent(translation_exponent(ea, eb, ec, ed));
    ok = ok && CMatrix::from_exact(exponential) == translate(a, b, c, d);
    return Outcome{ok, "(x+a, y+b, z+c, t-d, 1) exact; equals exp of contracted P generators"};
  });

  std::printf("%s: %d criteria failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}
