#include "cli.hpp"

#include "ccr/contract.hpp"
#include "ccr/liecore.hpp"
#include "ccr/phspace.hpp"
#include "ccr/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <map>
#include <string>
#include <vector>

namespace ccr::cli {

namespace {

std::string fixed(const char* fmt, double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, fmt, v);
  return buf;
}

int cmd_verify(const VerifyConfig& config, std::ostream& out) {
  const Report report = run_verify(config);
  out << report.render();
  return report.exit_code();
}

int cmd_table(const std::string& name, Format format, std::ostream& out, std::ostream& err) {
  const GeneratorFamily family = family_by_name(name);
  const ClosureReport report = structure_constants(family);
  if (!report.closed) {
    err << "family " << name << " is not closed:";
    for (const auto& l : report.dependent) err << " " << l << " is dependent;";
    for (const auto& f : report.failures) err << " [" << f.a << ", " << f.b << "] leaves the span;";
    err << '\n';
    return 1;
  }
  const StructureConstants& t = *report.table;
  if (format == Format::json) {
    nlohmann::json j = t.to_json();
    j["schema"] = 1;
    j["family"] = family.name();
    out << j.dump(2) << '\n';
    return 0;
  }
  out << "# " << family.name() << " (" << family.representation() << ", " << to_string(family.variant()) << ")\n";
  out << t.render_text();
  out << "# nonzero f(a, b; c)\n";
  for (const auto& e : t.nonzero()) out << "f(" << e.a << ", " << e.b << "; " << e.c << ") = " << e.value.str() << '\n';
  return 0;
}

int cmd_contract(const std::string& label, int power, Format format, std::ostream& out, std::ostream& err) {
  const GeneratorFamily o32 = o32_matrices();
  const ExactMatrix& g = o32.matrix(label);
  const EpsMatrix conj = conjugate(g, power);
  const LimitResult lim = limit(conj);
  const auto rows = trajectory(conj);

  if (format == Format::json) {
    nlohmann::json traj = nlohmann::json::array();
    for (const auto& r : rows) {
      traj.push_back({{"row", r.row + 1}, {"col", r.col + 1}, {"exponent", r.exponent}, {"coefficient", r.coeff.str()}});
    }
    nlohmann::json j{{"schema", 1}, {"generator", label}, {"power", power}, {"trajectory", traj}};
    if (const auto* m = std::get_if<ExactMatrix>(&lim)) {
      nlohmann::json entries = nlohmann::json::array();
      for (std::size_t r = 0; r < m->n(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < m->n(); ++c) row.push_back((*m)(r, c).str());
        entries.push_back(row);
      }
      j["limit"] = entries;
    } else {
      j["limit"] = nullptr;
    }
    out << j.dump(2) << '\n';
  } else {
    out << "# eps^" << power << " C(eps) " << label << " C(eps)^-1\n";
    out << "entry\texponent\tcoefficient\n";
    for (const auto& r : rows) {
      out << '(' << r.row + 1 << ',' << r.col + 1 << ")\t" << r.exponent << '\t' << r.coeff.str() << '\n';
    }
    if (const auto* m = std::get_if<ExactMatrix>(&lim)) out << "# limit eps -> 0\n" << m->str();
  }
  if (const auto* d = std::get_if<Divergent>(&lim)) {
    for (const auto& e : d->entries) {
      err << "diverges at (" << e.row + 1 << ',' << e.col + 1 << ") with " << e.coeff.str() << " eps^" << e.exponent
          << '\n';
    }
    return 1;
  }
  return 0;
}

struct WignerOptions {
  double eta = 0.0;
  double theta = 0.0;
  double mean_x = 0.0;
  double mean_p = 0.0;
  double range = 3.0;
  std::size_t points = 31;
};

int cmd_wigner(const WignerOptions& o, std::ostream& out) {
  GaussianState state = GaussianState::ground();
  state.mean = {o.mean_x, o.mean_p};
  state = apply_sp2(state, multiply(rotation(o.theta), squeeze(o.eta)));
  const auto axis = linspace(-o.range, o.range, o.points);
  out << "x,p,W\n";
  for (const auto& s : wigner_grid(state, axis, axis)) {
    out << fixed("%.6f", s.x) << ',' << fixed("%.6f", s.p) << ',' << fixed("%.12e", s.w) << '\n';
  }
  return 0;
}

int cmd_catalog(const std::string& name, Format format, std::ostream& out) {
  if (name.empty()) {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& n : family_names()) {
      const GeneratorFamily f = family_by_name(n);
      if (format == Format::json) {
        list.push_back({{"name", f.name()},
                        {"representation", f.representation()},
                        {"variant", to_string(f.variant())},
                        {"size", f.size()},
                        {"provenance", f.provenance()},
                        {"note", f.note()}});
      } else {
        out << f.name() << "\t" << to_string(f.variant()) << "\t" << f.size() << "\t" << f.representation() << "\t"
            << f.provenance() << '\n';
      }
    }
    if (format == Format::json) out << nlohmann::json{{"schema", 1}, {"families", list}}.dump(2) << '\n';
    return 0;
  }
  const GeneratorFamily f = family_by_name(name);
  if (format == Format::json) {
    nlohmann::json gens = nlohmann::json::array();
    for (std::size_t k = 0; k < f.size(); ++k) {
      gens.push_back({{"label", f.labels()[k]}, {"value", element_str(f.elements()[k])}});
    }
    out << nlohmann::json{{"schema", 1}, {"family", f.name()}, {"variant", to_string(f.variant())}, {"generators", gens}}
               .dump(2)
        << '\n';
    return 0;
  }
  out << "# " << f.name() << " (" << f.representation() << ", " << to_string(f.variant()) << ")\n";
  out << "# " << f.provenance() << '\n';
  if (!f.note().empty()) out << "# " << f.note() << '\n';
  for (std::size_t k = 0; k < f.size(); ++k) {
    const std::string body = element_str(f.elements()[k]);
    if (f.symbolic()) {
      out << f.labels()[k] << " = " << body << '\n';
    } else {
      out << f.labels()[k] << " =\n" << body;
    }
  }
  return 0;
}

int cmd_flows(std::ostream& out) {
  const std::vector<double> ts{-1.0, -0.5, 0.1, 0.5, 1.0};
  auto residuals = [&](const GeneratorFamily& f, double (*residual)(const CMatrix&)) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t k = 0; k < f.size(); ++k) {
      for (double t : ts) {
        rows.push_back({{"generator", f.labels()[k]},
                        {"t", t},
                        {"residual", residual(flow(std::get<ExactMatrix>(f.elements()[k]), t))}});
      }
    }
    return rows;
  };
  nlohmann::json shell = nlohmann::json::array();
  for (double m : {0.5, 1.0, 2.0}) {
    for (int axis = 1; axis <= 3; ++axis) {
      for (double y : {0.5, 1.0, 2.0}) {
        const FourMomentum p = boost_momentum({0.0, 0.0, 0.0, m}, axis, y);
        shell.push_back({{"m", m},
                         {"axis", axis},
                         {"rapidity", y},
                         {"p", {p.p1, p.p2, p.p3, p.p0}},
                         {"deviation", std::abs(mass_shell(p) + m * m)}});
      }
    }
  }
  const nlohmann::json j{{"schema", 1},
                         {"convention", "exp(-i t G)"},
                         {"sp4_symplectic", residuals(sp4_matrices(Variant::canonical), symplectic_residual)},
                         {"o32_metric", residuals(o32_matrices(), o32_residual)},
                         {"mass_shell", shell}};
  out << j.dump(2) << '\n';
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of the oscillator, symplectic and Poincare algebras", "ccr"};
  app.require_subcommand(1);
  app.fallthrough();

  VerifyConfig config;
  const std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}};
  const std::map<std::string, VariantPolicy> variants{
      {"canonical", VariantPolicy::canonical}, {"as-printed", VariantPolicy::as_printed}, {"both", VariantPolicy::both}};
  app.add_option("--fock-n", config.fock_n, "Fock cutoff per mode")->capture_default_str();
  app.add_option("--guard", config.guard, "Quanta kept clear of the truncation edge")->capture_default_str();
  app.add_option("--tolerance", config.tolerance, "Floating-point tolerance")->capture_default_str();
  std::string format = "text", variant = "both";
  app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_option("--variant", variant, "canonical, as-printed or both")
      ->check(CLI::IsMember({"canonical", "as-printed", "both"}))
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Run every verification suite");

  std::string family;
  auto* table = app.add_subcommand("table", "Structure constants of a family");
  table->add_option("family", family, "Family name")->required();

  std::string generator;
  int power = 2;
  auto* contract = app.add_subcommand("contract", "Epsilon trajectory and limit of one O(3,2) generator");
  contract->add_option("generator", generator, "J1..J3, K1..K3, Q1..Q3 or S0")->required();
  contract->add_option("--power", power, "Epsilon power")->capture_default_str();

  WignerOptions wo;
  auto* wigner = app.add_subcommand("wigner", "Gaussian Wigner function on a grid (CSV)");
  wigner->add_option("--eta", wo.eta, "Squeeze parameter")->capture_default_str();
  wigner->add_option("--theta", wo.theta, "Rotation angle")->capture_default_str();
  wigner->add_option("--mean-x", wo.mean_x)->capture_default_str();
  wigner->add_option("--mean-p", wo.mean_p)->capture_default_str();
  wigner->add_option("--range", wo.range, "Grid half-width")->capture_default_str()->check(CLI::PositiveNumber);
  wigner->add_option("--points", wo.points, "Points per axis")->capture_default_str()->check(CLI::Range(2, 2001));

  std::string catalog_family;
  auto* catalog = app.add_subcommand("catalog", "List families, or render one");
  catalog->add_option("family", catalog_family, "Family name");

  auto* flows = app.add_subcommand("flows", "Residual tables of the exponentiated generators (JSON)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  config.format = formats.at(format);
  config.variant = variants.at(variant);
  try {
    config.validate();
    if (verify->parsed()) return cmd_verify(config, out);
    if (table->parsed()) return cmd_table(family, config.format, out, err);
    if (contract->parsed()) return cmd_contract(generator, power, config.format, out, err);
    if (wigner->parsed()) return cmd_wigner(wo, out);
    if (catalog->parsed()) return cmd_catalog(catalog_family, config.format, out);
    if (flows->parsed()) return cmd_flows(out);
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace ccr::cli
