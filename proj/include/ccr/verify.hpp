#pragma once

#include "ccr/catalog.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace ccr {

enum class Format { text, json };
enum class VariantPolicy { canonical, as_printed, both };

struct VerifyConfig {
  int fock_n = 16;
  int guard = 4;
  double tolerance = 1e-10;
  Format format = Format::text;
  VariantPolicy variant = VariantPolicy::both;

  /// Throws std::invalid_argument unless fock_n >= guard + 2, guard >= 0 and tolerance > 0.
  void validate() const;
};

/// NOTE records a computed fact that disagrees with a published form without
/// failing the run; WARN marks a finding about an as-printed variant.
enum class Status { pass, fail, warn, note };

std::string_view to_string(Status s);

struct CheckResult {
  std::string suite;
  std::string name;
  Status status = Status::pass;
  std::string detail;
};

class Report {
 public:
  explicit Report(VerifyConfig config) : config_(config) {}

  void add(CheckResult r) { checks_.push_back(std::move(r)); }
  const std::vector<CheckResult>& checks() const { return checks_; }
  const VerifyConfig& config() const { return config_; }

  std::size_t count(Status s) const;
  /// 0 when no check failed, 1 otherwise.
  int exit_code() const;

  std::string text() const;
  nlohmann::json json() const;
  /// text() or json().dump(2) according to the configured format.
  std::string render() const;

 private:
  VerifyConfig config_;
  std::vector<CheckResult> checks_;
};

/// Runs the suites in order: opalg, catalog, liecore, contract, focknum, phspace.
/// Throws std::invalid_argument for an invalid config.
Report run_verify(const VerifyConfig& config);

/// Every family the tools can address by name, in listing order.
std::vector<std::string> family_names();
/// Throws std::out_of_range for unknown names.
GeneratorFamily family_by_name(std::string_view name);

/// "%.3e" rendering used in reports, so output is byte-stable.
std::string sci(double value);

}  // namespace ccr
