#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qkdv {

class Rng;

/// One randomized property. A trial returns a description of the failing
/// input, or nothing when the property holds.
struct PropertyCheck {
  std::string name;
  std::function<std::optional<std::string>(Rng&)> trial;
  /// Deterministic checks run once regardless of the requested case count.
  bool exhaustive = false;
};

struct CheckResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;
  bool ok() const { return failures == 0 && cases > 0; }
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  int cases = 0;
  std::vector<CheckResult> checks;
  bool ok() const;
};

/// "fock", "bracket", "schur", "kdv".
std::vector<std::string> suite_names();
/// Throws std::invalid_argument for an unknown suite.
std::vector<PropertyCheck> suite_checks(std::string_view suite);

/// Each check draws from its own generator, derived from the seed and the
/// check name, so adding checks does not perturb the others.
CheckResult run_check(const PropertyCheck& check, std::uint64_t seed, int cases);
/// Runs one suite, or all of them for "all".
std::vector<SuiteReport> run_suites(std::string_view suite, std::uint64_t seed, int cases);

std::string format_report(const SuiteReport& report);

}  // namespace qkdv
