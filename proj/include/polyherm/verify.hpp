#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace polyherm {

struct VerifyOptions {
  double tau = 0.5;       // used by checks whose range leaves tau open
  int max_degree = 8;     // the m, n <= 8 bound of the main identities
  int n_q = 64;           // quadrature nodes per axis
  std::uint64_t seed = 1; // probe and sampler seed base
  int trials = 20;        // Monte Carlo seeds
};

enum class Comparison { AtMost, AtLeast, Flag };

struct CheckResult {
  std::string id;
  std::string suite;
  std::string description;
  double value = 0.0;
  double threshold = 0.0;
  Comparison comparison = Comparison::AtMost;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;  // wall time; excluded from deterministic reports
};

using CheckFn = std::function<CheckResult(const VerifyOptions&)>;

struct CheckDef {
  std::string id;
  std::string suite;
  std::string description;
  CheckFn run;
};

// Module suites in registry order.
const std::vector<std::string>& suite_names();
const std::vector<CheckDef>& check_registry();
const CheckDef& find_check(const std::string& id);

// Runs one suite ("all" runs every suite). UnknownSuite for other names.
std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& options);
CheckResult run_check(const CheckDef& def, const VerifyOptions& options);

struct AcceptanceCriterion {
  int number;
  std::string id;
  std::string description;
  double budget_seconds;
  std::vector<std::string> checks;
};

struct AcceptanceResult {
  AcceptanceCriterion criterion;
  std::vector<CheckResult> checks;
  double seconds = 0.0;
  bool within_budget = true;
  bool pass = false;
};

const std::vector<AcceptanceCriterion>& acceptance_criteria();
// Runs criterion `number` (1-based) with the default options.
AcceptanceResult run_acceptance(int number);

}  // namespace polyherm
