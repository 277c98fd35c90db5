#include "polyherm/verify.hpp"

#include <algorithm>
#include <chrono>
#include <limits>

#include "polyherm/error.hpp"
#include "verify/common.hpp"

namespace polyherm {

namespace {

// Long names accepted for the suites.
const std::vector<std::pair<std::string, std::string>>& suite_aliases() {
  static const std::vector<std::pair<std::string, std::string>> a = {
      {"hermite_families", "hermite"},
      {"measures_quadrature", "quadrature"},
      {"kernels_transforms", "kernels"},
      {"elliptic_ginibre", "ginibre"},
  };
  return a;
}

std::string canonical_suite(const std::string& name) {
  for (const auto& [alias, s] : suite_aliases())
    if (alias == name) return s;
  return name;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"poly_core", "hermite", "operators", "quadrature", "kernels", "ginibre"};
  return names;
}

const std::vector<CheckDef>& check_registry() {
  static const std::vector<CheckDef> reg = [] {
    std::vector<CheckDef> out;
    verify_detail::register_poly_core(out);
    verify_detail::register_hermite(out);
    verify_detail::register_operators(out);
    verify_detail::register_quadrature(out);
    verify_detail::register_kernels(out);
    verify_detail::register_ginibre(out);
    return out;
  }();
  return reg;
}

const CheckDef& find_check(const std::string& id) {
  for (const auto& c : check_registry())
    if (c.id == id) return c;
  throw Error(ErrorCode::InvalidArgument, "no check named '" + id + "'");
}

CheckResult run_check(const CheckDef& def, const VerifyOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();
  CheckResult r;
  try {
    r = def.run(options);
  } catch (const std::exception& e) {
    r = CheckResult{};
    r.value = std::numeric_limits<double>::quiet_NaN();
    r.comparison = Comparison::Flag;
    r.pass = false;
    r.detail = std::string("raised ") + e.what();
  }
  r.id = def.id;
  r.suite = def.suite;
  r.description = def.description;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& options) {
  const std::string s = canonical_suite(suite);
  if (s != "all" && std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
    throw Error(ErrorCode::UnknownSuite, "unknown suite '" + suite + "'");
  std::vector<CheckResult> out;
  for (const auto& def : check_registry())
    if (s == "all" || def.suite == s) out.push_back(run_check(def, options));
  return out;
}

const std::vector<AcceptanceCriterion>& acceptance_criteria() {
  static const std::vector<AcceptanceCriterion> c = {
      {1, "three_route_agreement", "closed form, ladder and 2D-Hermite routes agree to 1e-9", 10.0,
       {"operators.three_route_agreement"}},
      {2, "eigen_polyanalytic", "magnetic Laplacian eigenvalue n to 1e-10 and zbar-degree <= n", 5.0,
       {"operators.laplacian_eigen", "hermite.polyanalyticity"}},
      {3, "orthogonality", "omega_tau orthogonality and Gram invariance", 60.0,
       {"operators.elliptic_orthogonality", "operators.gram_invariance"}},
      {4, "negative_tests", "rejected candidate families fail as expected", 5.0,
       {"hermite.negative_rodrigues_candidate", "hermite.negative_substitution_candidate"}},
      {5, "generating_functions", "generating-function residuals <= 1e-10", 5.0,
       {"hermite.genfun_squeezed", "hermite.genfun_tau0"}},
      {6, "kernel_suite", "transform kernel, Landau kernel, squeeze and TPCS identities", 120.0,
       {"kernels.ratio_constancy", "kernels.tau0_limit", "kernels.w_cancellation", "kernels.landau_reproducing",
        "kernels.squeeze_identity", "kernels.tpcs_identity"}},
      {7, "identity_library", "Taylor shift, Laguerre, Hermite sum and Rodrigues identities", 10.0,
       {"hermite.taylor_shift", "hermite.laguerre_index_identity", "hermite.hermite_sum",
        "hermite.complex_vs_rodrigues"}},
      {8, "random_matrix", "elliptic spectrum statistics and eigensolver residuals", 300.0,
       {"ginibre.elliptic_moments", "ginibre.eigen_residuals"}},
      {9, "quadrature", "moments, mass and refinement stability", 5.0,
       {"quadrature.moments", "quadrature.mass", "quadrature.refinement"}},
  };
  return c;
}

AcceptanceResult run_acceptance(int number) {
  const auto& all = acceptance_criteria();
  if (number < 1 || number > static_cast<int>(all.size()))
    throw Error(ErrorCode::InvalidArgument, "no acceptance criterion " + std::to_string(number));
  AcceptanceResult r;
  r.criterion = all[number - 1];
  const VerifyOptions opt;
  const auto t0 = std::chrono::steady_clock::now();
  for (const auto& id : r.criterion.checks) r.checks.push_back(run_check(find_check(id), opt));
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.within_budget = r.seconds <= r.criterion.budget_seconds;
  r.pass = r.within_budget;
  for (const auto& c : r.checks) r.pass = r.pass && c.pass;
  return r;
}

}  // namespace polyherm
