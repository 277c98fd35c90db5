#include <doctest.h>

#include <algorithm>
#include <set>

#include <json.hpp>

#include "polyherm/error.hpp"
#include "polyherm/report.hpp"
#include "polyherm/verify.hpp"

using namespace polyherm;

TEST_SUITE("report") {
  TEST_CASE("schema version") {
    CHECK(std::string(report_schema_version()) == "1.0.0");
  }

  TEST_CASE("verify report layout") {
    const auto results = run_suite("poly_core", VerifyOptions{});
    const auto text = verify_report_json({"verify", false}, "poly_core", VerifyOptions{}, results);
    const auto j = nlohmann::json::parse(text);
    CHECK(j["schema_version"] == report_schema_version());
    CHECK(j["rng"] == "philox4x32-10");
    CHECK_FALSE(j.contains("timestamp"));
    CHECK(j["checks"].size() == results.size());
    CHECK(j["checks"][0].contains("max_abs_err"));
    CHECK(j["summary"]["total"] == results.size());
    CHECK(verify_report_json({"verify", false}, "poly_core", VerifyOptions{}, run_suite("poly_core", VerifyOptions{})) ==
          text);
    CHECK(nlohmann::json::parse(verify_report_json({"verify", true}, "x", VerifyOptions{}, {})).contains("timestamp"));
  }

  TEST_CASE("compatibility") {
    CHECK_NOTHROW(check_report_compatibility(R"({"schema_version": "1.4.2"})"));
    try {
      check_report_compatibility(R"({"schema_version": "2.0.0"})");
      FAIL("expected SchemaIncompatible");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::SchemaIncompatible);
    }
    CHECK_THROWS_AS(check_report_compatibility("[]"), Error);
    CHECK_THROWS_AS(check_report_compatibility("{"), Error);
  }
}

TEST_SUITE("verify") {
  TEST_CASE("check identifiers are unique and belong to known suites") {
    std::set<std::string> ids;
    const auto& suites = suite_names();
    for (const auto& c : check_registry()) {
      CHECK(ids.insert(c.id).second);
      CHECK(std::find(suites.begin(), suites.end(), c.suite) != suites.end());
      CHECK(c.id.rfind(c.suite + ".", 0) == 0);
    }
  }

  TEST_CASE("every suite has checks and aliases resolve") {
    for (const auto& s : suite_names()) {
      int n = 0;
      for (const auto& c : check_registry()) n += c.suite == s;
      CHECK(n > 0);
    }
    CHECK(run_suite("measures_quadrature", VerifyOptions{}).size() == run_suite("quadrature", VerifyOptions{}).size());
    CHECK_THROWS_AS(run_suite("nope", VerifyOptions{}), Error);
  }

  TEST_CASE("acceptance criteria reference registered checks") {
    CHECK(acceptance_criteria().size() == 9);
    for (const auto& a : acceptance_criteria())
      for (const auto& id : a.checks) CHECK_NOTHROW(find_check(id));
  }

  TEST_CASE("exceptions become failed checks") {
    CheckDef d{"x.raises", "x", "raises", [](const VerifyOptions&) -> CheckResult {
                 throw Error(ErrorCode::NoConvergence, "boom");
               }};
    const auto r = run_check(d, VerifyOptions{});
    CHECK_FALSE(r.pass);
    CHECK(r.detail.find("NoConvergence") != std::string::npos);
  }
}
