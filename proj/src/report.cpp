#include "polyherm/report.hpp"

#include <chrono>
#include <ctime>

#include <json.hpp>

#include "polyherm/error.hpp"

namespace polyherm {

namespace {

using nlohmann::ordered_json;

constexpr const char* kSchemaVersion = "1.0.0";

ordered_json header(const ReportContext& ctx) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = ctx.command;
  j["rng"] = Philox::kName;
  if (ctx.timestamp) j["timestamp"] = utc_timestamp();
  return j;
}

const char* comparison_name(Comparison c) {
  switch (c) {
    case Comparison::AtMost: return "at_most";
    case Comparison::AtLeast: return "at_least";
    case Comparison::Flag: return "flag";
  }
  return "flag";
}

ordered_json complex_json(cplx z) { return ordered_json::array({z.real(), z.imag()}); }

ordered_json stats_json(const SpectralStats& s) {
  ordered_json j;
  j["mean"] = complex_json(s.mean);
  j["second_moment_over_N"] = complex_json(s.second_moment_over_N);
  j["ellipse_fraction"] = s.ellipse_fraction;
  return j;
}

int major_of(const std::string& v) {
  const auto dot = v.find('.');
  try {
    return std::stoi(v.substr(0, dot));
  } catch (const std::exception&) {
    throw Error(ErrorCode::InvalidArgument, "malformed schema_version '" + v + "'");
  }
}

}  // namespace

const char* report_schema_version() noexcept { return kSchemaVersion; }

std::string utc_timestamp() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string verify_report_json(const ReportContext& ctx, const std::string& suite, const VerifyOptions& options,
                               const std::vector<CheckResult>& results) {
  auto j = header(ctx);
  j["suite"] = suite;
  j["options"] = {{"tau", options.tau},
                  {"max_degree", options.max_degree},
                  {"n_q", options.n_q},
                  {"seed", options.seed},
                  {"trials", options.trials}};
  auto checks = ordered_json::array();
  std::vector<std::string> failed;
  for (const auto& r : results) {
    ordered_json c;
    c["check"] = r.id;
    c["suite"] = r.suite;
    c["description"] = r.description;
    if (r.comparison == Comparison::AtMost) c["max_abs_err"] = r.value;
    c["value"] = r.value;
    c["threshold"] = r.threshold;
    c["comparison"] = comparison_name(r.comparison);
    c["pass"] = r.pass;
    c["detail"] = r.detail;
    if (ctx.timestamp) c["seconds"] = r.seconds;
    checks.push_back(std::move(c));
    if (!r.pass) failed.push_back(r.id);
  }
  j["checks"] = std::move(checks);
  j["summary"] = {{"total", results.size()},
                  {"passed", results.size() - failed.size()},
                  {"failed", failed.size()},
                  {"failed_checks", failed}};
  return j.dump(2) + "\n";
}

std::string sample_summary_json(const ReportContext& ctx, const std::vector<SpectrumSample>& samples) {
  auto j = header(ctx);
  auto per = ordered_json::array();
  SpectralStats pooled{};
  for (const auto& s : samples) {
    const auto st = spectral_stats(s);
    auto e = stats_json(st);
    e["seed"] = s.seed;
    e["N"] = s.N;
    e["tau"] = s.tau;
    per.push_back(std::move(e));
    pooled.mean += st.mean;
    pooled.second_moment_over_N += st.second_moment_over_N;
    pooled.ellipse_fraction += st.ellipse_fraction;
  }
  if (!samples.empty()) {
    const double k = static_cast<double>(samples.size());
    pooled.mean /= k;
    pooled.second_moment_over_N /= k;
    pooled.ellipse_fraction /= k;
  }
  j["per_seed"] = std::move(per);
  j["pooled"] = stats_json(pooled);
  return j.dump(2) + "\n";
}

void check_report_compatibility(const std::string& report_json) {
  ordered_json j;
  try {
    j = ordered_json::parse(report_json);
  } catch (const std::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("report is not JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("schema_version") || !j["schema_version"].is_string())
    throw Error(ErrorCode::InvalidArgument, "report has no schema_version");
  const std::string v = j["schema_version"].get<std::string>();
  if (major_of(v) != major_of(kSchemaVersion))
    throw Error(ErrorCode::SchemaIncompatible,
                "report schema " + v + " is incompatible with " + std::string(kSchemaVersion));
}

}  // namespace polyherm
