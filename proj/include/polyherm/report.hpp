#pragma once

#include <string>
#include <vector>

#include "polyherm/ginibre.hpp"
#include "polyherm/verify.hpp"

namespace polyherm {

// Semantic version of the JSON report layout.
const char* report_schema_version() noexcept;

struct ReportContext {
  std::string command;
  bool timestamp = true;  // adds "timestamp" and per-check "seconds"
};

std::string verify_report_json(const ReportContext& ctx, const std::string& suite, const VerifyOptions& options,
                               const std::vector<CheckResult>& results);

// Per-seed and pooled spectral statistics.
std::string sample_summary_json(const ReportContext& ctx, const std::vector<SpectrumSample>& samples);

// SchemaIncompatible when the report's major version differs from ours;
// InvalidArgument when the text is not a report.
void check_report_compatibility(const std::string& report_json);

// "2026-01-31T12:00:00Z"
std::string utc_timestamp();

}  // namespace polyherm
