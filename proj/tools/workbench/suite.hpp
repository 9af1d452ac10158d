#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "config.hpp"

namespace qweyl::workbench {

inline constexpr const char* kToolName = "qweyl";
inline constexpr const char* kToolVersion = "0.1.0";

enum class Status { Pass, Fail, Skipped };

struct CheckResult {
  std::string check_id;
  std::string anchor;
  Status status = Status::Skipped;
  std::string detail;
  std::vector<std::string> failures;
  double elapsed_ms = 0;
};

struct SuiteOptions {
  /// Check ids or id prefixes (e.g. "root.rep" selects every rep check).
  std::vector<std::string> only;
  bool verbose = false;
};

/// Ids the suite would run for this config, in report order.
std::vector<std::string> check_ids(const WorkbenchConfig& cfg);

std::vector<CheckResult> run_suite(const WorkbenchConfig& cfg, const SuiteOptions& options);

/// Report document; elapsed_ms is the only nondeterministic field.
nlohmann::json make_report(const WorkbenchConfig& cfg, const std::vector<CheckResult>& results, bool verbose);

/// True when no selected check failed.
bool suite_passed(const std::vector<CheckResult>& results);

std::string status_name(Status s);

}  // namespace qweyl::workbench
