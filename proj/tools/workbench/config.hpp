#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "qweyl/moment.hpp"
#include "qweyl/root_of_unity.hpp"

namespace qweyl::workbench {

struct Bounds {
  unsigned degree_bound = 3;
  unsigned exponent_bound = 4;
  unsigned random_cases = 20;
  std::size_t enumeration_cap = 10000;
};

/// A validated configuration. Every derived object is constructed eagerly, so
/// a WorkbenchConfig is always usable.
struct WorkbenchConfig {
  nlohmann::json raw;
  std::string field_name;
  int l = 0;
  std::size_t n = 0, d = 0;
  bool single_parameter = false;
  Normalization normalization = Normalization::Rescaled;
  std::optional<AlgebraSpec> spec;
  std::optional<TorusData> torus;
  std::vector<Scalar> eta;
  std::vector<std::vector<RankOneData>> reps;
  Bounds bounds;
  std::uint64_t seed = 0;

  Field field() const { return spec->field(); }
};

/// All validation problems, each prefixed by the offending field path.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(std::vector<std::string> problems);
  const std::vector<std::string>& problems() const noexcept { return problems_; }

 private:
  std::vector<std::string> problems_;
};

WorkbenchConfig parse_config(const nlohmann::json& j);
/// Reads and validates a JSON file; ConfigError on unreadable or invalid input.
WorkbenchConfig load_config(const std::string& path);

}  // namespace qweyl::workbench
