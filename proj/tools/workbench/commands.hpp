#pragma once

#include <string>

#include <json.hpp>

#include "config.hpp"

namespace qweyl::workbench {

/// Canonical PBW (or localized) form of an expression.
std::string eval_command(const std::string& expr, const WorkbenchConfig& cfg);

/// Canonical form modulo the moment ideal of the configured torus and eta.
std::string reduce_command(const std::string& expr, const WorkbenchConfig& cfg);

/// Matrices of every configured representation. Scalars are coefficient
/// vectors over the power basis 1, zeta, ..., zeta^{phi(l)-1}.
nlohmann::json rep_build_command(const WorkbenchConfig& cfg);

}  // namespace qweyl::workbench
