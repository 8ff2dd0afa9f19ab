#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "weberosc/coefficients.hpp"

namespace weberosc::cli {

/// Everything a run can be configured with. Fields left empty fall back to
/// the command's defaults.
struct RunConfig {
  PhysicalConfig phys;
  std::optional<std::string> preset;
  std::vector<double> drag;
  int samples = 1001;
  std::filesystem::path out = ".";
  bool oracle = false;
  int terms = 0;
  std::optional<double> theta_max;
  int n = 10;
};

/// Applies the keys of a flat JSON object to cfg. Unknown keys and values of
/// the wrong type raise ConfigError. Physical keys use the PhysicalConfig
/// field names.
void apply_json(RunConfig& cfg, const std::string& text);
void apply_file(RunConfig& cfg, const std::filesystem::path& path);

/// "0.2,0.5,1" -> {0.2, 0.5, 1}.
std::vector<double> parse_list(const std::string& text);

/// Comparison tolerance: WEBEROSC_TOL if set, else fallback.
double comparison_tolerance(double fallback);

}  // namespace weberosc::cli
