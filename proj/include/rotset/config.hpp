#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "rotset/lift.hpp"
#include "rotset/matrix.hpp"
#include "rotset/rotation.hpp"

namespace rotset {

/// Parsed run configuration. The file format is line-oriented
/// `key = value` text under `[section]` headers; unknown sections or keys
/// are errors, reported with their line number.
struct RunConfig {
  TorusLift lift;
  bool has_lift = false;

  std::optional<IntMatrix3> matrix;

  std::vector<int> ladder = power_ladder(64);
  int grid_n = 128;

  int p_min = 1;
  int p_max = 64;
  std::optional<SlopeWindow> window;
  Box K{{0.0, 0.0}, {1.0, 1.0}};
  int hit_grid = 32;

  double cert_radius = 1.0;
  int k_scan = 128;
  int cert_grid = 64;
  int trials = 500;

  std::string report_path;
  std::uint64_t seed = 12345;

  EstimatorParams estimator_params(bool parallel) const;
};

RunConfig parse_config_text(const std::string& text);  // throws ConfigError
RunConfig load_config(const std::string& path);        // throws ConfigError

}  // namespace rotset
