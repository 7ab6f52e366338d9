#pragma once

// Line-oriented key=value experiment configuration.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "lipteich/hypkernel.hpp"

namespace lipteich::tools {

struct ExperimentConfig {
  CollarConstants eps;
  std::uint64_t seed = 1;
  // Unset fields fall back to the experiment's own default.
  std::optional<int> samples;
  std::optional<int> cutoff;
  std::optional<int> grid;
  std::optional<double> l_min;
  std::optional<double> l_max;
  std::optional<double> twist_max;
  int n_min = 1;
  int n_max = 6;

  // Where eps0 / eps1 were set, for error messages ("line 3", "--set").
  std::string eps0_origin = "default";
  std::string eps1_origin = "default";
};

/// Applies one key=value pair. `origin` names the source in error messages.
/// Throws ConfigError for unknown keys or unparsable values.
void apply_setting(ExperimentConfig& cfg, std::string_view key, std::string_view value, const std::string& origin);

/// Parses `text` on top of `base` without range checks. Blank lines and lines
/// starting with '#' are ignored.
ExperimentConfig parse_config(std::string_view text, ExperimentConfig base = {});

/// eps1 < eps0 < Margulis and eps0 / eps1 > 2, plus positivity of counts and
/// ranges. Throws ConfigError.
void check_config(const ExperimentConfig& cfg);

/// parse_config followed by check_config.
ExperimentConfig validate_config(std::string_view text);

}  // namespace lipteich::tools
