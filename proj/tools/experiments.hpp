#pragma once

// The experiment catalogue behind the command-line runner. Each experiment
// produces a CSV table, a one-line summary and the constants it measured.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "config.hpp"

namespace lipteich::tools {

using Cell = std::variant<std::int64_t, double, std::string>;
using Row = std::vector<Cell>;

struct ExperimentResult {
  std::vector<std::string> header;
  std::vector<Row> rows;  // sorted lexicographically before output
  std::map<std::string, double> constants;
  std::vector<std::string> violations;  // empty when every threshold holds
  std::string summary;

  bool passed() const noexcept { return violations.empty(); }
};

struct ExperimentInfo {
  std::string_view name;
  std::string_view description;
  std::string_view defaults;
};

/// All experiments, in listing order.
const std::vector<ExperimentInfo>& experiment_catalogue();

/// Throws ConfigError for an unknown experiment name.
ExperimentResult run_experiment(std::string_view name, const ExperimentConfig& cfg);

/// Header line then one line per row; '.' decimals, 17 significant digits.
void write_csv(const ExperimentResult& result, std::ostream& out);
std::string to_csv(const ExperimentResult& result);

// Thresholds and recorded constants checked by the runner.
inline constexpr double kResidualTol = 1e-9;
inline constexpr double kCaseIdentityTol = 1e-12;
inline constexpr double kTorusEqualityTol = 1e-6;
inline constexpr double kWolpertTol = 1e-9;
inline constexpr double kRefinementChange = 0.10;
inline constexpr double kSlopeTolerance = 0.10;
inline constexpr double kThm1BandWidth = 2.0;
/// Largest |dL - closed form| over the divergence sequence n = 1..6.
inline constexpr double kThm1ClosedFormGap = 0.6;
/// Allowed spread of the product-region error across l floors.
inline constexpr double kProductStability = 2.0;
/// Largest |dL - dL_Gamma| over thin pairs.
inline constexpr double kProductRegionBound = 1.5;
/// Allowed slack in md(a, c) <= md(a, b) + md(b, c) + slack. Observed maximum
/// over 10^4 random triples: -0.23.
inline constexpr double kMarkingTriangleSlack = 0.6931471805599453;

}  // namespace lipteich::tools
