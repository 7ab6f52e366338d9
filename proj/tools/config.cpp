#include "config.hpp"

#include <charconv>
#include <limits>

#include "lipteich/error.hpp"
#include "lipteich/io.hpp"

namespace lipteich::tools {

namespace {

[[noreturn]] void fail(const std::string& origin, const std::string& what) {
  throw Error(ErrorCode::ConfigError, origin + ": " + what);
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double real_value(std::string_view key, std::string_view value, const std::string& origin) {
  try {
    return parse_double(value);
  } catch (const Error&) {
    fail(origin, "'" + std::string(key) + "' expects a number, got '" + std::string(value) + "'");
  }
}

template <typename Int>
Int int_value(std::string_view key, std::string_view value, const std::string& origin) {
  Int out{};
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size()) {
    fail(origin, "'" + std::string(key) + "' expects an integer, got '" + std::string(value) + "'");
  }
  return out;
}

}  // namespace

void apply_setting(ExperimentConfig& cfg, std::string_view key, std::string_view value, const std::string& origin) {
  key = trim(key);
  value = trim(value);
  if (key == "eps0") {
    cfg.eps.eps0 = real_value(key, value, origin);
    cfg.eps0_origin = origin;
  } else if (key == "eps1") {
    cfg.eps.eps1 = real_value(key, value, origin);
    cfg.eps1_origin = origin;
  } else if (key == "seed") {
    cfg.seed = int_value<std::uint64_t>(key, value, origin);
  } else if (key == "samples") {
    cfg.samples = int_value<int>(key, value, origin);
  } else if (key == "cutoff") {
    cfg.cutoff = int_value<int>(key, value, origin);
  } else if (key == "grid") {
    cfg.grid = int_value<int>(key, value, origin);
  } else if (key == "l_min") {
    cfg.l_min = real_value(key, value, origin);
  } else if (key == "l_max") {
    cfg.l_max = real_value(key, value, origin);
  } else if (key == "twist_max") {
    cfg.twist_max = real_value(key, value, origin);
  } else if (key == "n_min") {
    cfg.n_min = int_value<int>(key, value, origin);
  } else if (key == "n_max") {
    cfg.n_max = int_value<int>(key, value, origin);
  } else {
    fail(origin, "unknown key '" + std::string(key) + "'");
  }
}

ExperimentConfig parse_config(std::string_view text, ExperimentConfig base) {
  int line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const std::string origin = "line " + std::to_string(line_no);
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) fail(origin, "expected key=value, got '" + std::string(line) + "'");
    apply_setting(base, line.substr(0, eq), line.substr(eq + 1), origin);
  }
  return base;
}

void check_config(const ExperimentConfig& cfg) {
  const double e0 = cfg.eps.eps0;
  const double e1 = cfg.eps.eps1;
  if (!(e1 > 0.0)) fail(cfg.eps1_origin, "eps1 must be positive");
  if (!(e0 < kMargulis)) fail(cfg.eps0_origin, "eps0 must be below the Margulis constant 0.2629");
  if (!(e1 < e0)) fail(cfg.eps1_origin, "eps1 must be smaller than eps0");
  if (!(e0 / e1 > 2.0)) {
    fail(cfg.eps1_origin, "eps0/eps1 must exceed 2 (got " + format_double(e0 / e1) + ")");
  }
  auto positive = [](const std::optional<int>& v) { return !v || *v >= 1; };
  if (!positive(cfg.samples)) fail("config", "samples must be >= 1");
  if (!positive(cfg.cutoff)) fail("config", "cutoff must be >= 1");
  if (cfg.grid && *cfg.grid < 2) fail("config", "grid must be >= 2");
  if (cfg.l_min && !(*cfg.l_min > 0.0)) fail("config", "l_min must be positive");
  if (cfg.l_min && cfg.l_max && !(*cfg.l_min < *cfg.l_max)) fail("config", "l_min must be below l_max");
  if (cfg.twist_max && !(*cfg.twist_max >= 0.0)) fail("config", "twist_max must be non-negative");
  if (!(1 <= cfg.n_min && cfg.n_min <= cfg.n_max)) fail("config", "need 1 <= n_min <= n_max");
}

ExperimentConfig validate_config(std::string_view text) {
  ExperimentConfig cfg = parse_config(text);
  check_config(cfg);
  return cfg;
}

}  // namespace lipteich::tools
