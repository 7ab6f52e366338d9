#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "config.hpp"
#include "experiments.hpp"
#include "lipteich/error.hpp"

namespace {

using lipteich::Error;
using lipteich::ErrorCode;
using namespace lipteich::tools;

constexpr int kExitPass = 0;
constexpr int kExitConfig = 1;
constexpr int kExitThreshold = 2;
constexpr int kExitInternal = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ConfigError, "cannot read config file '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void list_experiments(std::ostream& out) {
  std::size_t width = 0;
  for (const auto& e : experiment_catalogue()) width = std::max(width, e.name.size());
  for (const auto& e : experiment_catalogue()) {
    out << e.name << std::string(width - e.name.size() + 2, ' ') << e.description << "\n"
        << std::string(width + 2, ' ') << "defaults: " << e.defaults << "\n";
  }
}

int run(const std::string& name, const std::string& config_path, const std::vector<std::string>& sets,
        const std::string& out_path, const std::optional<std::uint64_t>& seed) {
  ExperimentConfig cfg;
  if (!config_path.empty()) cfg = parse_config(read_file(config_path));
  for (const auto& kv : sets) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::ConfigError, "--set: expected key=value, got '" + kv + "'");
    apply_setting(cfg, kv.substr(0, eq), kv.substr(eq + 1), "--set " + kv);
  }
  if (seed) cfg.seed = *seed;
  check_config(cfg);

  const ExperimentResult result = run_experiment(name, cfg);
  if (out_path.empty()) {
    write_csv(result, std::cout);
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (file) write_csv(result, file);
    if (!file) throw Error(ErrorCode::WriteError, "cannot write '" + out_path + "'");
  }
  std::cerr << name << ": " << result.summary << "\n";
  for (const auto& v : result.violations) std::cerr << name << ": threshold violated: " << v << "\n";
  return result.passed() ? kExitPass : kExitThreshold;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lipschitz / Teichmuller metric experiments on the once-punctured torus"};
  app.require_subcommand(1);

  auto* list_cmd = app.add_subcommand("list", "list experiments with descriptions and defaults");

  auto* run_cmd = app.add_subcommand("run", "run one experiment and write its CSV table");
  std::string name, config_path, out_path;
  std::vector<std::string> sets;
  std::optional<std::uint64_t> seed;
  run_cmd->add_option("experiment", name, "experiment name (see 'list')")->required();
  run_cmd->add_option("--config", config_path, "key=value config file");
  run_cmd->add_option("--set", sets, "override one key, e.g. --set eps1=0.04")->take_all();
  run_cmd->add_option("--out", out_path, "CSV destination (default: stdout)");
  run_cmd->add_option("--seed", seed, "PRNG seed (overrides the config)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitConfig;
  }

  try {
    if (list_cmd->parsed()) {
      list_experiments(std::cout);
      return kExitPass;
    }
    return run(name, config_path, sets, out_path, seed);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.code() == ErrorCode::ConfigError || e.code() == ErrorCode::WriteError) return kExitConfig;
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
}
