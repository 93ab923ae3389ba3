// eamsim: run one quantum-cutting scenario and write CSV results.
//
//   eamsim <scenario-kind> [--config <path>] [--out <dir>] [--override key=value ...]
//
// Exit codes: 0 success, 2 configuration error, 3 numerical contract violation.

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "eamsim/cli/config.hpp"
#include "eamsim/cli/scenarios.hpp"

namespace {

constexpr int kConfigErrorExit = 2;
constexpr int kContractExit = 3;

struct Options {
  std::string config_path;
  std::string out_dir = ".";
  std::vector<std::string> overrides;
  bool print_config = false;
};

std::string describe(eamsim::cli::ScenarioKind kind) {
  using eamsim::cli::ScenarioKind;
  switch (kind) {
    case ScenarioKind::triad: return "three-arm donor/acceptor triad time series";
    case ScenarioKind::entropy_map: return "single-acceptor entropy over time and detuning";
    case ScenarioKind::chain: return "Bell-pair wave packets on an acceptor chain";
    case ScenarioKind::five_arm: return "all acceptor EAM pairs of a five-arm triad";
    case ScenarioKind::selection_table: return "cutting matrix elements for every acceptor pair";
  }
  return {};
}

int run(eamsim::cli::ScenarioKind kind, const Options& options) {
  using namespace eamsim::cli;
  eamsim::cli::ScenarioConfig config;
  try {
    KeyValueFile file = options.config_path.empty() ? KeyValueFile{} : KeyValueFile::load(options.config_path);
    for (const auto& assignment : options.overrides) apply_override(file, assignment);
    config = resolve_config(kind, file);
  } catch (const eamsim::Error& e) {
    std::cerr << "config error: " << (options.config_path.empty() ? "" : options.config_path + ": ")
              << e.what() << "\n";
    return kConfigErrorExit;
  }

  if (options.print_config) {
    std::cout << to_key_values(config).serialize();
    return 0;
  }

  try {
    const ScenarioOutput output = run_scenario(config);
    for (const auto& path : write_output(output, options.out_dir)) std::cout << path.string() << "\n";
  } catch (const eamsim::ContractViolation& e) {
    std::cerr << "numerical contract violated: " << e.what() << "\n";
    return kContractExit;
  } catch (const eamsim::BasisMismatch& e) {
    std::cerr << "numerical contract violated: " << e.what() << "\n";
    return kContractExit;
  } catch (const eamsim::cli::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigErrorExit;
  } catch (const eamsim::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfigErrorExit;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Excitonic quantum-cutting simulator"};
  app.require_subcommand(1);

  Options options;
  std::vector<std::pair<CLI::App*, eamsim::cli::ScenarioKind>> commands;
  for (const auto kind : eamsim::cli::all_scenario_kinds()) {
    auto* sub = app.add_subcommand(std::string(eamsim::cli::to_string(kind)), describe(kind));
    sub->add_option("--config", options.config_path, "key = value parameter file");
    sub->add_option("--out", options.out_dir, "output directory")->capture_default_str();
    sub->add_option("--override", options.overrides, "key=value, applied after the config file");
    sub->add_flag("--print-config", options.print_config, "print the resolved configuration and exit");
    commands.emplace_back(sub, kind);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfigErrorExit;
  }

  for (const auto& [sub, kind] : commands) {
    if (sub->parsed()) return run(kind, options);
  }
  return kConfigErrorExit;
}
