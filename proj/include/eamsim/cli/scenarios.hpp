#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "eamsim/cli/config.hpp"

namespace eamsim::cli {

/// One CSV file: a header line of column names, then numeric rows.
struct Table {
  std::string file_name;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  std::vector<double> column(std::string_view name) const;
};

struct ScenarioOutput {
  ScenarioKind kind;
  std::vector<Table> tables;
  KeyValueFile summary;
};

/// Donor population, Bell-pair population and single-acceptor entropy from
/// the closed-form two-level solution, next to the same quantities from the
/// full arm-sector evolution projected onto the EAM basis.
ScenarioOutput run_triad(const ScenarioConfig& config);
/// Single-acceptor entropy over a (time, detuning) grid.
ScenarioOutput run_entropy_map(const ScenarioConfig& config);
/// Bell-pair wave packets on the acceptor chain.
ScenarioOutput run_chain(const ScenarioConfig& config);
/// Every acceptor EAM pair of the five-arm triad.
ScenarioOutput run_five_arm(const ScenarioConfig& config);
/// Cutting matrix elements for all acceptor pairs.
ScenarioOutput run_selection_table(const ScenarioConfig& config);

ScenarioOutput run_scenario(const ScenarioConfig& config);

/// CSV text, numbers with 17 significant digits.
std::string format_csv(const Table& table);

/// Writes every table plus `<kind>_summary.txt` into `directory` (created if
/// needed) and returns the written paths.
std::vector<std::filesystem::path> write_output(const ScenarioOutput& output,
                                                const std::filesystem::path& directory);

}  // namespace eamsim::cli
