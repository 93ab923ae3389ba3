#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eamsim/errors.hpp"
#include "eamsim/model.hpp"

namespace eamsim::cli {

enum class ScenarioKind { triad, entropy_map, chain, five_arm, selection_table };

std::string_view to_string(ScenarioKind kind);
std::optional<ScenarioKind> parse_scenario_kind(std::string_view name);
std::span<const ScenarioKind> all_scenario_kinds();

/// Bad configuration input. `line` is 0 when the problem is not tied to a
/// line of a file (command-line overrides, cross-field checks).
class ConfigError : public Error {
 public:
  ConfigError(const std::string& message, std::string field = {}, int line = 0);

  const std::string& field() const noexcept { return field_; }
  int line() const noexcept { return line_; }

 private:
  std::string field_;
  int line_;
};

/// Flat `key = value` text, one entry per line, `#` starts a comment.
/// Keys are unique; entries keep their first-seen order.
class KeyValueFile {
 public:
  struct Entry {
    std::string key;
    std::string value;
    int line = 0;
  };

  static KeyValueFile parse(std::string_view text);
  static KeyValueFile load(const std::filesystem::path& path);

  /// Replaces an existing key in place or appends a new one.
  void set(std::string key, std::string value, int line = 0);
  std::optional<std::string> get(std::string_view key) const;
  const Entry* find(std::string_view key) const;
  const std::vector<Entry>& entries() const noexcept { return entries_; }

  std::string serialize() const;

 private:
  std::vector<Entry> entries_;
};

/// Applies a `key=value` command-line override.
void apply_override(KeyValueFile& file, std::string_view assignment);

/// Every parameter a scenario may read. Which keys a scenario accepts is
/// given by scenario_keys().
struct ScenarioConfig {
  ScenarioKind kind = ScenarioKind::triad;
  int arm_count = 3;
  std::optional<double> donor_delta;  // empty: resonant with the acceptor pair
  double acceptor_delta = 1.0;
  Complex donor_tau = 0.0;
  Complex acceptor_tau = 0.0;
  Complex qc_element = 0.0;
  double detuning = 1.0;
  Complex eta = 1.0;
  int half_length = 1;
  std::optional<Complex> chain_coupling;  // empty: M sqrt(2/3)
  double t_max = 1.0;
  int samples = 2;
  double detuning_min = 1.0;
  double detuning_max = 1.0;
  int detuning_samples = 1;
  double front_threshold = 1e-3;

  double resolved_donor_delta() const;
  TriadSpec triad() const;
  ChainSpec chain() const;

  friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

std::span<const std::string_view> scenario_keys(ScenarioKind kind);

ScenarioConfig default_config(ScenarioKind kind);

/// Defaults for `kind` overlaid with `file`. Unknown keys, malformed values
/// and invariant violations raise ConfigError naming the field and line.
ScenarioConfig resolve_config(ScenarioKind kind, const KeyValueFile& file);

/// The keys of scenario_keys(kind), fully specified, in canonical order.
KeyValueFile to_key_values(const ScenarioConfig& config);

/// Shortest text that reads back as the same double.
std::string format_number(double value);
/// `re` for real values, `(re,im)` otherwise.
std::string format_complex(Complex value);

}  // namespace eamsim::cli
