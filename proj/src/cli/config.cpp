#include "eamsim/cli/config.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace eamsim::cli {

namespace {

constexpr std::array kKinds{ScenarioKind::triad, ScenarioKind::entropy_map, ScenarioKind::chain,
                            ScenarioKind::five_arm, ScenarioKind::selection_table};

constexpr std::array<std::string_view, 9> kTriadKeys{
    "arm_count", "delta0", "delta1", "tau0", "tau1", "M", "gamma", "t_max", "samples"};
constexpr std::array<std::string_view, 9> kEntropyMapKeys{
    "arm_count", "delta1", "tau1", "M", "t_max", "samples", "gamma_min", "gamma_max",
    "gamma_samples"};
constexpr std::array<std::string_view, 11> kChainKeys{
    "arm_count", "delta1", "tau1", "M", "gamma", "eta", "L", "g_chain", "t_max", "samples",
    "front_threshold"};
constexpr std::array<std::string_view, 9> kFiveArmKeys{
    "arm_count", "delta0", "delta1", "tau0", "tau1", "M", "gamma", "t_max", "samples"};
constexpr std::array<std::string_view, 2> kSelectionKeys{"arm_count", "M"};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool valid_key(std::string_view key) {
  return !key.empty() && std::all_of(key.begin(), key.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

std::optional<double> read_double(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || !std::isfinite(value)) {
    return std::nullopt;
  }
  return value;
}

std::optional<Complex> read_complex(std::string_view text) {
  text = trim(text);
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')') {
    const auto inner = text.substr(1, text.size() - 2);
    const auto comma = inner.find(',');
    if (comma == std::string_view::npos) return std::nullopt;
    const auto re = read_double(inner.substr(0, comma));
    const auto im = read_double(inner.substr(comma + 1));
    if (!re || !im) return std::nullopt;
    return Complex(*re, *im);
  }
  if (const auto re = read_double(text)) return Complex(*re, 0.0);
  return std::nullopt;
}

// Reads typed fields out of a KeyValueFile, reporting the offending line.
class FieldReader {
 public:
  explicit FieldReader(const KeyValueFile& file) : file_(file) {}

  template <class T, class Parse>
  void read(std::string_view key, T& out, Parse parse, const char* expected) const {
    const auto* entry = file_.find(key);
    if (!entry) return;
    auto value = parse(entry->value);
    if (!value) {
      throw ConfigError("expected " + std::string(expected) + ", got '" + entry->value + "'",
                        entry->key, entry->line);
    }
    out = *value;
  }

  void real(std::string_view key, double& out) const { read(key, out, read_double, "a real number"); }
  void complex(std::string_view key, Complex& out) const {
    read(key, out, read_complex, "a real number or (re,im)");
  }
  void integer(std::string_view key, int& out) const {
    read(key, out,
         [](std::string_view text) -> std::optional<int> {
           text = trim(text);
           int value = 0;
           const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
           if (ec != std::errc() || end != text.data() + text.size()) return std::nullopt;
           return value;
         },
         "an integer");
  }
  // `keyword` selects the empty optional.
  template <class T, class Parse>
  void optional(std::string_view key, std::optional<T>& out, std::string_view keyword, Parse parse,
                const char* expected) const {
    const auto* entry = file_.find(key);
    if (!entry) return;
    if (trim(entry->value) == keyword) {
      out.reset();
      return;
    }
    auto value = parse(entry->value);
    if (!value) {
      throw ConfigError("expected '" + std::string(keyword) + "' or " + expected + ", got '" +
                            entry->value + "'",
                        entry->key, entry->line);
    }
    out = *value;
  }

  int line_of(std::string_view key) const {
    const auto* entry = file_.find(key);
    return entry ? entry->line : 0;
  }

 private:
  const KeyValueFile& file_;
};

void check(bool ok, const FieldReader& reader, std::string_view key, const std::string& message) {
  if (!ok) throw ConfigError(message, std::string(key), reader.line_of(key));
}

}  // namespace

std::string_view to_string(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::triad: return "triad";
    case ScenarioKind::entropy_map: return "entropy-map";
    case ScenarioKind::chain: return "chain";
    case ScenarioKind::five_arm: return "five-arm";
    case ScenarioKind::selection_table: return "selection-table";
  }
  return "unknown";
}

std::optional<ScenarioKind> parse_scenario_kind(std::string_view name) {
  for (const auto kind : kKinds) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

std::span<const ScenarioKind> all_scenario_kinds() { return kKinds; }

ConfigError::ConfigError(const std::string& message, std::string field, int line)
    : Error((line > 0 ? "line " + std::to_string(line) + ": " : std::string()) +
            (field.empty() ? std::string() : field + ": ") + message),
      field_(std::move(field)),
      line_(line) {}

KeyValueFile KeyValueFile::parse(std::string_view text) {
  KeyValueFile file;
  int line_number = 0;
  while (!text.empty()) {
    const auto newline = text.find('\n');
    std::string_view line = text.substr(0, newline);
    text = newline == std::string_view::npos ? std::string_view{} : text.substr(newline + 1);
    ++line_number;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("expected 'key = value'", {}, line_number);
    }
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (!valid_key(key)) throw ConfigError("invalid key '" + std::string(key) + "'", {}, line_number);
    if (value.empty()) throw ConfigError("missing value", std::string(key), line_number);
    if (const auto* previous = file.find(key)) {
      throw ConfigError("duplicate key (first set on line " + std::to_string(previous->line) + ")",
                        std::string(key), line_number);
    }
    file.entries_.push_back({std::string(key), std::string(value), line_number});
  }
  return file;
}

KeyValueFile KeyValueFile::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

void KeyValueFile::set(std::string key, std::string value, int line) {
  for (auto& entry : entries_) {
    if (entry.key == key) {
      entry.value = std::move(value);
      entry.line = line;
      return;
    }
  }
  entries_.push_back({std::move(key), std::move(value), line});
}

const KeyValueFile::Entry* KeyValueFile::find(std::string_view key) const {
  for (const auto& entry : entries_) {
    if (entry.key == key) return &entry;
  }
  return nullptr;
}

std::optional<std::string> KeyValueFile::get(std::string_view key) const {
  if (const auto* entry = find(key)) return entry->value;
  return std::nullopt;
}

std::string KeyValueFile::serialize() const {
  std::string out;
  for (const auto& entry : entries_) out += entry.key + " = " + entry.value + "\n";
  return out;
}

void apply_override(KeyValueFile& file, std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos) {
    throw ConfigError("override must look like key=value, got '" + std::string(assignment) + "'");
  }
  const auto key = trim(assignment.substr(0, eq));
  const auto value = trim(assignment.substr(eq + 1));
  if (!valid_key(key) || value.empty()) {
    throw ConfigError("malformed override '" + std::string(assignment) + "'");
  }
  file.set(std::string(key), std::string(value));
}

std::span<const std::string_view> scenario_keys(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::triad: return kTriadKeys;
    case ScenarioKind::entropy_map: return kEntropyMapKeys;
    case ScenarioKind::chain: return kChainKeys;
    case ScenarioKind::five_arm: return kFiveArmKeys;
    case ScenarioKind::selection_table: return kSelectionKeys;
  }
  return {};
}

double ScenarioConfig::resolved_donor_delta() const {
  if (donor_delta) return *donor_delta;
  return resonant_donor_delta(MoleculeSpec(arm_count, acceptor_delta, acceptor_tau), donor_tau);
}

TriadSpec ScenarioConfig::triad() const {
  const MoleculeSpec acceptor(arm_count, acceptor_delta, acceptor_tau);
  const MoleculeSpec donor(arm_count, resolved_donor_delta(), donor_tau);
  return TriadSpec(donor, acceptor, qc_element, detuning);
}

ChainSpec ScenarioConfig::chain() const {
  return ChainSpec(triad(), half_length, eta, chain_coupling);
}

ScenarioConfig default_config(ScenarioKind kind) {
  ScenarioConfig c;
  c.kind = kind;
  switch (kind) {
    case ScenarioKind::triad:
      // E_1^1 = 1 and M = tau_1 / 10; t_max spans about three Rabi periods.
      c.acceptor_delta = 1.1;
      c.acceptor_tau = 0.1;
      c.donor_tau = 0.1;
      c.qc_element = 0.01;
      c.t_max = 1200.0;
      c.samples = 4801;
      break;
    case ScenarioKind::entropy_map:
      c.acceptor_delta = 1.1;
      c.acceptor_tau = 0.1;
      c.qc_element = 0.01;
      c.t_max = 800.0;
      c.samples = 1601;
      c.detuning_min = 0.98;
      c.detuning_max = 1.02;
      c.detuning_samples = 41;
      break;
    case ScenarioKind::chain:
      // eta = 1, E_1^1 = eta / 2, M = eta / 6.
      c.acceptor_delta = 0.55;
      c.acceptor_tau = 0.05;
      c.qc_element = 1.0 / 6.0;
      c.eta = 1.0;
      c.half_length = 60;
      c.t_max = 40.0;
      c.samples = 401;
      break;
    case ScenarioKind::five_arm: {
      // tau_1 = delta_1 / 15, M = 0.05 E_1^1, gamma = 1.077.
      c.arm_count = 5;
      c.acceptor_delta = 1.0;
      c.acceptor_tau = 1.0 / 15.0;
      c.donor_tau = 0.05;
      const double e11 = mode_energy(MoleculeSpec(5, c.acceptor_delta, c.acceptor_tau), EamLabel(1, 5));
      c.qc_element = 0.05 * e11;
      c.detuning = 1.077;
      c.t_max = 400.0;
      c.samples = 2001;
      break;
    }
    case ScenarioKind::selection_table:
      c.qc_element = 1.0;
      break;
  }
  return c;
}

ScenarioConfig resolve_config(ScenarioKind kind, const KeyValueFile& file) {
  const auto keys = scenario_keys(kind);
  for (const auto& entry : file.entries()) {
    if (std::find(keys.begin(), keys.end(), entry.key) == keys.end()) {
      throw ConfigError("unknown key for scenario " + std::string(to_string(kind)), entry.key,
                        entry.line);
    }
  }

  ScenarioConfig c = default_config(kind);
  const FieldReader reader(file);
  reader.integer("arm_count", c.arm_count);
  reader.optional("delta0", c.donor_delta, "resonant", read_double, "a real number");
  reader.real("delta1", c.acceptor_delta);
  reader.complex("tau0", c.donor_tau);
  reader.complex("tau1", c.acceptor_tau);
  reader.complex("M", c.qc_element);
  reader.real("gamma", c.detuning);
  reader.complex("eta", c.eta);
  reader.integer("L", c.half_length);
  reader.optional("g_chain", c.chain_coupling, "default", read_complex, "a real number or (re,im)");
  reader.real("t_max", c.t_max);
  reader.integer("samples", c.samples);
  reader.real("gamma_min", c.detuning_min);
  reader.real("gamma_max", c.detuning_max);
  reader.integer("gamma_samples", c.detuning_samples);
  reader.real("front_threshold", c.front_threshold);

  switch (kind) {
    case ScenarioKind::triad:
    case ScenarioKind::entropy_map:
    case ScenarioKind::chain:
      check(c.arm_count == 3, reader, "arm_count",
            "scenario " + std::string(to_string(kind)) + " requires arm_count = 3");
      break;
    case ScenarioKind::five_arm:
      check(c.arm_count == 5, reader, "arm_count", "scenario five-arm requires arm_count = 5");
      break;
    case ScenarioKind::selection_table:
      check(c.arm_count >= 3 && c.arm_count % 2 == 1, reader, "arm_count",
            "arm_count must be odd and at least 3");
      break;
  }
  if (kind != ScenarioKind::selection_table) {
    check(c.t_max > 0.0, reader, "t_max", "t_max must be positive");
    check(c.samples >= 2, reader, "samples", "samples must be at least 2");
  }
  if (kind == ScenarioKind::entropy_map) {
    check(c.detuning_samples >= 1, reader, "gamma_samples", "gamma_samples must be at least 1");
    check(c.detuning_min > 0.0, reader, "gamma_min", "gamma_min must be positive");
    check(c.detuning_max >= c.detuning_min, reader, "gamma_max", "gamma_max must not be below gamma_min");
    check(c.detuning_samples > 1 || c.detuning_max == c.detuning_min, reader, "gamma_samples",
          "a single gamma sample needs gamma_min = gamma_max");
  }
  if (kind == ScenarioKind::chain) {
    check(c.half_length >= 1, reader, "L", "L must be at least 1");
    check(c.front_threshold > 0.0 && c.front_threshold < 1.0, reader, "front_threshold",
          "front_threshold must lie in (0, 1)");
  }

  try {
    if (kind == ScenarioKind::chain) {
      (void)c.chain();
    } else if (kind != ScenarioKind::selection_table) {
      (void)c.triad();
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
  return c;
}

std::string format_number(double value) {
  std::array<char, 64> buffer{};
  const auto [end, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  return std::string(buffer.data(), end);
}

std::string format_complex(Complex value) {
  if (value.imag() == 0.0) return format_number(value.real());
  return "(" + format_number(value.real()) + "," + format_number(value.imag()) + ")";
}

KeyValueFile to_key_values(const ScenarioConfig& c) {
  KeyValueFile file;
  for (const auto key : scenario_keys(c.kind)) {
    std::string value;
    if (key == "arm_count") value = std::to_string(c.arm_count);
    else if (key == "delta0") value = c.donor_delta ? format_number(*c.donor_delta) : "resonant";
    else if (key == "delta1") value = format_number(c.acceptor_delta);
    else if (key == "tau0") value = format_complex(c.donor_tau);
    else if (key == "tau1") value = format_complex(c.acceptor_tau);
    else if (key == "M") value = format_complex(c.qc_element);
    else if (key == "gamma") value = format_number(c.detuning);
    else if (key == "eta") value = format_complex(c.eta);
    else if (key == "L") value = std::to_string(c.half_length);
    else if (key == "g_chain") value = c.chain_coupling ? format_complex(*c.chain_coupling) : "default";
    else if (key == "t_max") value = format_number(c.t_max);
    else if (key == "samples") value = std::to_string(c.samples);
    else if (key == "gamma_min") value = format_number(c.detuning_min);
    else if (key == "gamma_max") value = format_number(c.detuning_max);
    else if (key == "gamma_samples") value = std::to_string(c.detuning_samples);
    else if (key == "front_threshold") value = format_number(c.front_threshold);
    file.set(std::string(key), value);
  }
  return file;
}

}  // namespace eamsim::cli
