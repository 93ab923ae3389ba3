#include "eamsim/cli/scenarios.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>

#include "eamsim/dynamics.hpp"
#include "eamsim/hamiltonian.hpp"
#include "eamsim/observables.hpp"

namespace eamsim::cli {

using eamsim::to_string;

namespace {

using Index = Eigen::Index;

constexpr double kGroupSumTolerance = 1e-9;

void require(bool ok, const std::string& message) {
  if (!ok) throw ContractViolation(message);
}

void require_population(double p, std::string_view what) {
  require(p >= -1e-12 && p <= 1.0 + kGroupSumTolerance,
          "population " + std::string(what) + " = " + format_number(p) + " outside [0, 1]");
}

void require_partition(double total, double time) {
  require(std::abs(total - 1.0) <= kGroupSumTolerance,
          "populations sum to " + format_number(total) + " at t = " + format_number(time));
}

std::string optional_number(const std::optional<double>& value) {
  return value ? format_number(*value) : "none";
}

KeyValueFile summary_header(const ScenarioConfig& config) {
  KeyValueFile summary;
  summary.set("scenario", std::string(to_string(config.kind)));
  const KeyValueFile echoed = to_key_values(config);
  for (const auto& entry : echoed.entries()) summary.set(entry.key, entry.value);
  return summary;
}

double binary_entropy_of_bell_weight(double weight) {
  return von_neumann_entropy(reduced_density_acceptor1(std::sqrt(std::clamp(weight, 0.0, 1.0))));
}

}  // namespace

std::vector<double> Table::column(std::string_view name) const {
  const auto it = std::find(columns.begin(), columns.end(), name);
  if (it == columns.end()) throw DomainError("no column " + std::string(name) + " in " + file_name);
  const auto index = static_cast<std::size_t>(it - columns.begin());
  std::vector<double> values;
  values.reserve(rows.size());
  for (const auto& row : rows) values.push_back(row.at(index));
  return values;
}

ScenarioOutput run_triad(const ScenarioConfig& config) {
  const TriadSpec spec = config.triad();
  const auto times = uniform_grid(config.t_max, static_cast<std::size_t>(config.samples));

  const LabeledBasis eam = eam_pair_basis(3);
  const Index donor_eam = static_cast<Index>(eam.index_of(label::DonorEam{0}));
  const Index plus_minus = static_cast<Index>(eam.index_of(label::AcceptorPairEam{+1, -1}));
  const Index minus_plus = static_cast<Index>(eam.index_of(label::AcceptorPairEam{-1, +1}));
  const Index zero_pair = static_cast<Index>(eam.index_of(label::AcceptorPairEam{0, 0}));

  const EamEmbedding embedding = eam_embedding(3);
  const StateVector initial(embedding.arm_basis, embedding.isometry.col(donor_eam));
  const Trajectory oracle = evolve(build_arm_sector(spec), initial, times);

  Table table{"triad_timeseries.csv",
              {"t", "donor", "bell", "s1", "s1_full", "oracle_donor", "oracle_bell",
               "oracle_zero_pair", "oracle_forbidden", "oracle_s1", "oracle_s1_full"},
              {}};
  table.rows.reserve(times.size());
  std::vector<double> donor_series;
  std::vector<double> oracle_donor_series;
  double max_bell = 0.0;
  double max_s1 = 0.0;
  double max_s1_full = 0.0;
  double max_oracle_gap = 0.0;

  for (std::size_t i = 0; i < times.size(); ++i) {
    const double t = times[i];
    const auto [u_d, u_a] = two_level_amplitudes(spec, t);
    const double donor = std::norm(u_d);
    const double bell = std::norm(u_a);
    require_population(donor, "donor");
    require_population(bell, "bell");
    require_partition(donor + bell, t);

    Eigen::VectorXcd bell_state = Eigen::VectorXcd::Zero(static_cast<Index>(eam.dimension()));
    bell_state(donor_eam) = u_d;
    bell_state(plus_minus) = u_a / std::sqrt(2.0);
    bell_state(minus_plus) = u_a / std::sqrt(2.0);
    const double s1 = von_neumann_entropy(reduced_density_acceptor1(u_a));
    const double s1_full =
        von_neumann_entropy(partial_trace(StateVector(eam, bell_state), Molecule::acceptor1));

    const StateVector& arm_state = oracle.states()[i];
    const Eigen::VectorXcd projected = embedding.isometry.adjoint() * arm_state.amplitudes();
    const double o_donor = std::norm(projected(donor_eam));
    const double o_bell = std::norm(projected(plus_minus)) + std::norm(projected(minus_plus));
    const double o_zero = std::norm(projected(zero_pair));
    const double o_forbidden = projected.squaredNorm() - o_donor - o_bell - o_zero;
    require_partition(o_donor + o_bell + o_zero + o_forbidden, t);
    const Complex o_bell_amplitude = (projected(plus_minus) + projected(minus_plus)) / std::sqrt(2.0);
    const double o_s1 = von_neumann_entropy(reduced_density_acceptor1(o_bell_amplitude));
    const double o_s1_full = von_neumann_entropy(partial_trace(arm_state, Molecule::acceptor1));

    table.rows.push_back({t, donor, bell, s1, s1_full, o_donor, o_bell, o_zero,
                          std::max(o_forbidden, 0.0), o_s1, o_s1_full});
    donor_series.push_back(donor);
    oracle_donor_series.push_back(o_donor);
    max_bell = std::max(max_bell, bell);
    max_s1 = std::max(max_s1, s1);
    max_s1_full = std::max(max_s1_full, s1_full);
    max_oracle_gap = std::max(max_oracle_gap, std::abs(donor - o_donor));
  }

  const double omega = rabi_frequency(spec);
  const auto fitted = fitted_angular_frequency(times, donor_series);
  const auto oracle_fitted = fitted_angular_frequency(times, oracle_donor_series);

  KeyValueFile summary = summary_header(config);
  summary.set("e11", format_number(mode_energy(spec.acceptor(), EamLabel(1, 3))));
  summary.set("donor_delta", format_number(spec.donor().delta()));
  summary.set("omega_qc", format_number(omega));
  summary.set("fitted_frequency", optional_number(fitted));
  summary.set("fitted_relative_error",
              fitted && omega > 0.0 ? format_number(std::abs(*fitted - omega) / omega) : "none");
  summary.set("oracle_fitted_frequency", optional_number(oracle_fitted));
  summary.set("max_bell_population", format_number(max_bell));
  summary.set("max_entropy", format_number(max_s1));
  summary.set("max_entropy_full", format_number(max_s1_full));
  summary.set("max_oracle_donor_deviation", format_number(max_oracle_gap));
  return {ScenarioKind::triad, {std::move(table)}, std::move(summary)};
}

ScenarioOutput run_entropy_map(const ScenarioConfig& config) {
  const auto times = uniform_grid(config.t_max, static_cast<std::size_t>(config.samples));
  const int n_gamma = config.detuning_samples;
  std::vector<double> gammas(static_cast<std::size_t>(n_gamma));
  for (int k = 0; k < n_gamma; ++k) {
    gammas[static_cast<std::size_t>(k)] =
        n_gamma == 1 ? config.detuning_min
                     : config.detuning_min + (config.detuning_max - config.detuning_min) * k / (n_gamma - 1);
  }
  std::vector<TriadSpec> specs;
  for (const double gamma : gammas) {
    ScenarioConfig c = config;
    c.detuning = gamma;
    specs.push_back(c.triad());
  }

  Table grid{"entropy_map.csv", {"t", "gamma", "s1"}, {}};
  grid.rows.reserve(times.size() * gammas.size());
  std::vector<double> column_max(gammas.size(), 0.0);
  for (const double t : times) {
    for (std::size_t k = 0; k < gammas.size(); ++k) {
      const double s1 = von_neumann_entropy(reduced_density_acceptor1(two_level_amplitudes(specs[k], t).acceptor));
      require(s1 >= 0.0 && s1 <= 1.0 + 1e-12, "entropy outside [0, 1]");
      grid.rows.push_back({t, gammas[k], s1});
      column_max[k] = std::max(column_max[k], s1);
    }
  }

  Table columns{"entropy_map_columns.csv", {"gamma", "max_s1", "predicted_max_s1", "omega_qc"}, {}};
  for (std::size_t k = 0; k < gammas.size(); ++k) {
    const auto& spec = specs[k];
    const double coupling2 = 2.0 * std::norm(spec.qc_element()) / 3.0;
    const double detuned = (spec.detuning() - 1.0) * mode_energy(spec.acceptor(), EamLabel(1, 3));
    const double denominator = coupling2 + detuned * detuned;
    const double max_weight = denominator > 0.0 ? coupling2 / denominator : 0.0;
    columns.rows.push_back({gammas[k], column_max[k], binary_entropy_of_bell_weight(max_weight),
                            rabi_frequency(spec)});
  }

  KeyValueFile summary = summary_header(config);
  const auto peak = std::max_element(column_max.begin(), column_max.end());
  summary.set("max_entropy", format_number(*peak));
  summary.set("max_entropy_gamma", format_number(gammas[static_cast<std::size_t>(peak - column_max.begin())]));
  summary.set("min_column_max_entropy", format_number(*std::min_element(column_max.begin(), column_max.end())));
  return {ScenarioKind::entropy_map, {std::move(grid), std::move(columns)}, std::move(summary)};
}

ScenarioOutput run_chain(const ScenarioConfig& config) {
  const ChainSpec spec = config.chain();
  const int length = spec.half_length();
  const auto times = uniform_grid(config.t_max, static_cast<std::size_t>(config.samples));
  const HermitianOperator h = build_chain(spec);
  const Trajectory trajectory = evolve(h, StateVector::basis_state(h.basis(), label::ChainDonor{}), times);

  Table populations{"chain_populations.csv", {"t", "chain_donor"}, {}};
  for (int n = 1; n <= length; ++n) populations.columns.push_back(to_string(label::ChainPair{n}));
  populations.columns.push_back("total");
  Table sites{"chain_sites.csv", {"t", "site", "population"}, {}};
  Table front{"chain_wavefront.csv", {"t", "wavefront_site", "light_cone"}, {}};

  const double speed_bound = 2.0 * std::abs(spec.eta());
  double max_norm_error = 0.0;
  int violations = 0;
  std::vector<std::pair<double, double>> front_points;
  for (std::size_t i = 0; i < times.size(); ++i) {
    const double t = times[i];
    const auto& amplitudes = trajectory.states()[i].amplitudes();
    std::vector<double> row{t};
    double total = 0.0;
    for (Index k = 0; k <= length; ++k) {
      const double p = std::norm(amplitudes(k));
      require_population(p, "chain site");
      row.push_back(p);
      total += p;
    }
    require_partition(total, t);
    row.push_back(total);
    populations.rows.push_back(std::move(row));
    max_norm_error = std::max(max_norm_error, std::abs(trajectory.states()[i].norm() - 1.0));

    // Pair site n holds one exciton on each of the molecular sites -n and +n.
    for (int site = -length; site <= length; ++site) {
      sites.rows.push_back({t, static_cast<double>(site), std::norm(amplitudes(std::abs(site)))});
    }

    const int wavefront = chain_wavefront(trajectory.states()[i], config.front_threshold);
    const double cone = speed_bound * t + 2.0;
    if (wavefront > cone) ++violations;
    front.rows.push_back({t, static_cast<double>(wavefront), cone});
    if (wavefront > 0 && wavefront < length) front_points.emplace_back(t, wavefront);
  }

  std::optional<double> speed;
  if (front_points.size() >= 2) {
    double mt = 0.0, mf = 0.0;
    for (const auto& [t, f] : front_points) {
      mt += t;
      mf += f;
    }
    mt /= static_cast<double>(front_points.size());
    mf /= static_cast<double>(front_points.size());
    double num = 0.0, den = 0.0;
    for (const auto& [t, f] : front_points) {
      num += (t - mt) * (f - mf);
      den += (t - mt) * (t - mt);
    }
    if (den > 0.0) speed = num / den;
  }

  KeyValueFile summary = summary_header(config);
  summary.set("site_count", std::to_string(spec.site_count()));
  summary.set("donor_coupling", format_complex(spec.donor_coupling()));
  summary.set("max_norm_error", format_number(max_norm_error));
  summary.set("wavefront_speed", optional_number(speed));
  summary.set("light_cone_speed", format_number(speed_bound));
  summary.set("light_cone_violations", std::to_string(violations));
  return {ScenarioKind::chain, {std::move(populations), std::move(sites), std::move(front)},
          std::move(summary)};
}

ScenarioOutput run_five_arm(const ScenarioConfig& config) {
  const TriadSpec spec = config.triad();
  const int n = spec.arm_count();
  const int half = (n - 1) / 2;
  const auto times = uniform_grid(config.t_max, static_cast<std::size_t>(config.samples));
  const HermitianOperator h = build_eam_pair(spec);
  const LabeledBasis& basis = h.basis();
  const Trajectory trajectory = evolve(h, StateVector::basis_state(basis, label::DonorEam{0}), times);

  Table table{"five_arm_populations.csv", {"t", "donor"}, {}};
  for (int q = 1; q <= half; ++q) table.columns.push_back("pairs_pm" + std::to_string(q));
  table.columns.push_back("pair_00");
  table.columns.push_back("forbidden_max");
  for (std::size_t i = 1; i < basis.dimension(); ++i) table.columns.push_back(to_string(basis.label(i)));

  std::vector<double> group_max(static_cast<std::size_t>(half) + 2, 0.0);
  double forbidden_max = 0.0;
  double symmetry_gap = 0.0;
  for (std::size_t i = 0; i < times.size(); ++i) {
    const StateVector& state = trajectory.states()[i];
    std::vector<double> groups(static_cast<std::size_t>(half) + 2, 0.0);  // donor, |q| groups, (0,0)
    double forbidden = 0.0;
    double total = 0.0;
    std::vector<double> pairs;
    groups[0] = state.population(label::DonorEam{0});
    total += groups[0];
    for (std::size_t k = 1; k < basis.dimension(); ++k) {
      const auto& pair = std::get<label::AcceptorPairEam>(basis.label(k));
      const double p = std::norm(state.amplitudes()(static_cast<Index>(k)));
      require_population(p, to_string(basis.label(k)));
      pairs.push_back(p);
      total += p;
      if (wrap_eam(pair.q1 + pair.q2, n) != 0) {
        forbidden = std::max(forbidden, p);
      } else if (pair.q1 == 0) {
        groups[static_cast<std::size_t>(half) + 1] += p;
      } else {
        groups[static_cast<std::size_t>(std::abs(pair.q1))] += p;
        if (pair.q1 > 0) {
          const double mirror = state.population(label::AcceptorPairEam{pair.q2, pair.q1});
          symmetry_gap = std::max(symmetry_gap, std::abs(p - mirror));
        }
      }
    }
    require_partition(total, times[i]);

    std::vector<double> row{times[i]};
    row.insert(row.end(), groups.begin(), groups.end());
    row.push_back(forbidden);
    row.insert(row.end(), pairs.begin(), pairs.end());
    table.rows.push_back(std::move(row));
    for (std::size_t g = 0; g < groups.size(); ++g) group_max[g] = std::max(group_max[g], groups[g]);
    forbidden_max = std::max(forbidden_max, forbidden);
  }

  KeyValueFile summary = summary_header(config);
  summary.set("e11", format_number(mode_energy(spec.acceptor(), EamLabel(1, n))));
  summary.set("donor_delta", format_number(spec.donor().delta()));
  summary.set("dimension", std::to_string(basis.dimension()));
  summary.set("min_donor_population", format_number(std::min_element(
                                          table.rows.begin(), table.rows.end(),
                                          [](const auto& a, const auto& b) { return a[1] < b[1]; })->at(1)));
  for (int q = 1; q <= half; ++q) {
    summary.set("max_pairs_pm" + std::to_string(q), format_number(group_max[static_cast<std::size_t>(q)]));
  }
  summary.set("max_pair_00", format_number(group_max.back()));
  summary.set("max_forbidden", format_number(forbidden_max));
  summary.set("max_symmetry_deviation", format_number(symmetry_gap));
  return {ScenarioKind::five_arm, {std::move(table)}, std::move(summary)};
}

ScenarioOutput run_selection_table(const ScenarioConfig& config) {
  const SelectionTable selection(config.qc_element, config.arm_count);
  Table table{"selection_table.csv", {"q1", "q2", "re", "im", "magnitude", "allowed"}, {}};
  for (const auto& e : selection.entries()) {
    table.rows.push_back({static_cast<double>(e.q1.q()), static_cast<double>(e.q2.q()), e.element.real(),
                          e.element.imag(), std::abs(e.element), e.element != 0.0 ? 1.0 : 0.0});
  }
  KeyValueFile summary = summary_header(config);
  summary.set("allowed_count", std::to_string(selection.allowed_count()));
  summary.set("pair_count", std::to_string(selection.entries().size()));
  summary.set("expected_magnitude",
              format_number(std::abs(config.qc_element) / std::sqrt(static_cast<double>(config.arm_count))));
  summary.set("conserves_eam", selection.conserves_eam() ? "true" : "false");
  return {ScenarioKind::selection_table, {std::move(table)}, std::move(summary)};
}

ScenarioOutput run_scenario(const ScenarioConfig& config) {
  switch (config.kind) {
    case ScenarioKind::triad: return run_triad(config);
    case ScenarioKind::entropy_map: return run_entropy_map(config);
    case ScenarioKind::chain: return run_chain(config);
    case ScenarioKind::five_arm: return run_five_arm(config);
    case ScenarioKind::selection_table: return run_selection_table(config);
  }
  throw DomainError("unknown scenario kind");
}

std::string format_csv(const Table& table) {
  std::string out;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) out += ',';
    out += table.columns[c];
  }
  out += '\n';
  std::array<char, 64> buffer{};
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      const auto [end, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), row[c],
                                           std::chars_format::general, 17);
      out.append(buffer.data(), end);
    }
    out += '\n';
  }
  return out;
}

std::vector<std::filesystem::path> write_output(const ScenarioOutput& output,
                                                const std::filesystem::path& directory) {
  std::filesystem::create_directories(directory);
  std::vector<std::filesystem::path> written;
  auto write = [&](const std::string& name, const std::string& text) {
    const auto path = directory / name;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + path.string());
    out << text;
    if (!out) throw Error("failed writing " + path.string());
    written.push_back(path);
  };
  for (const auto& table : output.tables) write(table.file_name, format_csv(table));
  std::string summary_name(to_string(output.kind));
  std::replace(summary_name.begin(), summary_name.end(), '-', '_');
  write(summary_name + "_summary.txt", output.summary.serialize());
  return written;
}

}  // namespace eamsim::cli
