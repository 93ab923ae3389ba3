#include "eamsim/hamiltonian.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "eamsim/errors.hpp"
#include "eamsim/observables.hpp"

namespace eamsim {

namespace {

using Index = Eigen::Index;

void require_three_arms(const TriadSpec& spec, const char* what) {
  if (spec.arm_count() != 3) {
    throw UnsupportedConfiguration(std::string(what) + " is only defined for three-arm molecules, got N = " +
                                   std::to_string(spec.arm_count()));
  }
}

// Cyclic nearest neighbour of a 1-based arm index.
int next_arm(int arm, int arm_count) { return arm % arm_count + 1; }

// Adds amplitude `value` for the transition from -> to, plus its conjugate.
void add_hop(Eigen::MatrixXcd& h, Index from, Index to, Complex value) {
  h(to, from) += value;
  h(from, to) += std::conj(value);
}

double acceptor_bell_energy(const TriadSpec& spec) {
  return 2.0 * mode_energy(spec.acceptor(), EamLabel(1, spec.arm_count()));
}

}  // namespace

LabeledBasis arm_sector_basis(int arm_count) {
  if (arm_count < 3) throw DomainError("arm count must be at least 3");
  std::vector<BasisLabel> labels;
  labels.reserve(static_cast<std::size_t>(arm_count + arm_count * arm_count));
  for (int j = 1; j <= arm_count; ++j) labels.emplace_back(label::DonorArm{j});
  for (int s = 1; s <= arm_count; ++s) {
    for (int t = 1; t <= arm_count; ++t) labels.emplace_back(label::AcceptorPairArms{s, t});
  }
  return LabeledBasis(std::move(labels));
}

LabeledBasis eam_pair_basis(int arm_count) {
  const auto window = eam_window(arm_count);
  std::vector<BasisLabel> labels;
  labels.reserve(window.size() * window.size() + 1);
  labels.emplace_back(label::DonorEam{0});
  for (const auto& q1 : window) {
    for (const auto& q2 : window) labels.emplace_back(label::AcceptorPairEam{q1.q(), q2.q()});
  }
  return LabeledBasis(std::move(labels));
}

LabeledBasis chain_basis(int half_length) {
  if (half_length < 1) throw DomainError("chain half-length must be at least 1");
  std::vector<BasisLabel> labels;
  labels.reserve(static_cast<std::size_t>(half_length) + 1);
  labels.emplace_back(label::ChainDonor{});
  for (int n = 1; n <= half_length; ++n) labels.emplace_back(label::ChainPair{n});
  return LabeledBasis(std::move(labels));
}

LabeledBasis two_level_basis() {
  return LabeledBasis({label::ChainPair{1}, label::ChainDonor{}});
}

LabeledBasis molecule_arm_basis(int arm_count) {
  if (arm_count < 3) throw DomainError("arm count must be at least 3");
  std::vector<BasisLabel> labels;
  for (int j = 1; j <= arm_count; ++j) labels.emplace_back(label::MoleculeArm{j});
  return LabeledBasis(std::move(labels));
}

HermitianOperator build_single_molecule(const MoleculeSpec& molecule) {
  const int n = molecule.arm_count();
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(n, n);
  for (int j = 1; j <= n; ++j) {
    h(j - 1, j - 1) = molecule.delta();
    add_hop(h, j - 1, next_arm(j, n) - 1, molecule.tau());
  }
  return HermitianOperator(molecule_arm_basis(n), std::move(h));
}

HermitianOperator build_arm_sector(const TriadSpec& spec) {
  const int n = spec.arm_count();
  LabeledBasis basis = arm_sector_basis(n);
  const auto dim = static_cast<Index>(basis.dimension());
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);

  auto donor = [&](int j) { return static_cast<Index>(j - 1); };
  auto pair = [&](int s, int t) { return static_cast<Index>(n + (s - 1) * n + (t - 1)); };

  const double gamma = spec.detuning();
  const double acceptor_delta = spec.acceptor().delta();
  const Complex acceptor_tau = spec.acceptor().tau();
  for (int j = 1; j <= n; ++j) {
    h(donor(j), donor(j)) = gamma * spec.donor().delta();
    add_hop(h, donor(j), donor(next_arm(j, n)), gamma * spec.donor().tau());
  }
  for (int s = 1; s <= n; ++s) {
    for (int t = 1; t <= n; ++t) {
      h(pair(s, t), pair(s, t)) = 2.0 * acceptor_delta;
      add_hop(h, pair(s, t), pair(next_arm(s, n), t), acceptor_tau);
      add_hop(h, pair(s, t), pair(s, next_arm(t, n)), acceptor_tau);
    }
  }
  // Cutting acts arm by arm: the donor exciton on arm j becomes one exciton
  // on arm j of each acceptor.
  for (int j = 1; j <= n; ++j) add_hop(h, donor(j), pair(j, j), spec.qc_element());

  return HermitianOperator(std::move(basis), std::move(h));
}

HermitianOperator build_eam_pair(const TriadSpec& spec) {
  const int n = spec.arm_count();
  const auto window = eam_window(n);
  LabeledBasis basis = eam_pair_basis(n);
  const auto dim = static_cast<Index>(basis.dimension());
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);

  const EamLabel zero(0, n);
  h(0, 0) = spec.detuning() * mode_energy(spec.donor(), zero);
  Index row = 1;
  for (const auto& q1 : window) {
    for (const auto& q2 : window) {
      h(row, row) = mode_energy(spec.acceptor(), q1) + mode_energy(spec.acceptor(), q2);
      const Complex coupling = qc_matrix_element(q1, q2, spec.qc_element());
      h(row, 0) = coupling;
      h(0, row) = std::conj(coupling);
      ++row;
    }
  }
  return HermitianOperator(std::move(basis), std::move(h));
}

HermitianOperator build_two_level(const TriadSpec& spec) {
  require_three_arms(spec, "the two-level reduction");
  const double bell = acceptor_bell_energy(spec);
  const Complex coupling = spec.qc_element() * std::sqrt(2.0 / 3.0);
  Eigen::MatrixXcd h(2, 2);
  h << bell, coupling, std::conj(coupling), spec.detuning() * bell;
  return HermitianOperator(two_level_basis(), std::move(h));
}

HermitianOperator build_chain(const ChainSpec& spec) {
  require_three_arms(spec.triad(), "the acceptor chain");
  const int length = spec.half_length();
  LabeledBasis basis = chain_basis(length);
  const auto dim = static_cast<Index>(basis.dimension());
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);

  const double bell = acceptor_bell_energy(spec.triad());
  h(0, 0) = spec.triad().detuning() * bell;
  for (Index site = 1; site <= length; ++site) h(site, site) = bell;
  add_hop(h, 0, 1, spec.donor_coupling());
  for (Index site = 1; site < length; ++site) add_hop(h, site, site + 1, spec.eta());

  return HermitianOperator(std::move(basis), std::move(h));
}

Complex twisted_amplitude(int arm, int q, int arm_count) {
  const double phase = 2.0 * std::numbers::pi * (arm - 1) * q / arm_count;
  return std::polar(1.0 / std::sqrt(static_cast<double>(arm_count)), phase);
}

EamEmbedding eam_embedding(int arm_count) {
  const int n = arm_count;
  LabeledBasis arm = arm_sector_basis(n);
  LabeledBasis eam = eam_pair_basis(n);
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(static_cast<Index>(arm.dimension()),
                                              static_cast<Index>(eam.dimension()));
  for (int j = 1; j <= n; ++j) u(j - 1, 0) = twisted_amplitude(j, 0, n);
  for (std::size_t col = 1; col < eam.dimension(); ++col) {
    const auto& pair = std::get<label::AcceptorPairEam>(eam.label(col));
    for (int s = 1; s <= n; ++s) {
      for (int t = 1; t <= n; ++t) {
        u(n + (s - 1) * n + (t - 1), static_cast<Index>(col)) =
            twisted_amplitude(s, pair.q1, n) * twisted_amplitude(t, pair.q2, n);
      }
    }
  }
  return {std::move(arm), std::move(eam), std::move(u)};
}

}  // namespace eamsim
