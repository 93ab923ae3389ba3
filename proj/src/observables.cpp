#include "eamsim/observables.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numbers>
#include <set>
#include <sstream>
#include <tuple>

#include "eamsim/errors.hpp"

namespace eamsim {

using Index = Eigen::Index;

DensityOperator::DensityOperator(LabeledBasis basis, Eigen::MatrixXcd entries)
    : basis_(std::move(basis)), entries_(std::move(entries)) {
  const auto n = static_cast<Index>(basis_.dimension());
  if (entries_.rows() != n || entries_.cols() != n) {
    throw BasisMismatch("density matrix dimension does not match its basis");
  }
  const double scale = std::max(1.0, entries_.cwiseAbs().maxCoeff());
  if (!(hermiticity_defect(entries_) <= kHermiticityTolerance * scale)) {
    throw ContractViolation("density operator is not Hermitian");
  }
  const Complex trace = entries_.trace();
  if (!(std::abs(trace - Complex(1.0, 0.0)) <= kTraceTolerance)) {
    std::ostringstream msg;
    msg << "density operator trace is " << trace.real() << ", expected 1";
    throw ContractViolation(msg.str());
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(entries_, Eigen::EigenvaluesOnly);
  eigenvalues_ = solver.eigenvalues();
  if (!(eigenvalues_.minCoeff() >= -kNegativeEigenvalueTolerance)) {
    std::ostringstream msg;
    msg << "density operator has negative eigenvalue " << eigenvalues_.minCoeff();
    throw ContractViolation(msg.str());
  }
}

double DensityOperator::purity() const { return (entries_ * entries_).trace().real(); }

Complex qc_matrix_element(const EamLabel& q1, const EamLabel& q2, Complex qc_element) {
  if (q1.arm_count() != q2.arm_count()) {
    throw DomainError("EAM labels belong to different arm counts");
  }
  const int n = q1.arm_count();
  if ((q1 + q2).q() != 0) return {0.0, 0.0};
  return qc_element / std::sqrt(static_cast<double>(n));
}

SelectionTable::SelectionTable(Complex qc_element, int arm_count) : arm_count_(arm_count) {
  const auto window = eam_window(arm_count);
  entries_.reserve(window.size() * window.size());
  for (const auto& q1 : window) {
    for (const auto& q2 : window) entries_.push_back({q1, q2, qc_matrix_element(q1, q2, qc_element)});
  }
}

Complex SelectionTable::at(int q1, int q2) const {
  const EamLabel a(q1, arm_count_);
  const EamLabel b(q2, arm_count_);
  for (const auto& e : entries_) {
    if (e.q1 == a && e.q2 == b) return e.element;
  }
  throw DomainError("pair not in selection table");
}

std::size_t SelectionTable::allowed_count() const {
  return static_cast<std::size_t>(std::count_if(entries_.begin(), entries_.end(),
                                                [](const Entry& e) { return e.element != 0.0; }));
}

bool SelectionTable::conserves_eam() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Entry& e) {
    return e.element == 0.0 || (e.q1 + e.q2).q() == 0;
  });
}

DensityOperator reduced_density_acceptor1(Complex bell_amplitude) {
  double weight = std::norm(bell_amplitude);
  if (weight > 1.0 + kNormTolerance) throw DomainError("Bell amplitude exceeds unit modulus");
  weight = std::min(weight, 1.0);
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(2, 2);
  rho(0, 0) = weight / 2.0;
  rho(1, 1) = 1.0 - weight / 2.0;
  return DensityOperator(LabeledBasis({label::MoleculeEam{+1}, label::MoleculeEam{-1}}), rho);
}

namespace {

using LocalStates = std::tuple<BasisLabel, BasisLabel, BasisLabel>;

LocalStates factorize(const BasisLabel& l) {
  const BasisLabel ground = label::MoleculeGround{};
  if (auto* d = std::get_if<label::DonorArm>(&l)) return {label::MoleculeArm{d->arm}, ground, ground};
  if (auto* p = std::get_if<label::AcceptorPairArms>(&l)) {
    return {ground, label::MoleculeArm{p->arm1}, label::MoleculeArm{p->arm2}};
  }
  if (auto* d = std::get_if<label::DonorEam>(&l)) return {label::MoleculeEam{d->q}, ground, ground};
  if (auto* p = std::get_if<label::AcceptorPairEam>(&l)) {
    return {ground, label::MoleculeEam{p->q1}, label::MoleculeEam{p->q2}};
  }
  throw ContractViolation("label " + to_string(l) +
                          " has no donor x acceptor x acceptor factorization");
}

}  // namespace

DensityOperator partial_trace(const StateVector& state, Molecule keep) {
  const auto& basis = state.basis();
  const auto kept_slot = static_cast<std::size_t>(keep);

  std::vector<std::pair<BasisLabel, std::pair<BasisLabel, BasisLabel>>> split;
  split.reserve(basis.dimension());
  std::set<BasisLabel> kept_labels;
  for (const auto& l : basis.labels()) {
    auto [donor, first, second] = factorize(l);
    std::array<BasisLabel, 3> slots{donor, first, second};
    std::vector<BasisLabel> rest;
    for (std::size_t s = 0; s < 3; ++s) {
      if (s != kept_slot) rest.push_back(slots[s]);
    }
    kept_labels.insert(slots[kept_slot]);
    split.push_back({slots[kept_slot], {rest[0], rest[1]}});
  }

  LabeledBasis local(std::vector<BasisLabel>(kept_labels.begin(), kept_labels.end()));
  std::map<std::pair<BasisLabel, BasisLabel>, std::vector<std::pair<Index, Complex>>> by_environment;
  for (std::size_t i = 0; i < split.size(); ++i) {
    by_environment[split[i].second].emplace_back(static_cast<Index>(local.index_of(split[i].first)),
                                                 state.amplitudes()(static_cast<Index>(i)));
  }

  const auto n = static_cast<Index>(local.dimension());
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(n, n);
  for (const auto& [environment, members] : by_environment) {
    for (const auto& [a, psi_a] : members) {
      for (const auto& [b, psi_b] : members) rho(a, b) += psi_a * std::conj(psi_b);
    }
  }
  return DensityOperator(std::move(local), std::move(rho));
}

double von_neumann_entropy(const DensityOperator& rho) {
  double entropy = 0.0;
  for (const double lambda : rho.eigenvalues()) {
    if (lambda > kEntropyCutoff) entropy -= lambda * std::log2(lambda);
  }
  return std::max(entropy, 0.0);
}

std::vector<double> population_by_label(const Trajectory& trajectory, const LabelPredicate& group) {
  std::vector<Index> members;
  const auto& basis = trajectory.basis();
  for (std::size_t i = 0; i < basis.dimension(); ++i) {
    if (group(basis.label(i))) members.push_back(static_cast<Index>(i));
  }
  if (members.empty()) throw DomainError("population group selects no basis label");
  std::vector<double> series;
  series.reserve(trajectory.size());
  for (const auto& state : trajectory.states()) {
    double total = 0.0;
    for (const Index i : members) total += std::norm(state.amplitudes()(i));
    series.push_back(total);
  }
  return series;
}

std::optional<double> fitted_angular_frequency(std::span<const double> times,
                                               std::span<const double> values) {
  if (times.size() != values.size()) throw DomainError("times and values differ in length");
  if (values.size() < 3) return std::nullopt;
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  if (!(*hi - *lo > 1e-12 * std::max(1.0, std::abs(*hi)))) return std::nullopt;
  const double level = 0.5 * (*hi + *lo);

  std::vector<double> crossings;
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    if (values[i] < level && values[i + 1] >= level) {
      const double fraction = (level - values[i]) / (values[i + 1] - values[i]);
      crossings.push_back(times[i] + fraction * (times[i + 1] - times[i]));
    }
  }
  if (crossings.size() < 2) return std::nullopt;
  const double span = crossings.back() - crossings.front();
  return 2.0 * std::numbers::pi * static_cast<double>(crossings.size() - 1) / span;
}

int chain_wavefront(const StateVector& state, double threshold) {
  int front = 0;
  const auto& basis = state.basis();
  for (std::size_t i = 0; i < basis.dimension(); ++i) {
    if (const auto* pair = std::get_if<label::ChainPair>(&basis.label(i))) {
      if (std::norm(state.amplitudes()(static_cast<Index>(i))) >= threshold) {
        front = std::max(front, pair->site);
      }
    }
  }
  return front;
}

}  // namespace eamsim
