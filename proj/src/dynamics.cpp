#include "eamsim/dynamics.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "eamsim/errors.hpp"

namespace eamsim {

using Index = Eigen::Index;

StateVector::StateVector(LabeledBasis basis, Eigen::VectorXcd amplitudes)
    : basis_(std::move(basis)), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != static_cast<Index>(basis_.dimension())) {
    throw BasisMismatch("state has " + std::to_string(amplitudes_.size()) +
                        " amplitudes for a basis of dimension " +
                        std::to_string(basis_.dimension()));
  }
  const double n = amplitudes_.norm();
  if (!(std::abs(n - 1.0) <= kNormTolerance)) {
    std::ostringstream msg;
    msg << "state vector is not normalized: |psi| = " << n;
    throw ContractViolation(msg.str());
  }
}

StateVector StateVector::basis_state(const LabeledBasis& basis, const BasisLabel& label) {
  Eigen::VectorXcd amplitudes = Eigen::VectorXcd::Zero(static_cast<Index>(basis.dimension()));
  amplitudes(static_cast<Index>(basis.index_of(label))) = 1.0;
  return StateVector(basis, std::move(amplitudes));
}

Complex StateVector::amplitude(const BasisLabel& label) const {
  return amplitudes_(static_cast<Index>(basis_.index_of(label)));
}

Spectrum eigendecompose(const HermitianOperator& hamiltonian) {
  const Eigen::MatrixXcd& h = hamiltonian.matrix();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
  if (solver.info() != Eigen::Success) {
    throw ContractViolation("Hermitian eigensolver did not converge");
  }
  Spectrum spectrum{hamiltonian.basis(), solver.eigenvalues(), solver.eigenvectors()};

  const double scale = h.norm();
  for (Index k = 0; k < spectrum.eigenvalues.size(); ++k) {
    const auto v = spectrum.eigenvectors.col(k);
    const double residual = (h * v - spectrum.eigenvalues(k) * v).norm();
    if (!(residual <= 1e-10 * scale)) {
      std::ostringstream msg;
      msg << "eigenpair " << k << " has residual " << residual;
      throw ContractViolation(msg.str());
    }
  }
  const auto n = static_cast<Index>(hamiltonian.dimension());
  const double unitarity =
      (spectrum.eigenvectors.adjoint() * spectrum.eigenvectors - Eigen::MatrixXcd::Identity(n, n))
          .cwiseAbs()
          .maxCoeff();
  if (!(unitarity <= 1e-10)) {
    throw ContractViolation("eigenvector matrix is not unitary");
  }
  return spectrum;
}

Trajectory::Trajectory(std::vector<double> times, std::vector<StateVector> states)
    : times_(std::move(times)), states_(std::move(states)) {
  if (times_.empty()) throw DomainError("a trajectory needs at least one time point");
  if (times_.size() != states_.size()) {
    throw BasisMismatch("trajectory has different numbers of times and states");
  }
  for (std::size_t i = 1; i < times_.size(); ++i) {
    if (!(times_[i] > times_[i - 1])) throw DomainError("trajectory times must be strictly increasing");
    if (!(states_[i].basis() == states_[0].basis())) {
      throw BasisMismatch("trajectory states use different bases");
    }
  }
}

Trajectory evolve(const HermitianOperator& hamiltonian, const StateVector& initial,
                  std::span<const double> times) {
  if (!(initial.basis() == hamiltonian.basis())) {
    throw BasisMismatch("initial state and Hamiltonian use different bases");
  }
  return evolve(eigendecompose(hamiltonian), initial, times);
}

Trajectory evolve(const Spectrum& spectrum, const StateVector& initial,
                  std::span<const double> times) {
  if (!(initial.basis() == spectrum.basis)) {
    throw BasisMismatch("initial state and spectrum use different bases");
  }
  const Eigen::VectorXcd overlaps = spectrum.eigenvectors.adjoint() * initial.amplitudes();
  std::vector<StateVector> states;
  states.reserve(times.size());
  Eigen::VectorXcd phased(overlaps.size());
  for (const double t : times) {
    if (t == 0.0) {
      states.push_back(initial);
      continue;
    }
    for (Index k = 0; k < overlaps.size(); ++k) {
      phased(k) = std::polar(1.0, -spectrum.eigenvalues(k) * t) * overlaps(k);
    }
    states.emplace_back(spectrum.basis, spectrum.eigenvectors * phased);
  }
  return Trajectory({times.begin(), times.end()}, std::move(states));
}

std::vector<double> uniform_grid(double t_max, std::size_t samples) {
  if (samples < 2) throw DomainError("a time grid needs at least two samples");
  if (!(t_max > 0.0) || !std::isfinite(t_max)) throw DomainError("t_max must be positive");
  std::vector<double> grid(samples);
  const double step = t_max / static_cast<double>(samples - 1);
  for (std::size_t i = 0; i < samples; ++i) grid[i] = step * static_cast<double>(i);
  grid.back() = t_max;
  return grid;
}

namespace {

void require_three_arms(const TriadSpec& spec) {
  if (spec.arm_count() != 3) {
    throw UnsupportedConfiguration("the two-level reduction is only defined for three-arm molecules");
  }
}

}  // namespace

double rabi_frequency(const TriadSpec& spec) {
  require_three_arms(spec);
  const double e11 = mode_energy(spec.acceptor(), EamLabel(1, 3));
  const double m2 = std::norm(spec.qc_element());
  const double detuned = (spec.detuning() - 1.0) * e11;
  return 2.0 * std::sqrt((2.0 * m2 + 3.0 * detuned * detuned) / 3.0);
}

TwoLevelAmplitudes two_level_amplitudes(const TriadSpec& spec, double time) {
  require_three_arms(spec);
  // H = mean + [[-half_gap, g], [conj(g), half_gap]] in (Bell, donor) order,
  // whose propagator is cos(Wt) - i sin(Wt) (H - mean) / W, W = sqrt(half_gap^2 + |g|^2).
  const double bell = 2.0 * mode_energy(spec.acceptor(), EamLabel(1, 3));
  const double donor = spec.detuning() * bell;
  const Complex g = spec.qc_element() * std::sqrt(2.0 / 3.0);
  const double mean = 0.5 * (bell + donor);
  const double half_gap = 0.5 * (donor - bell);
  const double w = std::hypot(half_gap, std::abs(g));
  const Complex global = std::polar(1.0, -mean * time);
  const Complex i(0.0, 1.0);
  if (w == 0.0) return {global, 0.0};
  const double c = std::cos(w * time);
  const double s = std::sin(w * time);
  return {global * (c - i * (half_gap / w) * s), global * (-i * (g / w) * s)};
}

}  // namespace eamsim
