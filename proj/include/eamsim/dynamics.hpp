#pragma once

#include <Eigen/Dense>

#include <span>
#include <vector>

#include "eamsim/basis.hpp"
#include "eamsim/model.hpp"

namespace eamsim {

/// Normalized amplitudes over a labeled basis (|psi| = 1 within 1e-10).
class StateVector {
 public:
  StateVector(LabeledBasis basis, Eigen::VectorXcd amplitudes);

  /// All weight on one label.
  static StateVector basis_state(const LabeledBasis& basis, const BasisLabel& label);

  const LabeledBasis& basis() const noexcept { return basis_; }
  const Eigen::VectorXcd& amplitudes() const noexcept { return amplitudes_; }
  Complex amplitude(const BasisLabel& label) const;
  double population(const BasisLabel& label) const { return std::norm(amplitude(label)); }
  double norm() const { return amplitudes_.norm(); }

 private:
  LabeledBasis basis_;
  Eigen::VectorXcd amplitudes_;
};

inline constexpr double kNormTolerance = 1e-10;

/// Ascending eigenvalues and the unitary matrix of eigenvectors (columns).
struct Spectrum {
  LabeledBasis basis;
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXcd eigenvectors;
};

/// Throws ContractViolation if the residual or unitarity checks fail.
Spectrum eigendecompose(const HermitianOperator& hamiltonian);

/// A time grid with one state per time point.
class Trajectory {
 public:
  Trajectory(std::vector<double> times, std::vector<StateVector> states);

  const std::vector<double>& times() const noexcept { return times_; }
  const std::vector<StateVector>& states() const noexcept { return states_; }
  const LabeledBasis& basis() const { return states_.front().basis(); }
  std::size_t size() const noexcept { return times_.size(); }

 private:
  std::vector<double> times_;
  std::vector<StateVector> states_;
};

/// psi(t) = sum_k v_k exp(-i lambda_k t) <v_k|psi0>. Times must be strictly
/// increasing; t = 0 returns psi0 unchanged.
Trajectory evolve(const HermitianOperator& hamiltonian, const StateVector& initial,
                  std::span<const double> times);
Trajectory evolve(const Spectrum& spectrum, const StateVector& initial,
                  std::span<const double> times);

/// `samples` evenly spaced points on [0, t_max], both ends included.
std::vector<double> uniform_grid(double t_max, std::size_t samples);

/// Angular frequency of donor <-> Bell population transfer in the
/// three-arm two-level reduction.
double rabi_frequency(const TriadSpec& spec);

/// Closed-form solution of the two-level reduction started in the donor.
struct TwoLevelAmplitudes {
  Complex donor;     // u_d
  Complex acceptor;  // u_a, amplitude of the symmetric Bell pair
};
TwoLevelAmplitudes two_level_amplitudes(const TriadSpec& spec, double time);

}  // namespace eamsim
