#pragma once

#include <Eigen/Dense>

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "eamsim/basis.hpp"
#include "eamsim/dynamics.hpp"
#include "eamsim/model.hpp"

namespace eamsim {

/// Hermitian, positive semidefinite, unit trace (within 1e-10).
class DensityOperator {
 public:
  DensityOperator(LabeledBasis basis, Eigen::MatrixXcd entries);

  const LabeledBasis& basis() const noexcept { return basis_; }
  const Eigen::MatrixXcd& matrix() const noexcept { return entries_; }
  /// Ascending.
  const Eigen::VectorXd& eigenvalues() const noexcept { return eigenvalues_; }
  double purity() const;

 private:
  LabeledBasis basis_;
  Eigen::MatrixXcd entries_;
  Eigen::VectorXd eigenvalues_;
};

inline constexpr double kTraceTolerance = 1e-10;
inline constexpr double kNegativeEigenvalueTolerance = 1e-12;
inline constexpr double kEntropyCutoff = 1e-14;

/// <pair(q1, q2)| H |donor(q = 0)> for the cutting term: the arm sum
/// M / N^{3/2} sum_j exp(i 2 pi (j-1)(q1+q2)/N) collapses to M / sqrt(N) when
/// q1 + q2 = 0 (mod N) and to exactly zero otherwise.
Complex qc_matrix_element(const EamLabel& q1, const EamLabel& q2, Complex qc_element);

/// The cutting matrix element for every acceptor pair of an N-arm triad.
class SelectionTable {
 public:
  struct Entry {
    EamLabel q1;
    EamLabel q2;
    Complex element;
  };

  SelectionTable(Complex qc_element, int arm_count);

  int arm_count() const noexcept { return arm_count_; }
  const std::vector<Entry>& entries() const noexcept { return entries_; }
  Complex at(int q1, int q2) const;
  std::size_t allowed_count() const;
  /// True when every nonzero entry satisfies q1 + q2 = 0 (mod N).
  bool conserves_eam() const;

 private:
  int arm_count_;
  std::vector<Entry> entries_;
};

/// Reduced state of acceptor 1 in the two-level picture:
/// diag(|u_a|^2 / 2, 1 - |u_a|^2 / 2) over {eam(+1), eam(-1)}.
DensityOperator reduced_density_acceptor1(Complex bell_amplitude);

enum class Molecule { donor, acceptor1, acceptor2 };

/// Reduced density operator of one molecule. The state must live in the
/// arm-sector or EAM-sector basis, whose labels factor into
/// donor x acceptor1 x acceptor2 local states; chain bases do not.
/// The kept basis is ground first, then the excited local labels ascending.
DensityOperator partial_trace(const StateVector& state, Molecule keep);

/// -sum lambda log2 lambda over eigenvalues above kEntropyCutoff.
double von_neumann_entropy(const DensityOperator& rho);

/// Summed population of the labels selected by `group` at every time point.
/// Throws DomainError when the group selects nothing.
std::vector<double> population_by_label(const Trajectory& trajectory, const LabelPredicate& group);

/// Angular frequency of a periodic series from the spacing of its upward
/// crossings of the mid level (average of sampled max and min). Empty when
/// fewer than two crossings are found.
std::optional<double> fitted_angular_frequency(std::span<const double> times,
                                               std::span<const double> values);

/// Outermost chain pair site whose population reaches `threshold`; 0 when
/// none does.
int chain_wavefront(const StateVector& state, double threshold);

}  // namespace eamsim
