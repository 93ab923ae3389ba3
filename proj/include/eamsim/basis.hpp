#pragma once

#include <Eigen/Dense>

#include <compare>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "eamsim/model.hpp"

namespace eamsim {

namespace label {

// Triad sector in the arm basis: one excitation on the donor, or one on each
// acceptor.
struct DonorArm {
  int arm;
  friend auto operator<=>(const DonorArm&, const DonorArm&) = default;
};
struct AcceptorPairArms {
  int arm1;
  int arm2;
  friend auto operator<=>(const AcceptorPairArms&, const AcceptorPairArms&) = default;
};

// Triad sector in the EAM basis.
struct DonorEam {
  int q;
  friend auto operator<=>(const DonorEam&, const DonorEam&) = default;
};
struct AcceptorPairEam {
  int q1;
  int q2;
  friend auto operator<=>(const AcceptorPairEam&, const AcceptorPairEam&) = default;
};

// Chain of Bell-pair sites. ChainPair(n) is the pair state on sites -n/+n.
struct ChainDonor {
  friend auto operator<=>(const ChainDonor&, const ChainDonor&) = default;
};
struct ChainPair {
  int site;
  friend auto operator<=>(const ChainPair&, const ChainPair&) = default;
};

// Local states of a single molecule, used for reduced density operators.
struct MoleculeGround {
  friend auto operator<=>(const MoleculeGround&, const MoleculeGround&) = default;
};
struct MoleculeEam {
  int q;
  friend auto operator<=>(const MoleculeEam&, const MoleculeEam&) = default;
};
struct MoleculeArm {
  int arm;
  friend auto operator<=>(const MoleculeArm&, const MoleculeArm&) = default;
};

}  // namespace label

using BasisLabel =
    std::variant<label::DonorArm, label::AcceptorPairArms, label::DonorEam,
                 label::AcceptorPairEam, label::ChainDonor, label::ChainPair,
                 label::MoleculeGround, label::MoleculeEam, label::MoleculeArm>;

/// Which group of label alternatives a basis is drawn from.
enum class LabelFamily { arm_sector, eam_sector, chain, molecule_eam, molecule_arm };

std::string to_string(const BasisLabel& label);

/// Ordered, duplicate-free list of labels fixing the meaning of every matrix
/// row and vector entry. Copies share the label storage.
class LabeledBasis {
 public:
  explicit LabeledBasis(std::vector<BasisLabel> labels);

  std::size_t dimension() const noexcept;
  LabelFamily family() const noexcept;
  const BasisLabel& label(std::size_t index) const;
  std::span<const BasisLabel> labels() const noexcept;

  std::optional<std::size_t> find(const BasisLabel& label) const;
  /// Throws BasisMismatch when the label is absent.
  std::size_t index_of(const BasisLabel& label) const;
  bool contains(const BasisLabel& label) const { return find(label).has_value(); }

  friend bool operator==(const LabeledBasis& a, const LabeledBasis& b);

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
};

using LabelPredicate = std::function<bool(const BasisLabel&)>;

/// Dense Hermitian matrix tied to a basis. Construction enforces
/// max|H - H^dagger| <= 1e-12 * max(1, max|H|).
class HermitianOperator {
 public:
  HermitianOperator(LabeledBasis basis, Eigen::MatrixXcd entries);

  const LabeledBasis& basis() const noexcept { return basis_; }
  const Eigen::MatrixXcd& matrix() const noexcept { return entries_; }
  std::size_t dimension() const noexcept { return basis_.dimension(); }

  Complex element(const BasisLabel& row, const BasisLabel& column) const;

  /// Same operator written in `target`, which must hold the same label set.
  HermitianOperator reordered(const LabeledBasis& target) const;

 private:
  LabeledBasis basis_;
  Eigen::MatrixXcd entries_;
};

/// max_ij |A_ij - conj(A_ji)|.
double hermiticity_defect(const Eigen::MatrixXcd& matrix);

/// The relative Hermiticity tolerance used across the library.
inline constexpr double kHermiticityTolerance = 1e-12;

}  // namespace eamsim
