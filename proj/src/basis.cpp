#include "eamsim/basis.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "eamsim/errors.hpp"

namespace eamsim {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string signed_int(int value) {
  return value > 0 ? "+" + std::to_string(value) : std::to_string(value);
}

// Ground states are shared by both single-molecule families, so they carry
// no family of their own.
std::optional<LabelFamily> family_of(const BasisLabel& label) {
  return std::visit(
      Overloaded{
          [](const label::DonorArm&) -> std::optional<LabelFamily> { return LabelFamily::arm_sector; },
          [](const label::AcceptorPairArms&) -> std::optional<LabelFamily> { return LabelFamily::arm_sector; },
          [](const label::DonorEam&) -> std::optional<LabelFamily> { return LabelFamily::eam_sector; },
          [](const label::AcceptorPairEam&) -> std::optional<LabelFamily> { return LabelFamily::eam_sector; },
          [](const label::ChainDonor&) -> std::optional<LabelFamily> { return LabelFamily::chain; },
          [](const label::ChainPair&) -> std::optional<LabelFamily> { return LabelFamily::chain; },
          [](const label::MoleculeGround&) -> std::optional<LabelFamily> { return std::nullopt; },
          [](const label::MoleculeEam&) -> std::optional<LabelFamily> { return LabelFamily::molecule_eam; },
          [](const label::MoleculeArm&) -> std::optional<LabelFamily> { return LabelFamily::molecule_arm; },
      },
      label);
}

}  // namespace

std::string to_string(const BasisLabel& label) {
  return std::visit(
      Overloaded{
          [](const label::DonorArm& l) { return "donor_arm(" + std::to_string(l.arm) + ")"; },
          [](const label::AcceptorPairArms& l) {
            return "pair_arms(" + std::to_string(l.arm1) + "," + std::to_string(l.arm2) + ")";
          },
          [](const label::DonorEam& l) { return "donor_eam(" + signed_int(l.q) + ")"; },
          [](const label::AcceptorPairEam& l) {
            return "pair_eam(" + signed_int(l.q1) + "," + signed_int(l.q2) + ")";
          },
          [](const label::ChainDonor&) { return std::string("chain_donor"); },
          [](const label::ChainPair& l) { return "chain_pair(" + std::to_string(l.site) + ")"; },
          [](const label::MoleculeGround&) { return std::string("ground"); },
          [](const label::MoleculeEam& l) { return "eam(" + signed_int(l.q) + ")"; },
          [](const label::MoleculeArm& l) { return "arm(" + std::to_string(l.arm) + ")"; },
      },
      label);
}

struct LabeledBasis::Data {
  std::vector<BasisLabel> labels;
  std::map<BasisLabel, std::size_t> index;
  LabelFamily family = LabelFamily::molecule_eam;
};

LabeledBasis::LabeledBasis(std::vector<BasisLabel> labels) {
  if (labels.empty()) throw BasisMismatch("a basis needs at least one label");
  auto data = std::make_shared<Data>();
  std::optional<LabelFamily> family;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!data->index.emplace(labels[i], i).second) {
      throw BasisMismatch("duplicate basis label " + to_string(labels[i]));
    }
    const auto f = family_of(labels[i]);
    if (!f) continue;
    if (family && *family != *f) {
      throw BasisMismatch("basis mixes label families at " + to_string(labels[i]));
    }
    family = f;
  }
  data->family = family.value_or(LabelFamily::molecule_eam);
  data->labels = std::move(labels);
  data_ = std::move(data);
}

std::size_t LabeledBasis::dimension() const noexcept { return data_->labels.size(); }

LabelFamily LabeledBasis::family() const noexcept { return data_->family; }

const BasisLabel& LabeledBasis::label(std::size_t index) const { return data_->labels.at(index); }

std::span<const BasisLabel> LabeledBasis::labels() const noexcept { return data_->labels; }

std::optional<std::size_t> LabeledBasis::find(const BasisLabel& label) const {
  auto it = data_->index.find(label);
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

std::size_t LabeledBasis::index_of(const BasisLabel& label) const {
  if (auto i = find(label)) return *i;
  throw BasisMismatch("label " + to_string(label) + " is not part of the basis");
}

bool operator==(const LabeledBasis& a, const LabeledBasis& b) {
  return a.data_ == b.data_ || a.data_->labels == b.data_->labels;
}

double hermiticity_defect(const Eigen::MatrixXcd& matrix) {
  if (matrix.rows() != matrix.cols()) return INFINITY;
  if (matrix.size() == 0) return 0.0;
  return (matrix - matrix.adjoint()).cwiseAbs().maxCoeff();
}

HermitianOperator::HermitianOperator(LabeledBasis basis, Eigen::MatrixXcd entries)
    : basis_(std::move(basis)), entries_(std::move(entries)) {
  const auto n = static_cast<Eigen::Index>(basis_.dimension());
  if (entries_.rows() != n || entries_.cols() != n) {
    std::ostringstream msg;
    msg << "operator matrix is " << entries_.rows() << "x" << entries_.cols()
        << " but the basis has dimension " << n;
    throw BasisMismatch(msg.str());
  }
  const double scale = std::max(1.0, entries_.cwiseAbs().maxCoeff());
  const double defect = hermiticity_defect(entries_);
  if (!(defect <= kHermiticityTolerance * scale)) {
    std::ostringstream msg;
    msg << "operator is not Hermitian: max|H - H^dagger| = " << defect;
    throw ContractViolation(msg.str());
  }
}

Complex HermitianOperator::element(const BasisLabel& row, const BasisLabel& column) const {
  return entries_(static_cast<Eigen::Index>(basis_.index_of(row)),
                  static_cast<Eigen::Index>(basis_.index_of(column)));
}

HermitianOperator HermitianOperator::reordered(const LabeledBasis& target) const {
  if (target.dimension() != basis_.dimension()) {
    throw BasisMismatch("reordering target has a different dimension");
  }
  std::vector<Eigen::Index> source(target.dimension());
  for (std::size_t i = 0; i < target.dimension(); ++i) {
    source[i] = static_cast<Eigen::Index>(basis_.index_of(target.label(i)));
  }
  const auto n = static_cast<Eigen::Index>(target.dimension());
  Eigen::MatrixXcd out(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) out(r, c) = entries_(source[r], source[c]);
  }
  return HermitianOperator(target, std::move(out));
}

}  // namespace eamsim
