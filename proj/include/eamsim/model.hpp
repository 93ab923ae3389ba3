#pragma once

#include <complex>
#include <compare>
#include <optional>
#include <vector>

namespace eamsim {

using Complex = std::complex<double>;

/// Tight-binding data of one N-arm centrosymmetric molecule: every arm has a
/// single excited level at `delta`, and nearest-neighbour arms are coupled by
/// the (complex) hopping `tau`. Energies are in a caller-chosen unit, hbar = 1.
class MoleculeSpec {
 public:
  MoleculeSpec(int arm_count, double delta, Complex tau);

  int arm_count() const noexcept { return arm_count_; }
  double delta() const noexcept { return delta_; }
  Complex tau() const noexcept { return tau_; }

  friend bool operator==(const MoleculeSpec&, const MoleculeSpec&) = default;

 private:
  int arm_count_;
  double delta_;
  Complex tau_;
};

/// Donor sandwiched between two identical acceptors. `qc_element` is the
/// arm-to-arm cutting matrix element M; `detuning` multiplies the donor
/// energy (1 is resonant).
class TriadSpec {
 public:
  TriadSpec(MoleculeSpec donor, MoleculeSpec acceptor, Complex qc_element,
            double detuning = 1.0);

  const MoleculeSpec& donor() const noexcept { return donor_; }
  const MoleculeSpec& acceptor() const noexcept { return acceptor_; }
  Complex qc_element() const noexcept { return qc_element_; }
  double detuning() const noexcept { return detuning_; }
  int arm_count() const noexcept { return donor_.arm_count(); }

  friend bool operator==(const TriadSpec&, const TriadSpec&) = default;

 private:
  MoleculeSpec donor_;
  MoleculeSpec acceptor_;
  Complex qc_element_;
  double detuning_;
};

/// Donor at site 0 with `half_length` acceptor sites on each side (2L+1 sites
/// in total). Pair states on sites -n/+n hop with `eta`. `donor_coupling`
/// overrides the donor <-> innermost-pair coupling, which otherwise equals
/// the two-level Bell coupling M*sqrt(2/3).
class ChainSpec {
 public:
  ChainSpec(TriadSpec triad, int half_length, Complex eta,
            std::optional<Complex> donor_coupling = std::nullopt);

  const TriadSpec& triad() const noexcept { return triad_; }
  int half_length() const noexcept { return half_length_; }
  int site_count() const noexcept { return 2 * half_length_ + 1; }
  Complex eta() const noexcept { return eta_; }
  Complex donor_coupling() const;
  bool has_coupling_override() const noexcept { return donor_coupling_.has_value(); }

 private:
  TriadSpec triad_;
  int half_length_;
  Complex eta_;
  std::optional<Complex> donor_coupling_;
};

/// Excitonic angular momentum q of an N-arm molecule, always stored inside
/// the symmetric window [-(N-1)/2, (N-1)/2]. Addition wraps modulo N.
class EamLabel {
 public:
  EamLabel(int q, int arm_count);

  int q() const noexcept { return q_; }
  int arm_count() const noexcept { return arm_count_; }

  EamLabel operator-() const;
  friend EamLabel operator+(const EamLabel& a, const EamLabel& b);

  friend bool operator==(const EamLabel&, const EamLabel&) = default;
  friend auto operator<=>(const EamLabel&, const EamLabel&) = default;

 private:
  int q_;
  int arm_count_;
};

/// Maps any integer onto the symmetric EAM window of an odd arm count.
int wrap_eam(int q, int arm_count);

/// The allowed EAM labels for N arms, ascending. Even N is rejected.
std::vector<EamLabel> eam_window(int arm_count);

/// E_q = delta + 2|tau| cos(2 pi q / N).
double mode_energy(const MoleculeSpec& molecule, const EamLabel& q);

/// Donor on-arm energy that puts the donor's zero-EAM level at twice the
/// acceptor q = 1 level: delta_0 = 2(delta_1 - |tau_1|) - 2|tau_0|.
double resonant_donor_delta(const MoleculeSpec& acceptor, Complex donor_tau);

}  // namespace eamsim
