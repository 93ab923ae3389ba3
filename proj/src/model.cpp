#include "eamsim/model.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "eamsim/errors.hpp"

namespace eamsim {

namespace {

void require_odd_arm_count(int arm_count) {
  if (arm_count < 3) {
    throw DomainError("arm count must be at least 3, got " + std::to_string(arm_count));
  }
  if (arm_count % 2 == 0) {
    throw UnsupportedConfiguration("EAM window is only defined for odd arm counts, got " +
                                   std::to_string(arm_count));
  }
}

}  // namespace

MoleculeSpec::MoleculeSpec(int arm_count, double delta, Complex tau)
    : arm_count_(arm_count), delta_(delta), tau_(tau) {
  if (arm_count < 3) {
    throw DomainError("arm count must be at least 3, got " + std::to_string(arm_count));
  }
  if (!std::isfinite(delta)) throw DomainError("arm excitation energy must be finite");
  if (!std::isfinite(tau.real()) || !std::isfinite(tau.imag())) {
    throw DomainError("arm-to-arm hopping must be finite");
  }
}

TriadSpec::TriadSpec(MoleculeSpec donor, MoleculeSpec acceptor, Complex qc_element,
                     double detuning)
    : donor_(donor), acceptor_(acceptor), qc_element_(qc_element), detuning_(detuning) {
  if (donor.arm_count() != acceptor.arm_count()) {
    throw DomainError("donor and acceptor arm counts differ (" +
                      std::to_string(donor.arm_count()) + " vs " +
                      std::to_string(acceptor.arm_count()) + ")");
  }
  if (!(detuning > 0.0) || !std::isfinite(detuning)) {
    throw DomainError("detuning factor must be positive and finite");
  }
  if (!std::isfinite(qc_element.real()) || !std::isfinite(qc_element.imag())) {
    throw DomainError("cutting matrix element must be finite");
  }
}

ChainSpec::ChainSpec(TriadSpec triad, int half_length, Complex eta,
                     std::optional<Complex> donor_coupling)
    : triad_(triad), half_length_(half_length), eta_(eta), donor_coupling_(donor_coupling) {
  if (half_length < 1) {
    throw DomainError("chain half-length must be at least 1, got " + std::to_string(half_length));
  }
  if (!std::isfinite(eta.real()) || !std::isfinite(eta.imag())) {
    throw DomainError("inter-site coupling must be finite");
  }
}

Complex ChainSpec::donor_coupling() const {
  if (donor_coupling_) return *donor_coupling_;
  return triad_.qc_element() * std::sqrt(2.0 / 3.0);
}

int wrap_eam(int q, int arm_count) {
  require_odd_arm_count(arm_count);
  const int half = (arm_count - 1) / 2;
  int r = ((q + half) % arm_count + arm_count) % arm_count;
  return r - half;
}

EamLabel::EamLabel(int q, int arm_count) : q_(q), arm_count_(arm_count) {
  require_odd_arm_count(arm_count);
  const int half = (arm_count - 1) / 2;
  if (q < -half || q > half) {
    throw DomainError("EAM " + std::to_string(q) + " outside the window of a " +
                      std::to_string(arm_count) + "-arm molecule");
  }
}

EamLabel EamLabel::operator-() const { return EamLabel(-q_, arm_count_); }

EamLabel operator+(const EamLabel& a, const EamLabel& b) {
  if (a.arm_count_ != b.arm_count_) {
    throw DomainError("cannot add EAM labels of different arm counts");
  }
  return EamLabel(wrap_eam(a.q_ + b.q_, a.arm_count_), a.arm_count_);
}

std::vector<EamLabel> eam_window(int arm_count) {
  require_odd_arm_count(arm_count);
  const int half = (arm_count - 1) / 2;
  std::vector<EamLabel> window;
  window.reserve(static_cast<std::size_t>(arm_count));
  for (int q = -half; q <= half; ++q) window.emplace_back(q, arm_count);
  return window;
}

double mode_energy(const MoleculeSpec& molecule, const EamLabel& q) {
  if (q.arm_count() != molecule.arm_count()) {
    throw DomainError("EAM label belongs to a " + std::to_string(q.arm_count()) +
                      "-arm window, molecule has " + std::to_string(molecule.arm_count()) +
                      " arms");
  }
  const double phase = 2.0 * std::numbers::pi * q.q() / molecule.arm_count();
  return molecule.delta() + 2.0 * std::abs(molecule.tau()) * std::cos(phase);
}

double resonant_donor_delta(const MoleculeSpec& acceptor, Complex donor_tau) {
  return 2.0 * (acceptor.delta() - std::abs(acceptor.tau())) - 2.0 * std::abs(donor_tau);
}

}  // namespace eamsim
