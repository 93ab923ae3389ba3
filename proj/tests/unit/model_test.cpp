#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "eamsim/errors.hpp"
#include "eamsim/model.hpp"
#include "oracle.hpp"

using namespace eamsim;

namespace {

std::vector<int> qs(const std::vector<EamLabel>& window) {
  std::vector<int> out;
  for (const auto& l : window) out.push_back(l.q());
  return out;
}

}  // namespace

TEST(EamWindow, ThreeArms) { EXPECT_EQ(qs(eam_window(3)), (std::vector<int>{-1, 0, 1})); }

TEST(EamWindow, FiveArms) { EXPECT_EQ(qs(eam_window(5)), (std::vector<int>{-2, -1, 0, 1, 2})); }

TEST(EamWindow, EvenArmCountIsUnsupported) {
  EXPECT_THROW(eam_window(4), UnsupportedConfiguration);
  EXPECT_THROW(eam_window(6), UnsupportedConfiguration);
  EXPECT_THROW(eam_window(1), DomainError);
}

TEST(EamLabel, AdditionWrapsIntoWindow) {
  EXPECT_EQ((EamLabel(1, 3) + EamLabel(1, 3)).q(), -1);
  EXPECT_EQ((EamLabel(-1, 3) + EamLabel(-1, 3)).q(), 1);
  EXPECT_EQ((EamLabel(2, 5) + EamLabel(2, 5)).q(), -1);
  EXPECT_EQ((EamLabel(2, 5) + EamLabel(-2, 5)).q(), 0);
  EXPECT_EQ((-EamLabel(2, 5)).q(), -2);
  EXPECT_THROW(EamLabel(2, 3), DomainError);
  EXPECT_THROW(EamLabel(1, 3) + EamLabel(1, 5), DomainError);
}

TEST(ModeEnergy, Examples) {
  const MoleculeSpec three(3, 2.0, 0.5);
  EXPECT_DOUBLE_EQ(mode_energy(three, EamLabel(0, 3)), 3.0);
  EXPECT_NEAR(mode_energy(three, EamLabel(1, 3)), 1.5, 1e-15);
  EXPECT_NEAR(mode_energy(three, EamLabel(-1, 3)), 1.5, 1e-15);

  const MoleculeSpec five(5, 1.0, 1.0 / 15.0);
  EXPECT_NEAR(mode_energy(five, EamLabel(2, 5)), 0.892131, 5e-7);
  EXPECT_DOUBLE_EQ(mode_energy(five, EamLabel(2, 5)), 1.0 + (2.0 / 15.0) * std::cos(4.0 * std::numbers::pi / 5.0));
}

TEST(ModeEnergy, UsesHoppingMagnitudeOnly) {
  const MoleculeSpec real(3, 1.0, 0.2);
  const MoleculeSpec rotated(3, 1.0, std::polar(0.2, 1.1));
  for (int q = -1; q <= 1; ++q) {
    EXPECT_NEAR(mode_energy(real, EamLabel(q, 3)), mode_energy(rotated, EamLabel(q, 3)), 1e-15);
  }
}

TEST(ModeEnergy, RejectsLabelOfOtherMolecule) {
  EXPECT_THROW(mode_energy(MoleculeSpec(5, 1.0, 0.1), EamLabel(1, 3)), DomainError);
}

TEST(ModeEnergy, EvenAndDecreasingInMagnitudeProperty) {
  oracle::Sampler sampler(7);
  for (const int n : {3, 5, 7}) {
    for (int trial = 0; trial < 200; ++trial) {
      const MoleculeSpec m(n, sampler.uniform(-5.0, 5.0), sampler.phase_complex(1e-3, 2.0));
      const int half = (n - 1) / 2;
      for (int q = 1; q <= half; ++q) {
        EXPECT_EQ(mode_energy(m, EamLabel(q, n)), mode_energy(m, EamLabel(-q, n)));
        EXPECT_LT(mode_energy(m, EamLabel(q, n)), mode_energy(m, EamLabel(q - 1, n)));
      }
    }
  }
}

TEST(ResonantDonorDelta, Examples) {
  EXPECT_NEAR(resonant_donor_delta(MoleculeSpec(3, 1.0, 0.1), 0.2), 1.4, 1e-15);
  EXPECT_DOUBLE_EQ(resonant_donor_delta(MoleculeSpec(3, 1.0, 0.0), 0.0), 2.0);
  EXPECT_NEAR(resonant_donor_delta(MoleculeSpec(3, 1.0, 1.0 / 15.0), 0.05), 2.0 * (1.0 - 1.0 / 15.0) - 0.1, 1e-15);
  EXPECT_NEAR(resonant_donor_delta(MoleculeSpec(3, 1.0, 1.0 / 15.0), 0.05), 1.766667, 5e-7);
}

TEST(ResonantDonorDelta, SatisfiesResonanceProperty) {
  oracle::Sampler sampler(11);
  for (int trial = 0; trial < 500; ++trial) {
    const MoleculeSpec acceptor(3, sampler.uniform(0.5, 3.0), sampler.phase_complex(0.0, 0.5));
    const Complex donor_tau = sampler.phase_complex(0.0, 0.5);
    const MoleculeSpec donor(3, resonant_donor_delta(acceptor, donor_tau), donor_tau);
    const double lhs = mode_energy(donor, EamLabel(0, 3));
    const double rhs = 2.0 * mode_energy(acceptor, EamLabel(1, 3));
    EXPECT_NEAR(lhs, rhs, 1e-14);
  }
}

TEST(Specs, InvariantsAreEnforced) {
  EXPECT_THROW(MoleculeSpec(2, 1.0, 0.1), DomainError);
  EXPECT_THROW(MoleculeSpec(3, NAN, 0.1), DomainError);
  const MoleculeSpec a(3, 1.0, 0.1);
  const MoleculeSpec b(5, 1.0, 0.1);
  EXPECT_THROW(TriadSpec(a, b, 0.1, 1.0), DomainError);
  EXPECT_THROW(TriadSpec(a, a, 0.1, 0.0), DomainError);
  EXPECT_THROW(TriadSpec(a, a, 0.1, -1.0), DomainError);
  const TriadSpec triad(a, a, 0.3, 1.0);
  EXPECT_THROW(ChainSpec(triad, 0, 1.0), DomainError);
  const ChainSpec chain(triad, 60, 1.0);
  EXPECT_EQ(chain.site_count(), 121);
  EXPECT_NEAR(std::abs(chain.donor_coupling() - 0.3 * std::sqrt(2.0 / 3.0)), 0.0, 1e-16);
  EXPECT_EQ(ChainSpec(triad, 2, 1.0, Complex(0.9, 0.0)).donor_coupling(), Complex(0.9, 0.0));
}
