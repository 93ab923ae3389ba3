#pragma once

#include <Eigen/Dense>

#include "eamsim/basis.hpp"
#include "eamsim/model.hpp"

namespace eamsim {

// Canonical orderings. Donor labels come first, then pair labels in
// lexicographic order of (arm1, arm2) or (q1, q2). These orders are frozen:
// output files index columns by them.

/// DonorArm(1..N), then AcceptorPairArms(s, t) for s, t in 1..N.
LabeledBasis arm_sector_basis(int arm_count);
/// DonorEam(0), then AcceptorPairEam(q1, q2) over the EAM window.
LabeledBasis eam_pair_basis(int arm_count);
/// ChainDonor, then ChainPair(1..L).
LabeledBasis chain_basis(int half_length);
/// The two-level reduction in its own order: (Bell pair, donor).
LabeledBasis two_level_basis();
/// MoleculeArm(1..N).
LabeledBasis molecule_arm_basis(int arm_count);

/// One molecule in its arm basis: delta on the diagonal, tau on the
/// nearest-neighbour ring (amplitude tau from arm j to arm j+1).
HermitianOperator build_single_molecule(const MoleculeSpec& molecule);

/// The triad sector with one donor excitation or one excitation per acceptor,
/// written in the arm basis (dimension N + N^2). The donor block is scaled
/// by the detuning factor so that its q = 0 level matches build_eam_pair.
HermitianOperator build_arm_sector(const TriadSpec& spec);

/// The zero-EAM donor plus every acceptor EAM pair (dimension N^2 + 1).
HermitianOperator build_eam_pair(const TriadSpec& spec);

/// [[2E, M sqrt(2/3)], [conj(M) sqrt(2/3), gamma 2E]] in two_level_basis(),
/// with E the acceptor q = 1 mode energy. Three-arm molecules only.
HermitianOperator build_two_level(const TriadSpec& spec);

/// Donor plus L Bell-pair sites, nearest-neighbour hopping eta between pair
/// sites and the donor coupled to pair site 1. Three-arm molecules only.
HermitianOperator build_chain(const ChainSpec& spec);

/// Columns are the EAM-sector states (zero-EAM donor, then every acceptor
/// pair) expanded in the arm basis: the isometry that takes amplitudes in
/// eam_pair_basis() to amplitudes in arm_sector_basis().
struct EamEmbedding {
  LabeledBasis arm_basis;
  LabeledBasis eam_basis;
  Eigen::MatrixXcd isometry;
};
EamEmbedding eam_embedding(int arm_count);

/// Amplitude of arm j (1-based) in the twisted state |q> of an N-arm molecule:
/// exp(i 2 pi (j-1) q / N) / sqrt(N).
Complex twisted_amplitude(int arm, int q, int arm_count);

}  // namespace eamsim
