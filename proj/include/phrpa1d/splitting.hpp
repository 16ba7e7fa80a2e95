/*
 * Copyright 2026 phrpa1d developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include "phrpa1d/correlation.hpp"

namespace phrpa1d {

// ---------------------------------------------------------------------------
// Rank-one resolvent and log identities (generic dense matrices, Euclidean
// inner products). These are the small algebraic pieces the two-well
// decomposition is assembled from, exposed for direct verification.
// ---------------------------------------------------------------------------

/// (A + alpha zeta zeta^T - z)^{-1} via the rank-one update of (A - z)^{-1}.
/// A symmetric PSD, alpha >= 0, z <= 0 (z = 0 requires A invertible).
MatrixXd sherman_morrison_resolvent(const MatrixXd& a, double alpha,
                                    const VectorXd& zeta, double z);

/// log(I + A) for symmetric A with spectrum > -1, spectral.
MatrixXd log_id_plus(const MatrixXd& a);

/// ||log(id+A+B) - log(id+A) - log(id+B)|| / ||A B|| in operator norms.
/// Returns 0 when both numerator and denominator vanish, +inf when only the
/// denominator does (which the additivity identity forbids).
double log_lemma_check(const MatrixXd& a, const MatrixXd& b);

/// g (sqrt(1 + c/g) - 1), the closed form of 1/(2 pi) int_R log(1 + c g /
/// (g^2 + w^2)) dw for g > 0, c >= 0.
double residue_closed_form(double g, double c);

/// The same integral by quadrature, for cross-checking the closed form.
double residue_numeric(double g, double c, int order = 64);

// ---------------------------------------------------------------------------
// Two-well decomposition of the correlation energy.
// ---------------------------------------------------------------------------

/// K(w) = 4 S psi0 P [(h - e0)/((h - e0)^2 + w^2)] P psi0 S, where
/// P = id - |psi0><psi0| - |psi1><psi1|. Symmetric PSD. Solves are deflated
/// along psi0 and psi1, so the tiny gap never enters the conditioning.
MatrixXd build_reduced_channel(const MoleculeSystem& mol, double omega);

/// zeta = S (psi0 psi1).
VectorXd coupling_vector(const MoleculeSystem& mol);

/// The three-term decomposition of E_c for the two-well system plus the
/// directly integrated value on the same quadrature. The identity is exact
/// per frequency node, so residual is rounding-level regardless of the rule.
struct SplittingBreakdown {
  double term1 = 0.0;      // rank-one channel, frequency integral done exactly
  double term2 = 0.0;      // log of the rank-one update of id + K
  double term3 = 0.0;      // tr(log(id + K) - K) remainder
  double direct_e_c = 0.0; // quadrature of the full trace-log
  double residual = 0.0;   // |term1 + term2 + term3 - direct_e_c|
  double term1_quadrature = 0.0;  // term1 with the arctan integral done numerically
};

SplittingBreakdown split_correlation_energy(const MoleculeSystem& mol,
                                            const FrequencyQuadrature& quad);

/// Individual terms (same conventions as the breakdown).
double rank1_hartree_term(const MoleculeSystem& mol);
double log_rank1_term(const MoleculeSystem& mol, const FrequencyQuadrature& quad);
double remainder_term(const MoleculeSystem& mol, const FrequencyQuadrature& quad);

/// Single-well channel seen from the molecule: K_R built from the atomic
/// ground orbital translated to side*R (side = +1 or -1).
MatrixXd build_single_well_channel(const MoleculeSystem& mol,
                                   const EigenSystem& atomic, double omega,
                                   int side);

/// Frobenius gap || K/2 - (K_R/2 + K_-R/2 + cross + cross^T) ||_F; shrinks
/// with R as the wells decouple.
double channel_split_gap(const MoleculeSystem& mol, const EigenSystem& atomic,
                         double omega);

/// The remainder against its two-atom limits:
///   a = remainder_term(molecule)
///   b = 2 x the K_R-based value
///   c = 2 x E_c of the isolated atom
/// plus the cross-channel Hilbert-Schmidt norm that controls |a - b|.
struct RemainderComparison {
  double molecular = 0.0;      // a
  double two_single_well = 0.0;  // b
  double two_atom_ec = 0.0;    // c
  double ab_gap = 0.0;
  double bc_gap = 0.0;
  double cross_hs_norm = 0.0;  // ||(S phi0^R)^T (S phi0^-R)||_F
};

RemainderComparison remainder_vs_two_atoms(const MoleculeSystem& mol,
                                           const AtomSystem& atom,
                                           const FrequencyQuadrature& quad);

}  // namespace phrpa1d
