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

#include <vector>

#include "phrpa1d/model.hpp"

namespace phrpa1d {

/// H = h (x) id + id (x) h + w(x_i - x_j), applied matrix-free to spatially
/// symmetric two-particle functions Psi(x, y) stored as n x n matrices.
struct TwoElectronOperator {
  MatrixXd h;     // one-body matrix
  MatrixXd vee;   // raw interaction values w(x_i - x_j), no mesh weight
  Grid grid;

  MatrixXd apply(const MatrixXd& psi) const;
  double rayleigh(const MatrixXd& psi) const;
};

/// Two wells at +-R plus electron repulsion with softening b; w = 0 allowed.
/// Enforces the n^2 <= 1e5 desk-scale budget.
TwoElectronOperator build_two_electron_hamiltonian(const Grid& grid, double R,
                                                   const PotentialSpec& well,
                                                   double interaction_softening);

/// Spatially symmetric (singlet) ground state, normalized so that
/// dx^2 sum Psi_ij^2 = 1.
struct TwoElectronState {
  double energy = 0.0;
  MatrixXd psi;
  double rayleigh_residual = 0.0;
  int iterations = 0;
};

/// Lanczos with full reorthogonalization restricted to the symmetric sector.
/// Deterministic start vector (product of one-body ground orbitals).
TwoElectronState ground_state(const TwoElectronOperator& op, double tol = 1e-9,
                              int max_iter = 400);

/// Dense diagonalization on the full product space; test oracle for n <= 40.
TwoElectronState ground_state_dense(const TwoElectronOperator& op);

/// Pair density rho2(x_i, x_j) = Psi(x_i, x_j)^2 (two-particle case).
MatrixXd pair_density(const TwoElectronState& state);

/// Relative residual of tr(S^T B S) against 2 * sum rho2 w dx^2, where B is
/// the integral operator with kernel 2 rho2. Exact up to the PSD clipping of
/// the kernel square root.
double pair_trace_identity_check(const TwoElectronState& state,
                                 const InteractionKernel& kernel,
                                 const SqrtKernel& s);

struct NBodyRow {
  double separation = 0.0;
  double e0 = 0.0;            // exact two-electron ground energy
  double two_eps0 = 0.0;      // dissociation limit
  double gap_to_limit = 0.0;  // |e0 - two_eps0|
  double lower_bound = 0.0;   // 2 * (lowest one-body two-well eigenvalue)
  bool lower_bound_ok = false;
  double trial_upper_bound = 0.0;  // symmetrized product of shifted atomic orbitals
};

std::vector<NBodyRow> nbody_dissociation_report(const std::vector<double>& separations,
                                                const ModelParams& params);

}  // namespace phrpa1d
