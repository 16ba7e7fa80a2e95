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

#include "phrpa1d/grid.hpp"

namespace phrpa1d {

/// Dense one-body Hamiltonian h = -1/2 Laplacian(FD, Dirichlet) + sum of wells.
struct OneBodyMatrix {
  MatrixXd h;
  Grid grid;
  std::vector<PotentialSpec> potentials;
};

OneBodyMatrix build_one_body(const Grid& grid,
                             const std::vector<PotentialSpec>& potentials);

/// Same, from pre-evaluated potential vectors (must match the grid size).
OneBodyMatrix build_one_body(const Grid& grid,
                             const std::vector<VectorXd>& potentials);

/// Eigenpairs of a one-body Hamiltonian. Columns of `orbitals` are orthonormal
/// in the discrete inner product <f,g> = dx sum f_i g_i; eigenvalues ascending.
/// Sign convention: the largest-magnitude component of each orbital is positive.
struct EigenSystem {
  VectorXd eps;
  MatrixXd orbitals;
  int n_occ = 0;
  double dx = 0.0;
  // +1 even, -1 odd, 0 unknown (filled by the parity-resolved solver).
  std::vector<int> parity;

  int n_states() const { return static_cast<int>(eps.size()); }
};

/// k lowest eigenpairs by dense diagonalization.
EigenSystem solve_eigensystem(const OneBodyMatrix& op, int k, int n_occ);

/// Full spectrum for a parity-symmetric Hamiltonian, solved separately in the
/// even and odd sectors. Keeps near-degenerate pairs cleanly labeled, which a
/// plain dense solve cannot do once the splitting drops to the rounding floor.
EigenSystem solve_eigensystem_parity(const OneBodyMatrix& op, int n_occ);

struct GapReport {
  double gap = 0.0;
  bool is_open = false;
};

GapReport gap_report(const EigenSystem& es);

/// Translate a grid function by an integer number of cells (zero fill).
VectorXd translate(const VectorXd& f, int cells);

/// How close the lowest molecular orbitals are to the +-R combinations of the
/// atomic ground orbital, plus the gap diagnostics that shrink with R.
struct LocalizationReport {
  double d0 = 0.0;        // ||psi0 - (phi0^R + phi0^-R)/sqrt(2)||
  double d1 = 0.0;        // ||psi1 - (phi0^R - phi0^-R)/sqrt(2)||
  double gap = 0.0;       // eps1 - eps0 of the two-well system
  double eps_diff = 0.0;  // |eps0(atom) - eps0(two-well)|
  bool supported = true;  // false when R < 2a (wells merged, combos ill-posed)
};

LocalizationReport localization_report(const EigenSystem& molecular,
                                       const EigenSystem& atomic, double R,
                                       double well_softening);

}  // namespace phrpa1d
