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

#include <optional>
#include <vector>

#include "phrpa1d/model.hpp"
#include "phrpa1d/response.hpp"

namespace phrpa1d {

/// sum_i [log(1 - mu_i) + mu_i] over eigenvalues of a symmetric negative
/// semidefinite M. Positive eigenvalues up to 1e-10 * max(1, ||M||) are
/// clipped to zero; anything larger is a hard error (the kernel or response
/// construction is broken, not the formula).
double trace_log_term(const MatrixXd& m);

struct CorrelationResult {
  double e_c = 0.0;                       // Hartree, <= 0
  std::vector<double> omegas;             // node positions
  std::vector<double> integrand;          // trace-log value per node
  std::optional<double> refinement_residual;  // |E_c(n) - E_c(2n)| if requested
};

/// E_c = 1/(2 pi) int_0^inf tr(log(id - M(w)) + M(w)) dw on the given rule.
/// Spectral response backend; nodes are evaluated in parallel.
CorrelationResult correlation_energy(const EigenSystem& es, const SqrtKernel& s,
                                     double f_occ, const FrequencyQuadrature& quad,
                                     bool with_refinement = false);

struct EnergyBreakdown {
  double e_kin_ext = 0.0;
  double e_h = 0.0;
  double e_x = 0.0;
  double e_c = 0.0;
  double e_total = 0.0;
  double e_rhf = 0.0;  // e_kin_ext + e_h + e_x
  double gap = 0.0;
  double separation = 0.0;  // R, two-well systems only
};

/// Single-well total: eps0 + E_c with single-occupation prefactor 2.
EnergyBreakdown total_energy_atom(const AtomSystem& atom,
                                  const FrequencyQuadrature& quad);

/// Two-well total: mean-field energy of the doubly occupied ground orbital
/// plus E_c with prefactor 4.
EnergyBreakdown total_energy_molecule(const MoleculeSystem& mol,
                                      const FrequencyQuadrature& quad);

struct DissociationCurve {
  std::vector<double> separations;
  std::vector<EnergyBreakdown> rows;
  double atom_total = 0.0;        // full total of one well (with E_c)
  double atom_eps0 = 0.0;
  double rhf_error_constant = 0.0;  // 1/2 <|phi0|^2, W |phi0|^2>
  std::vector<double> delta_total;  // |E_total(R) - 2 atom_total|
  std::vector<double> delta_rhf;    // |E_rhf(R) - 2 eps0|
};

DissociationCurve dissociation_curve(const std::vector<double>& separations,
                                     const ModelParams& params);

}  // namespace phrpa1d
