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

#include "phrpa1d/interaction.hpp"
#include "phrpa1d/one_body.hpp"
#include "phrpa1d/quadrature.hpp"

namespace phrpa1d {

/// Independent-particle density-density response at imaginary frequency,
/// stored with quadrature weights baked in (see InteractionKernel).
/// Symmetric and negative semidefinite for any open-gap system.
struct ResponseMatrix {
  MatrixXd chi;
  double omega = 0.0;
  double f_occ = 0.0;  // occupation prefactor: 4 doubly occupied, 2 single
};

/// Orbital-sum backend:
///   chi(x,y) = -f_occ sum_{k occ} sum_{j virt}
///       (e_j - e_k) / ((e_j - e_k)^2 + w^2) * phi_j phi_k (x) phi_j phi_k (y).
/// Occupied-occupied terms cancel pairwise and are skipped.
ResponseMatrix chi0_spectral(const EigenSystem& es, double f_occ, double omega);

/// Resolvent backend: for each occupied k applies
///   P_k (h - e_k) ((h - e_k)^2 + w^2)^{-1} P_k
/// through one symmetric factorization per (k, omega); P_k projects out
/// phi_k, and the factorization is deflated along phi_k so omega = 0 is fine
/// whenever the gap is open. No eigendecomposition beyond the occupied space.
ResponseMatrix chi0_resolvent(const OneBodyMatrix& op, const EigenSystem& occupied,
                              double f_occ, double omega);

/// M(omega) = S^T chi S with S the kernel square root; hs_norm = ||M||_F.
struct SymmetrizedResponse {
  MatrixXd m;
  double omega = 0.0;
  double hs_norm = 0.0;
};

SymmetrizedResponse symmetrize(const ResponseMatrix& chi, const SqrtKernel& s);

/// Quadrature of int_R chi(i w) dw against its closed form
///   -f_occ * pi * sum_k phi_k o [sgn(h - e_k)] o phi_k
/// (the k-th eigendirection contributes zero). Deviation is reported, never
/// raised.
struct FrequencyIntegralReport {
  MatrixXd integral;
  MatrixXd exact;
  double rel_deviation = 0.0;
};

FrequencyIntegralReport chi0_frequency_integral(const EigenSystem& es, double f_occ,
                                                const FrequencyQuadrature& quad);

}  // namespace phrpa1d
