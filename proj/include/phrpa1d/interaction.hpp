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

#include "phrpa1d/grid.hpp"

namespace phrpa1d {

/// Discretized two-body interaction W_ij = dx / sqrt((x_i-x_j)^2 + b^2).
/// The quadrature weight dx is baked in, so W applied to a vector of point
/// values approximates the integral operator and matrix traces approximate
/// operator traces. This convention is used for every integral operator in
/// the library.
struct InteractionKernel {
  MatrixXd w;
  double softening = 1.0;
  double dx = 0.0;

  static InteractionKernel from_points(const VectorXd& points, double dx,
                                       double softening);
};

InteractionKernel interaction_matrix(const Grid& grid, double softening);

/// Symmetric PSD square root of W, spectral. Eigenvalues below
/// 1e-12 * lambda_max are clipped to zero first; the kernel has a positive
/// Fourier transform, so anything clipped is discretization noise.
struct SqrtKernel {
  MatrixXd s;
  int clip_count = 0;
  double clip_mass = 0.0;
};

SqrtKernel kernel_sqrt(const InteractionKernel& kernel);

/// E_H[rho] = 1/2 <rho, W rho>, rho given as point values.
double hartree_energy(const VectorXd& density, const InteractionKernel& kernel);

/// Spin-summed exact exchange for doubly occupied spatial orbitals (columns):
/// E_x = - sum_{ij} <phi_i phi_j, W (phi_i phi_j)>.
double exchange_energy(const MatrixXd& orbitals, const InteractionKernel& kernel);

/// Frobenius norm of the two-orbital kernel phi_j(x) w(x-y) phi_k(y); finite on
/// any grid, reported as the discrete Hilbert-Schmidt diagnostic.
double orbital_pair_hs_norm(const VectorXd& phi_j, const VectorXd& phi_k,
                            const InteractionKernel& kernel);

}  // namespace phrpa1d
