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

/// Model parameters shared by the atom and two-well pipelines.
struct ModelParams {
  double half_extent = 45.0;
  int n_points = 361;
  PotentialKind kind = PotentialKind::SoftCoulomb;
  double charge = 0.5;
  double softening_v = 1.0;  // nuclear softening a
  double softening_w = 1.0;  // interaction softening b
  int quad_order = 64;
  double quad_scale = 0.0;   // 0 -> max(1, 2*gap)
};

/// Single-well reference system: one electron in the lowest orbital.
struct AtomSystem {
  Grid grid;
  OneBodyMatrix h;
  EigenSystem es;   // full spectrum, n_occ = 1
  InteractionKernel w;
  SqrtKernel s;
  GapReport gap;
};

/// Two wells at +-R: one doubly occupied orbital.
struct MoleculeSystem {
  Grid grid;
  double separation = 0.0;  // R; wells sit at -R and +R
  OneBodyMatrix h;
  EigenSystem es;   // full spectrum, parity-resolved, n_occ = 1
  InteractionKernel w;
  SqrtKernel s;
  GapReport gap;
};

AtomSystem make_atom(const ModelParams& p);
MoleculeSystem make_molecule(const ModelParams& p, double R);

/// Default half-line quadrature for a system (scale from params or auto).
FrequencyQuadrature default_quadrature(const ModelParams& p, const GapReport& gap);

/// R must land on a grid point offset; throws ConfigError otherwise.
int separation_cells(const Grid& grid, double R);

}  // namespace phrpa1d
