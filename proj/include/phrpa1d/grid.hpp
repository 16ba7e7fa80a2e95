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

#include <string>
#include <vector>

#include "phrpa1d/common.hpp"

namespace phrpa1d {

/// Uniform 1D mesh on [-L, L], all quantities in Hartree atomic units.
struct Grid {
  double half_extent = 0.0;
  int n_points = 0;
  double spacing = 0.0;
  VectorXd points;
};

Grid build_grid(double half_extent, int n_points);

enum class PotentialKind { SoftCoulomb, GaussianWell };

PotentialKind potential_kind_from_string(const std::string& s);
std::string to_string(PotentialKind k);

/// One attractive well. Soft Coulomb: v(x) = -Z / sqrt((x-c)^2 + a^2),
/// Gaussian: v(x) = -Z exp(-(x-c)^2 / (2 a^2)).
struct PotentialSpec {
  PotentialKind kind = PotentialKind::SoftCoulomb;
  double charge = 1.0;      // Z
  double softening = 1.0;   // a > 0
  double center = 0.0;      // c
};

VectorXd evaluate_potential(const Grid& grid, const PotentialSpec& spec);

}  // namespace phrpa1d
