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

#include "phrpa1d/grid.hpp"

#include <cmath>

namespace phrpa1d {

Grid build_grid(double half_extent, int n_points) {
  if (half_extent <= 0.0) throw ConfigError("grid half_extent must be positive");
  if (n_points < 3) throw ConfigError("grid needs at least 3 points");
  Grid g;
  g.half_extent = half_extent;
  g.n_points = n_points;
  g.spacing = 2.0 * half_extent / (n_points - 1);
  g.points.resize(n_points);
  for (int i = 0; i < n_points; ++i) g.points[i] = -half_extent + i * g.spacing;
  return g;
}

PotentialKind potential_kind_from_string(const std::string& s) {
  if (s == "soft-coulomb") return PotentialKind::SoftCoulomb;
  if (s == "gaussian-well") return PotentialKind::GaussianWell;
  throw ConfigError("unknown potential kind: " + s);
}

std::string to_string(PotentialKind k) {
  return k == PotentialKind::SoftCoulomb ? "soft-coulomb" : "gaussian-well";
}

VectorXd evaluate_potential(const Grid& grid, const PotentialSpec& spec) {
  if (spec.softening <= 0.0) throw ConfigError("potential softening must be positive");
  VectorXd v(grid.n_points);
  const double a2 = spec.softening * spec.softening;
  for (int i = 0; i < grid.n_points; ++i) {
    const double d = grid.points[i] - spec.center;
    if (spec.kind == PotentialKind::SoftCoulomb) {
      v[i] = -spec.charge / std::sqrt(d * d + a2);
    } else {
      v[i] = -spec.charge * std::exp(-0.5 * d * d / a2);
    }
  }
  return v;
}

}  // namespace phrpa1d
