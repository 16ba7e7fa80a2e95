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

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace phrpa1d {

using Eigen::MatrixXd;
using Eigen::VectorXd;

/// Invalid user/config input.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Numerical failure at runtime (closed gap, non-PSD kernel, solver breakdown).
struct NumericalError : std::runtime_error {
  explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

// All grid functions are plain vectors of point values; the mesh weight dx is
// carried explicitly. <f,g> = dx * sum_i f_i g_i.
inline double inner(const VectorXd& f, const VectorXd& g, double dx) {
  return dx * f.dot(g);
}

inline double norm2(const VectorXd& f, double dx) { return inner(f, f, dx); }

}  // namespace phrpa1d
