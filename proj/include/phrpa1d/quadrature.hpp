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

#include <functional>

#include "phrpa1d/common.hpp"

namespace phrpa1d {

/// Gauss-Legendre nodes/weights on [-1, 1], Newton iteration on P_n.
void gauss_legendre(int n, VectorXd& nodes, VectorXd& weights);

/// Quadrature for integrals over the imaginary-frequency half line [0, inf).
/// Integrands here are even in omega, so full-line integrals are twice these.
///
/// Two constructions:
///  - rational(n, s): one Gauss-Legendre panel under omega = s t/(1-t).
///  - gap_adapted(order, s, gap): composite rule whose panels resolve both the
///    O(s) scale of the trace-log integrand and the width-`gap` Lorentzian
///    channel that a closing HOMO-LUMO gap produces. Panels: linear near the
///    peak, log-spaced ladder through the intermediate decades, rational tail.
struct FrequencyQuadrature {
  VectorXd omega;
  VectorXd weight;
  double scale = 1.0;
  int order = 0;

  static FrequencyQuadrature rational(int n, double scale);
  static FrequencyQuadrature gap_adapted(int order, double scale, double gap);

  int size() const { return static_cast<int>(omega.size()); }

  /// sum_q w_q f(omega_q) ~= int_0^inf f
  double integrate(const std::function<double(double)>& f) const;

  /// Same rule with every panel order doubled (refinement checks).
  FrequencyQuadrature refined() const;

 private:
  // Panel bookkeeping so refined() can rebuild exactly.
  struct Recipe {
    bool adapted = false;
    double gap = 0.0;
    int order = 0;
    double scale = 1.0;
  } recipe_;
};

}  // namespace phrpa1d
