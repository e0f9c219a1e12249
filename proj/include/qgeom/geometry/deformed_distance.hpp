// Copyright 2026 The qgeom Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cmath>

#include "qgeom/error.hpp"
#include "qgeom/qcalc.hpp"

namespace qgeom {

/// d~ = tau_q(d) = ((2-q)^d - 1) / (1-q), for d >= 0 and q in [0, 1).
///
/// Symmetric and zero exactly on the diagonal whenever d is. It does NOT
/// inherit the triangle inequality: tau_q is convex with tau_q(0) = 0, hence
/// superadditive, and collinear triples violate it (q = 0, d = 1, 1, 2:
/// 1 + 1 < 3).
inline double deformed_distance(const QParam& p, double d) {
  if (!(p.q() >= 0.0 && p.q() < 1.0)) throw DomainError("deformed distance needs q in [0, 1)");
  if (!(d >= 0.0) || !std::isfinite(d)) throw DomainError("distance must be finite and >= 0");
  return tau(p, d).value();
}

/// Components (g_xx, g_yy) of ds^2 = dx^2 + tau_q(x)^{-2} dy^2.
/// g_yy is infinite at x = 0.
inline std::array<double, 2> naive_metric_tensor(const QParam& p, double x) {
  const double s = tau(p, x).value();
  return {1.0, 1.0 / (s * s)};
}

/// Determinant of the inverse of the naive tensor, g^xx g^yy = tau_q(x)^2.
/// Vanishes exactly at x = 0, where the tensor degenerates.
inline double naive_cometric_determinant(const QParam& p, double x) {
  const double s = tau(p, x).value();
  return s * s;
}

}  // namespace qgeom
