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

// The model plane of constant curvature k < 0 (upper half-plane, rescaled by
// 1/sqrt(|k|)) and comparison triangles in it.

#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qgeom/error.hpp"

namespace qgeom {

/// Point (u, v), v > 0, of the upper half-plane.
struct ModelPoint {
  double u = 0.0;
  double v = 1.0;
};

namespace detail {

inline double model_scale(double k) {
  if (!(k < 0.0) || !std::isfinite(k)) {
    std::ostringstream os;
    os << "only model spaces with k < 0 are supported (got k=" << k << ")";
    throw UnsupportedRegimeError(os.str());
  }
  return std::sqrt(-k);
}

inline double acosh_1p(double delta) { return std::log1p(delta + std::sqrt(delta * (delta + 2.0))); }

/// log sinh(x), x > 0.
inline double log_sinh(double x) { return x + std::log(-std::expm1(-2.0 * x)) - std::numbers::ln2; }
/// log cosh(x).
inline double log_cosh(double x) {
  const double ax = std::fabs(x);
  return ax + std::log1p(std::exp(-2.0 * ax)) - std::numbers::ln2;
}

}  // namespace detail

/// Distance in the curvature-k half-plane:
///   acosh(1 + |a - b|^2 / (2 v_a v_b)) / sqrt(|k|).
inline double model_distance(double k, const ModelPoint& a, const ModelPoint& b) {
  const double scale = detail::model_scale(k);
  if (!(a.v > 0.0) || !(b.v > 0.0)) throw DomainError("half-plane points need v > 0");
  const double du = a.u - b.u;
  const double dv = a.v - b.v;
  return detail::acosh_1p((du * du + dv * dv) / (2.0 * a.v * b.v)) / scale;
}

/// Point at arclength fraction s along the model geodesic from a to b.
inline ModelPoint model_geodesic_point(double k, const ModelPoint& a, const ModelPoint& b, double s) {
  const double scale = detail::model_scale(k);
  const double d = model_distance(k, a, b) * scale;
  if (d == 0.0) return a;
  double ca, cb;
  if (d < 1e-8) {
    ca = 1.0 - s;
    cb = s;
  } else {
    ca = std::sinh((1.0 - s) * d) / std::sinh(d);
    cb = std::sinh(s * d) / std::sinh(d);
  }
  // Hyperboloid coordinates (X0 - X2, X1) = (1/v, u/v) combine linearly.
  const double inv_v = ca / a.v + cb / b.v;
  const double x1 = ca * a.u / a.v + cb * b.u / b.v;
  return {x1 / inv_v, 1.0 / inv_v};
}

/// Vertices of a comparison triangle with |xy| = c, |yz| = a, |zx| = b.
struct ComparisonTriangle {
  ModelPoint x;
  ModelPoint y;
  ModelPoint z;
};

namespace detail {

/// Allowed relative slack on the triangle inequality before it counts as violated.
inline constexpr double kTriangleSlack = 1e-12;

inline void check_sides(double a, double b, double c) {
  if (!(a >= 0.0) || !(b >= 0.0) || !(c >= 0.0) || !std::isfinite(a + b + c)) {
    throw DomainError("side lengths must be finite and >= 0");
  }
  const double scale = std::max({a, b, c, 1.0});
  if (a > b + c + kTriangleSlack * scale || b > a + c + kTriangleSlack * scale ||
      c > a + b + kTriangleSlack * scale) {
    std::ostringstream os;
    os.precision(17);
    os << "sides (" << a << ", " << b << ", " << c << ") violate the triangle inequality";
    throw DomainError(os.str());
  }
}

}  // namespace detail

/// Canonical placement: x at (0, 1), y on the upward vertical ray, z on the
/// u >= 0 side at the angle given by the hyperbolic law of cosines.
inline ComparisonTriangle comparison_triangle(double k, double a, double b, double c) {
  const double scale = detail::model_scale(k);
  detail::check_sides(a, b, c);
  const double ka = scale * a, kb = scale * b, kc = scale * c;
  ComparisonTriangle tri;
  tri.x = {0.0, 1.0};
  tri.y = {0.0, std::exp(kc)};
  double alpha = 0.0;
  if (kb > 0.0 && kc > 0.0) {
    // sin^2(alpha/2) = sinh((a-b+c)/2) sinh((a+b-c)/2) / (sinh b sinh c)
    const double p = std::max(0.0, 0.5 * (ka - kb + kc));
    const double q = std::max(0.0, 0.5 * (ka + kb - kc));
    const double h = std::sinh(p) * std::sinh(q) / (std::sinh(kb) * std::sinh(kc));
    alpha = 2.0 * std::asin(std::sqrt(std::clamp(h, 0.0, 1.0)));
  }
  // Rotate i*e^{Kb} about i by alpha with an elliptic element of SL(2, R).
  const double cs = std::cos(0.5 * alpha), sn = std::sin(0.5 * alpha);
  const double e = std::exp(kb);
  const double den = cs * cs + sn * sn * e * e;
  tri.z = {std::fabs(-sn * cs * std::expm1(2.0 * kb) / den), e / den};
  if (!std::isfinite(tri.y.v) || !std::isfinite(tri.z.u) || !(tri.z.v > 0.0)) {
    throw RangeError("comparison triangle too large to place in half-plane coordinates");
  }
  return tri;
}

/// d_M(x~, w~) for w~ at fraction s of [y~ z~] in the comparison triangle of
/// (a, b, c), from
///   cosh(K d) = [sinh((1-s) K a) cosh(K c) + sinh(s K a) cosh(K b)] / sinh(K a),
/// K = sqrt(|k|). Works for triangles too large for explicit coordinates.
inline double comparison_distance(double k, double a, double b, double c, double s) {
  const double scale = detail::model_scale(k);
  detail::check_sides(a, b, c);
  if (!(s >= 0.0 && s <= 1.0)) throw DomainError("side fraction must lie in [0, 1]");
  if (s == 0.0 || a == 0.0) return c;
  if (s == 1.0) return b;
  const double ka = scale * a, kb = scale * b, kc = scale * c;
  const double x = (1.0 - s) * ka, y = s * ka;
  if (std::max({ka, kb, kc}) < 40.0) {
    // cosh(Kd) - 1 written without the leading cancellation of the 1s.
    const double shb = std::sinh(0.5 * kb), shc = std::sinh(0.5 * kc);
    const double num = 2.0 * std::sinh(x) * shc * shc + 2.0 * std::sinh(y) * shb * shb -
                       4.0 * std::sinh(0.5 * ka) * std::sinh(0.5 * x) * std::sinh(0.5 * y);
    return detail::acosh_1p(std::max(0.0, num / std::sinh(ka))) / scale;
  }
  const double l1 = detail::log_sinh(x) + detail::log_cosh(kc);
  const double l2 = detail::log_sinh(y) + detail::log_cosh(kb);
  const double hi = std::max(l1, l2);
  const double l = std::max(0.0, hi + std::log1p(std::exp(std::min(l1, l2) - hi)) - detail::log_sinh(ka));
  return (l + std::log1p(std::sqrt(-std::expm1(-2.0 * l)))) / scale;
}

}  // namespace qgeom
