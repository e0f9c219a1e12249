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

// Sectional curvature from the area deficit of small geodesic disks,
//   k = lim_{r->0} 12/r^2 (1 - A(r) / (pi r^2)),
// with A(r) computed by integrating the exponential map over a radial fan.

#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>
#include <sstream>
#include <vector>

#include "qgeom/error.hpp"
#include "qgeom/geometry/curvature.hpp"
#include "qgeom/geometry/geodesic.hpp"
#include "qgeom/geometry/warped_metric.hpp"

namespace qgeom {

struct BdpEstimate {
  double curvature = 0.0;             ///< extrapolated to r -> 0
  std::vector<double> radii;          ///< ascending
  std::vector<double> areas;          ///< A(r) per radius
  std::vector<double> raw_curvatures; ///< 12/r^2 (1 - A/(pi r^2)) per radius
};

inline double area_deficit_curvature(double r, double area) {
  return 12.0 / (r * r) * (1.0 - area / (std::numbers::pi * r * r));
}

/// Polynomial extrapolation in r^2 to r = 0 through the (up to) three
/// smallest radii. Removes the O(r^2) and O(r^4) terms of the deficit.
inline double bdp_extrapolate(std::span<const double> radii, std::span<const double> areas) {
  if (radii.size() != areas.size() || radii.empty()) throw ShapeError("need one area per radius");
  std::vector<std::pair<double, double>> pts;
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] > 0.0)) throw DomainError("radii must be positive");
    pts.emplace_back(radii[i] * radii[i], area_deficit_curvature(radii[i], areas[i]));
  }
  std::sort(pts.begin(), pts.end());
  pts.resize(std::min<std::size_t>(pts.size(), 3));
  double k0 = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    double w = 1.0;
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (j != i) w *= -pts[j].first / (pts[i].first - pts[j].first);
    }
    k0 += w * pts[i].second;
  }
  return k0;
}

namespace detail {

/// Geodesic plus its Jacobi field and the accumulated length of the Jacobi
/// field: state (x, v, J, J', c), c' = |J|_g.
struct JacobiFanSystem {
  const WarpedMetric* metric;

  void operator()(const OdeState& s, OdeState& ds, double /*rho*/) const {
    const std::size_t n = metric->dim();
    std::span<const double> x(s.data(), n);
    std::span<const double> v(s.data() + n, n);
    std::span<const double> jac(s.data() + 2 * n, n);
    std::span<const double> jv(s.data() + 3 * n, n);
    if (!metric->inside_validity_box(x)) throw DomainError("geodesic left the metric's validity box");
    const Christoffel c = connection(*metric, x);

    std::copy(v.begin(), v.end(), ds.begin());
    c.contract(v, v, std::span<double>(ds.data() + n, n));
    std::copy(jv.begin(), jv.end(), ds.begin() + static_cast<std::ptrdiff_t>(2 * n));

    // -2 Gamma(v, J') - (dGamma . J)(v, v)
    std::vector<double> tmp(n);
    c.contract(v, jv, tmp);
    double jnorm = 0.0;
    for (double q : jac) jnorm += q * q;
    jnorm = std::sqrt(jnorm);
    std::vector<double> dterm(n, 0.0);
    if (jnorm > 0.0) {
      const double eps = 1e-6;
      std::vector<double> xp(x.begin(), x.end()), xm(x.begin(), x.end());
      for (std::size_t i = 0; i < n; ++i) {
        xp[i] += eps * jac[i] / jnorm;
        xm[i] -= eps * jac[i] / jnorm;
      }
      std::vector<double> ap(n), am(n);
      connection(*metric, xp).contract(v, v, ap);
      connection(*metric, xm).contract(v, v, am);
      for (std::size_t i = 0; i < n; ++i) dterm[i] = (ap[i] - am[i]) / (2.0 * eps) * jnorm;
    }
    for (std::size_t i = 0; i < n; ++i) ds[3 * n + i] = 2.0 * tmp[i] + dterm[i];

    ds[4 * n] = std::sqrt(std::max(0.0, metric->inner(x, jac, jac)));
  }
};

}  // namespace detail

/// Disk areas A(r) over `directions` radial geodesics (periodic trapezoid rule
/// in the azimuth) and the extrapolated curvature of the plane span(U, V).
inline BdpEstimate bdp_curvature_detail(const WarpedMetric& m, std::span<const double> at,
                                        std::span<const double> u, std::span<const double> v,
                                        std::vector<double> radii, int directions = 64, double ode_tol = 1e-12) {
  m.require_dim(at);
  const std::size_t n = m.dim();
  if (u.size() != n || v.size() != n) throw ShapeError("plane vectors must match the metric dimension");
  if (radii.empty()) throw DomainError("need at least one radius");
  if (directions < 4) throw DomainError("need at least 4 azimuthal directions");
  for (double r : radii) {
    if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("radii must be positive");
  }
  std::sort(radii.begin(), radii.end());

  // g-orthonormal basis of the plane
  std::vector<double> e1(u.begin(), u.end()), e2(v.begin(), v.end());
  const double n1 = std::sqrt(m.inner(at, e1, e1));
  if (!(n1 > 0.0)) throw DomainError("plane vectors are linearly dependent");
  for (auto& c : e1) c /= n1;
  const double proj = m.inner(at, e2, e1);
  for (std::size_t i = 0; i < n; ++i) e2[i] -= proj * e1[i];
  const double n2 = std::sqrt(m.inner(at, e2, e2));
  if (!(n2 > 1e-8 * std::sqrt(m.inner(at, v, v)))) throw DomainError("plane vectors are linearly dependent");
  for (auto& c : e2) c /= n2;

  std::vector<double> areas(radii.size(), 0.0);
  const double dtheta = 2.0 * std::numbers::pi / directions;
  for (int j = 0; j < directions; ++j) {
    const double th = dtheta * j;
    detail::OdeState s(4 * n + 1, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      s[i] = at[i];
      s[n + i] = std::cos(th) * e1[i] + std::sin(th) * e2[i];
      s[3 * n + i] = -std::sin(th) * e1[i] + std::cos(th) * e2[i];
    }
    double rho = 0.0;
    for (std::size_t k = 0; k < radii.size(); ++k) {
      try {
        detail::integrate_system(detail::JacobiFanSystem{&m}, s, radii[k] - rho, ode_tol);
      } catch (const Error& e) {
        std::ostringstream os;
        os << "radius " << radii[k] << " too large: radial geodesic failed (" << e.what() << ")";
        throw DomainError(os.str());
      }
      rho = radii[k];
      areas[k] += dtheta * s[4 * n];
    }
  }

  BdpEstimate est;
  est.radii = radii;
  est.areas = areas;
  for (std::size_t k = 0; k < radii.size(); ++k) est.raw_curvatures.push_back(area_deficit_curvature(radii[k], areas[k]));
  est.curvature = bdp_extrapolate(radii, areas);
  return est;
}

inline double bdp_curvature_estimate(const WarpedMetric& m, std::span<const double> at, std::span<const double> u,
                                     std::span<const double> v, std::vector<double> radii) {
  return bdp_curvature_detail(m, at, u, v, std::move(radii)).curvature;
}

}  // namespace qgeom
