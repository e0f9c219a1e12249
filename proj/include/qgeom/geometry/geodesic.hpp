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

// Geodesic distances on warped charts: closed form for the exponential warp
// (via the upper half-space model) and a shooting-method boundary-value solver
// for general warps.

#pragma once

#include <algorithm>
#include <cmath>
#include <exception>
#include <optional>
#include <span>
#include <sstream>
#include <vector>

#include <Eigen/Dense>
#include <boost/numeric/odeint.hpp>

#include "qgeom/error.hpp"
#include "qgeom/geometry/curvature.hpp"
#include "qgeom/geometry/warped_metric.hpp"
#include "qgeom/qcalc.hpp"

namespace qgeom {

namespace detail {

inline void require_same_dim(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw ShapeError("points have different dimensions");
  if (a.size() < 2) throw ShapeError("warped chart points need at least 2 coordinates");
}

inline double euclidean(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

/// acosh(1 + delta) for delta >= 0 without cancellation near 0.
inline double acosh1p(double delta) { return std::log1p(delta + std::sqrt(delta * (delta + 2.0))); }

/// cosh(D) - 1 between two points of the chart ds^2 = dx^2 + e^{-2tx}|dy|^2,
/// D being the distance in units of 1/|t|.
inline double hyperbolic_delta(double t, std::span<const double> a, std::span<const double> b) {
  double dy2 = 0.0;
  for (std::size_t i = 1; i < a.size(); ++i) dy2 += (a[i] - b[i]) * (a[i] - b[i]);
  const double sh = std::sinh(0.5 * t * (a[0] - b[0]));
  return 2.0 * sh * sh + 0.5 * t * t * dy2 * std::exp(-t * (a[0] + b[0]));
}

}  // namespace detail

/// Distance for ds^2 = dx^2 + e^{-2tx} |dy|^2:
///   (1/|t|) acosh(1 + [t^2 |y_a - y_b|^2 + (e^{t x_a} - e^{t x_b})^2] / (2 e^{t (x_a + x_b)})).
/// Points sharing their fiber coordinates lie on a geodesic line, so the
/// distance is |x_a - x_b| exactly. t = 0 is the Euclidean distance.
inline double geodesic_distance_closed(double t, std::span<const double> a, std::span<const double> b) {
  detail::require_same_dim(a, b);
  if (t == 0.0) return detail::euclidean(a, b);
  if (std::equal(a.begin() + 1, a.end(), b.begin() + 1)) return std::fabs(a[0] - b[0]);
  return detail::acosh1p(detail::hyperbolic_delta(t, a, b)) / std::fabs(t);
}

inline double geodesic_distance_closed(const QParam& p, std::span<const double> a, std::span<const double> b) {
  return geodesic_distance_closed(p.is_limit() ? 0.0 : p.t(), a, b);
}

/// Point at arclength fraction s along the geodesic from a to b, by linear
/// combination on the hyperboloid model in the coordinates (1/eta, xi/eta)
/// with eta = e^{t x}, xi = t y.
inline MetricPoint geodesic_point_closed(double t, std::span<const double> a, std::span<const double> b,
                                         double s) {
  detail::require_same_dim(a, b);
  const std::size_t n = a.size();
  MetricPoint out(n);
  if (t == 0.0) {
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i] + s * (b[i] - a[i]);
    return out;
  }
  const double d = detail::acosh1p(detail::hyperbolic_delta(t, a, b));
  if (d == 0.0) return MetricPoint(a.begin(), a.end());
  double ca, cb;
  if (d < 1e-8) {
    ca = 1.0 - s;
    cb = s;
  } else {
    const double sd = std::sinh(d);
    ca = std::sinh((1.0 - s) * d) / sd;
    cb = std::sinh(s * d) / sd;
  }
  const double inv_eta_a = std::exp(-t * a[0]);
  const double inv_eta_b = std::exp(-t * b[0]);
  const double inv_eta = ca * inv_eta_a + cb * inv_eta_b;
  out[0] = -std::log(inv_eta) / t;
  for (std::size_t i = 1; i < n; ++i) {
    const double xi = ca * (t * a[i]) * inv_eta_a + cb * (t * b[i]) * inv_eta_b;
    out[i] = (xi / inv_eta) / t;
  }
  return out;
}

inline MetricPoint geodesic_point_closed(const QParam& p, std::span<const double> a, std::span<const double> b,
                                         double s) {
  return geodesic_point_closed(p.is_limit() ? 0.0 : p.t(), a, b, s);
}

/// Solution of the geodesic boundary-value problem, parametrized on [0, 1]
/// with constant speed equal to the length.
struct GeodesicSolution {
  MetricPoint start;
  std::vector<double> initial_velocity;
  double length = 0.0;
  double residual = 0.0;  ///< max-norm miss of the far endpoint
  int iterations = 0;
};

namespace detail {

using OdeState = std::vector<double>;

/// Geodesic equation as a first-order system (x, v).
struct GeodesicSystem {
  const WarpedMetric* metric;

  void operator()(const OdeState& s, OdeState& ds, double /*tau*/) const {
    const std::size_t n = metric->dim();
    std::span<const double> x(s.data(), n);
    std::span<const double> v(s.data() + n, n);
    if (!metric->inside_validity_box(x)) throw DomainError("geodesic left the metric's validity box");
    const Christoffel c = connection(*metric, x);
    std::copy(v.begin(), v.end(), ds.begin());
    c.contract(v, v, std::span<double>(ds.data() + n, n));
  }
};

inline void check_finite(const OdeState& s) {
  for (double x : s) {
    if (!std::isfinite(x)) throw DomainError("geodesic integration produced non-finite values");
  }
}

/// Integrate any first-order system from tau = 0 to tau_end with adaptive
/// Runge-Kutta-Fehlberg 7(8). Integrator failures become NumericalError.
template <class System>
void integrate_system(System&& sys, OdeState& state, double tau_end, double ode_tol) {
  namespace odeint = boost::numeric::odeint;
  if (tau_end == 0.0) return;
  auto stepper = odeint::make_controlled(ode_tol, ode_tol, odeint::runge_kutta_fehlberg78<OdeState>());
  try {
    odeint::integrate_adaptive(stepper, sys, state, 0.0, tau_end, 0.05 * tau_end);
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw NumericalError(std::string("ODE integration failed: ") + e.what(), NAN, INFINITY);
  }
  check_finite(state);
}

inline OdeState shoot(const WarpedMetric& m, std::span<const double> x0, std::span<const double> v0,
                      double tau_end, double ode_tol) {
  const std::size_t n = m.dim();
  OdeState s(2 * n);
  std::copy(x0.begin(), x0.end(), s.begin());
  std::copy(v0.begin(), v0.end(), s.begin() + static_cast<std::ptrdiff_t>(n));
  integrate_system(GeodesicSystem{&m}, s, tau_end, ode_tol);
  return s;
}

inline double ode_tolerance_for(double tol) { return std::clamp(1e-2 * tol, 1e-14, 1e-10); }

/// Damped Newton iteration on the initial velocity; returns the best velocity
/// found and its residual.
struct NewtonResult {
  std::vector<double> v;
  double residual;
  int iterations;
};

inline NewtonResult newton_shoot(const WarpedMetric& m, std::span<const double> a, std::span<const double> target,
                                 std::vector<double> v, double tol, double ode_tol, int max_iter) {
  const std::size_t n = m.dim();
  auto miss = [&](const std::vector<double>& vel) -> std::optional<Eigen::VectorXd> {
    try {
      const OdeState s = shoot(m, a, vel, 1.0, ode_tol);
      Eigen::VectorXd f(static_cast<Eigen::Index>(n));
      for (std::size_t i = 0; i < n; ++i) f[static_cast<Eigen::Index>(i)] = s[i] - target[i];
      return f;
    } catch (const Error&) {
      return std::nullopt;
    }
  };
  auto f = miss(v);
  if (!f) return {v, INFINITY, 0};
  double r = f->lpNorm<Eigen::Infinity>();
  int it = 0;
  for (; it < max_iter && r > tol; ++it) {
    Eigen::MatrixXd jac(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    double vmax = 1.0;
    for (double c : v) vmax = std::max(vmax, std::fabs(c));
    const double h = 1e-7 * vmax;
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j) {
      auto vp = v, vm = v;
      vp[j] += h;
      vm[j] -= h;
      const auto fp = miss(vp);
      const auto fm = miss(vm);
      if (!fp || !fm) {
        ok = false;
        break;
      }
      jac.col(static_cast<Eigen::Index>(j)) = (*fp - *fm) / (2.0 * h);
    }
    if (!ok) break;
    const Eigen::VectorXd step = jac.partialPivLu().solve(-*f);
    if (!step.allFinite()) break;
    double lambda = 1.0;
    bool accepted = false;
    for (int k = 0; k < 12; ++k, lambda *= 0.5) {
      auto trial = v;
      for (std::size_t i = 0; i < n; ++i) trial[i] += lambda * step[static_cast<Eigen::Index>(i)];
      const auto ft = miss(trial);
      if (!ft) continue;
      const double rt = ft->lpNorm<Eigen::Infinity>();
      if (rt < r) {
        v = std::move(trial);
        f = ft;
        r = rt;
        accepted = true;
        break;
      }
    }
    if (!accepted) break;
  }
  return {v, r, it};
}

}  // namespace detail

/// Shooting on the geodesic ODE from a, Newton-corrected on the initial
/// velocity until the endpoint misses b by at most tol (max norm). Falls back
/// to continuation along the chord when the direct iteration stalls.
inline GeodesicSolution solve_geodesic(const WarpedMetric& m, std::span<const double> a, std::span<const double> b,
                                       double tol = 1e-10, int max_iter = 60) {
  m.require_dim(a);
  m.require_dim(b);
  if (!(tol > 0.0)) throw DomainError("geodesic tolerance must be positive");
  const std::size_t n = m.dim();
  const double ode_tol = detail::ode_tolerance_for(tol);

  std::vector<double> chord(n);
  for (std::size_t i = 0; i < n; ++i) chord[i] = b[i] - a[i];

  auto finish = [&](const detail::NewtonResult& r, int iters) {
    GeodesicSolution sol;
    sol.start.assign(a.begin(), a.end());
    sol.initial_velocity = r.v;
    sol.length = std::sqrt(m.inner(a, r.v, r.v));
    sol.residual = r.residual;
    sol.iterations = iters;
    return sol;
  };

  if (std::all_of(chord.begin(), chord.end(), [](double c) { return c == 0.0; })) {
    return finish({chord, 0.0, 0}, 0);
  }

  auto best = detail::newton_shoot(m, a, b, chord, tol, ode_tol, max_iter);
  if (best.residual <= tol) return finish(best, best.iterations);

  int total = best.iterations;
  for (int pieces : {8, 32}) {
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = chord[i] / pieces;
    detail::NewtonResult stage{v, INFINITY, 0};
    bool ok = true;
    for (int k = 1; k <= pieces && ok; ++k) {
      const double frac = static_cast<double>(k) / pieces;
      std::vector<double> target(n);
      for (std::size_t i = 0; i < n; ++i) target[i] = a[i] + frac * chord[i];
      if (k > 1) {
        const double grow = static_cast<double>(k) / (k - 1);
        for (auto& c : stage.v) c *= grow;
      }
      stage = detail::newton_shoot(m, a, target, stage.v, tol, ode_tol, max_iter);
      total += stage.iterations;
      ok = stage.residual <= tol;
    }
    if (ok) return finish(stage, total);
  }

  const GeodesicSolution sol = finish(best, total);
  std::ostringstream os;
  os.precision(3);
  os << "geodesic shooting did not converge: residual " << best.residual << " > " << tol;
  throw NumericalError(os.str(), sol.length, best.residual);
}

inline double geodesic_distance_numeric(const WarpedMetric& m, std::span<const double> a, std::span<const double> b,
                                        double tol = 1e-10) {
  return solve_geodesic(m, a, b, tol).length;
}

/// Point at arclength fraction s of a solved geodesic.
inline MetricPoint geodesic_point_numeric(const WarpedMetric& m, const GeodesicSolution& sol, double s,
                                          double tol = 1e-10) {
  const auto state = detail::shoot(m, sol.start, sol.initial_velocity, s, detail::ode_tolerance_for(tol));
  return MetricPoint(state.begin(), state.begin() + static_cast<std::ptrdiff_t>(m.dim()));
}

}  // namespace qgeom
