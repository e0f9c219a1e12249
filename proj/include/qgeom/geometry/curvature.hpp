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

// Levi-Civita connection and curvature of warped metrics: finite-difference
// Christoffel symbols and Riemann tensor, closed-form connection from warp
// gradients, and the analytic warped-product sectional curvature.

#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <span>
#include <sstream>
#include <utility>
#include <vector>

#include "qgeom/error.hpp"
#include "qgeom/geometry/warped_metric.hpp"

namespace qgeom {

/// Gamma^k_{ij}, stored densely.
class Christoffel {
 public:
  explicit Christoffel(std::size_t n) : n_(n), g_(n * n * n, 0.0) {}

  double operator()(std::size_t k, std::size_t i, std::size_t j) const { return g_[(k * n_ + i) * n_ + j]; }
  double& operator()(std::size_t k, std::size_t i, std::size_t j) { return g_[(k * n_ + i) * n_ + j]; }
  std::size_t dim() const noexcept { return n_; }
  std::span<const double> data() const noexcept { return g_; }

  /// -Gamma^k_{ij} u^i w^j, written to out.
  void contract(std::span<const double> u, std::span<const double> w, std::span<double> out) const {
    for (std::size_t k = 0; k < n_; ++k) {
      double s = 0.0;
      for (std::size_t i = 0; i < n_; ++i) {
        if (u[i] == 0.0) continue;
        for (std::size_t j = 0; j < n_; ++j) s += (*this)(k, i, j) * u[i] * w[j];
      }
      out[k] = -s;
    }
  }

 private:
  std::size_t n_;
  std::vector<double> g_;
};

namespace detail {

/// Central difference of a vector-valued field along coordinate `axis`,
/// Richardson-extrapolated on steps h and h/2 and cross-checked against the
/// h/2, h/4 level. Disagreement above 10 * tol (relative to max(1, |value|))
/// means the step is swamped by cancellation or too coarse.
template <class F>
std::vector<double> richardson_partial(F&& f, std::span<const double> at, std::size_t axis, double step,
                                       double tol, const char* what) {
  if (!(step > 0.0) || !std::isfinite(step)) throw DomainError("finite-difference step must be positive");
  std::vector<double> p(at.begin(), at.end());
  auto central = [&](double h) {
    p[axis] = at[axis] + h;
    std::vector<double> plus = f(std::span<const double>(p));
    p[axis] = at[axis] - h;
    std::vector<double> minus = f(std::span<const double>(p));
    p[axis] = at[axis];
    for (std::size_t i = 0; i < plus.size(); ++i) plus[i] = (plus[i] - minus[i]) / (2.0 * h);
    return plus;
  };
  const auto c1 = central(step);
  const auto c2 = central(0.5 * step);
  const auto c4 = central(0.25 * step);
  std::vector<double> r1(c1.size());
  double worst = 0.0;
  double worst_value = 0.0;
  for (std::size_t i = 0; i < c1.size(); ++i) {
    r1[i] = (4.0 * c2[i] - c1[i]) / 3.0;
    const double r2 = (4.0 * c4[i] - c2[i]) / 3.0;
    const double rel = std::fabs(r1[i] - r2) / std::fmax(1.0, std::fabs(r1[i]));
    if (!std::isfinite(r1[i]) || !std::isfinite(r2)) {
      throw NumericalError(std::string(what) + ": non-finite finite difference", r1[i], INFINITY);
    }
    if (rel > worst) {
      worst = rel;
      worst_value = r1[i];
    }
  }
  if (worst > 10.0 * tol) {
    std::ostringstream os;
    os.precision(3);
    os << what << ": Richardson levels disagree by " << worst << " (step " << step
       << " too small or too large for tolerance " << tol << ")";
    throw NumericalError(os.str(), worst_value, worst);
  }
  return r1;
}

/// Gamma from the derivatives D[m][i] = d_m g_ii of a diagonal metric.
inline Christoffel christoffel_from_diagonal(std::span<const double> g, std::span<const double> dg) {
  const std::size_t n = g.size();
  Christoffel c(n);
  auto d = [&](std::size_t m, std::size_t i) { return dg[m * n + i]; };
  for (std::size_t k = 0; k < n; ++k) {
    const double inv = 0.5 / g[k];
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        if (k == j) s += d(i, k);
        if (k == i) s += d(j, k);
        if (i == j) s -= d(k, i);
        c(k, i, j) = inv * s;
      }
    }
  }
  return c;
}

}  // namespace detail

/// d_m g_ii by Richardson-extrapolated central differences, row-major [m][i].
inline std::vector<double> metric_derivatives(const WarpedMetric& m, std::span<const double> at,
                                              double step = 1e-3, double tol = 1e-6) {
  m.require_dim(at);
  const std::size_t n = m.dim();
  std::vector<double> dg(n * n);
  auto diag = [&](std::span<const double> p) { return m.diagonal(p); };
  for (std::size_t axis = 0; axis < n; ++axis) {
    const auto row = detail::richardson_partial(diag, at, axis, step, tol, "metric derivative");
    std::copy(row.begin(), row.end(), dg.begin() + static_cast<std::ptrdiff_t>(axis * n));
  }
  return dg;
}

/// Christoffel symbols from finite differences of the metric components.
inline Christoffel christoffel(const WarpedMetric& m, std::span<const double> at, double step = 1e-3,
                               double tol = 1e-6) {
  const auto dg = metric_derivatives(m, at, step, tol);
  const auto g = m.diagonal(at);
  return detail::christoffel_from_diagonal(g, dg);
}

/// Christoffel symbols from the warps' closed-form gradients.
inline Christoffel christoffel_analytic(const WarpedMetric& m, std::span<const double> at) {
  m.require_dim(at);
  if (!m.has_gradients()) throw CapabilityError("metric warps lack gradient evaluators");
  const std::size_t n = m.dim();
  std::vector<double> g(n), dg(n * n, 0.0), grad(n);
  g[0] = 1.0;
  for (std::size_t i = 1; i < n; ++i) {
    const double h = m.warp(i, at);
    g[i] = h * h;
    m.warps()[i - 1].gradient(at, grad);
    for (std::size_t axis = 0; axis < n; ++axis) dg[axis * n + i] = 2.0 * h * grad[axis];
  }
  return detail::christoffel_from_diagonal(g, dg);
}

namespace detail {

/// The connection the geodesic solvers integrate with: closed form when the
/// warps have gradients, finite differences otherwise.
inline Christoffel connection(const WarpedMetric& m, std::span<const double> at) {
  return m.has_gradients() ? christoffel_analytic(m, at) : christoffel(m, at);
}

}  // namespace detail

/// Riemann tensor R^a_{bcd} (index ((a*n + b)*n + c)*n + d), the components of
/// R(d_c, d_d) d_b, from finite differences of numerically computed Christoffel symbols.
inline std::vector<double> riemann_numeric(const WarpedMetric& m, std::span<const double> at, double step = 1e-3,
                                           double tol = 1e-6) {
  m.require_dim(at);
  const std::size_t n = m.dim();
  const Christoffel gam = christoffel(m, at, step, tol);
  auto field = [&](std::span<const double> p) {
    const auto c = christoffel(m, p, step, tol);
    return std::vector<double>(c.data().begin(), c.data().end());
  };
  // dgam[c][(a*n + d)*n + b] = d_c Gamma^a_{db}
  std::vector<std::vector<double>> dgam(n);
  for (std::size_t c = 0; c < n; ++c) dgam[c] = detail::richardson_partial(field, at, c, step, tol, "Christoffel derivative");

  auto G = [&](std::size_t a, std::size_t i, std::size_t j) { return gam(a, i, j); };
  auto dG = [&](std::size_t c, std::size_t a, std::size_t i, std::size_t j) { return dgam[c][(a * n + i) * n + j]; };
  std::vector<double> r(n * n * n * n, 0.0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t d = 0; d < n; ++d) {
          double s = dG(c, a, d, b) - dG(d, a, c, b);
          for (std::size_t e = 0; e < n; ++e) s += G(a, c, e) * G(e, d, b) - G(a, d, e) * G(e, c, b);
          r[((a * n + b) * n + c) * n + d] = s;
        }
      }
    }
  }
  return r;
}

/// K(U, V) = <R(U,V)V, U> / (|U|^2 |V|^2 - <U,V>^2) from the numeric Riemann tensor.
inline double sectional_curvature_numeric(const WarpedMetric& m, std::span<const double> at,
                                          std::span<const double> u, std::span<const double> v,
                                          double step = 1e-3, double tol = 1e-6) {
  m.require_dim(at);
  const std::size_t n = m.dim();
  if (u.size() != n || v.size() != n) throw ShapeError("plane vectors must match the metric dimension");
  const double uu = m.inner(at, u, u);
  const double vv = m.inner(at, v, v);
  const double uv = m.inner(at, u, v);
  const double area2 = uu * vv - uv * uv;
  if (!(area2 > 1e-12 * uu * vv) || !(uu > 0.0) || !(vv > 0.0)) {
    throw DomainError("plane vectors are linearly dependent");
  }
  const auto r = riemann_numeric(m, at, step, tol);
  const auto g = m.diagonal(at);
  double num = 0.0;
  for (std::size_t a = 0; a < n; ++a) {
    double s = 0.0;
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t d = 0; d < n; ++d) s += r[((a * n + b) * n + c) * n + d] * v[b] * u[c] * v[d];
      }
    }
    num += g[a] * u[a] * s;
  }
  return num / area2;
}

/// Sectional curvature of coordinate 2-planes, from the warped-product formulas
///   K(d_0, d_i) = -h_i''/h_i,   K(d_i, d_j) = -h_i' h_j' / (h_i h_j).
class CoordinatePlaneCurvature {
 public:
  using Fn = std::function<double(std::span<const double>, std::size_t, std::size_t)>;

  CoordinatePlaneCurvature(std::size_t dim, Fn fn, std::optional<double> constant)
      : dim_(dim), fn_(std::move(fn)), constant_(constant) {}

  double operator()(std::span<const double> at, std::size_t i, std::size_t j) const {
    if (at.size() != dim_) throw ShapeError("point dimension mismatch");
    if (i == j || i >= dim_ || j >= dim_) throw DomainError("coordinate plane needs two distinct axes");
    return fn_(at, i, j);
  }

  /// Set when the curvature is the same for every point and plane.
  std::optional<double> constant() const noexcept { return constant_; }

 private:
  std::size_t dim_;
  Fn fn_;
  std::optional<double> constant_;
};

/// -t^2 = -[log(2-q)]^2.
inline double tsallis_curvature(const QParam& p) { return p.is_limit() ? 0.0 : -p.t() * p.t(); }

inline CoordinatePlaneCurvature warped_curvature_analytic(const WarpedMetric& m) {
  const std::size_t n = m.dim();
  switch (m.kind()) {
    case MetricKind::kFlat:
      return {n, [](std::span<const double>, std::size_t, std::size_t) { return 0.0; }, 0.0};
    case MetricKind::kSingleExponential: {
      const double k = -m.twists()[0] * m.twists()[0];
      return {n, [k](std::span<const double>, std::size_t, std::size_t) { return k; }, k};
    }
    default:
      break;
  }
  for (const auto& w : m.warps()) {
    if (!w.has_base_second_derivative()) {
      throw CapabilityError("analytic curvature needs warps of the base coordinate with h' and h''");
    }
  }
  const auto& warps = m.warps();
  auto fn = [warps](std::span<const double> at, std::size_t i, std::size_t j) {
    if (i > j) std::swap(i, j);
    const double x = at[0];
    const Warp& hj = warps[j - 1];
    if (i == 0) return -hj.base_second_derivative(x) / hj(at);
    const Warp& hi = warps[i - 1];
    return -(hi.base_derivative(x) * hj.base_derivative(x)) / (hi(at) * hj(at));
  };
  return {n, fn, std::nullopt};
}

}  // namespace qgeom
