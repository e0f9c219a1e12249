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

// Diagonal warped-product metrics on R^n,
//   ds^2 = dx_0^2 + sum_i h_i(x)^2 dx_i^2,
// covering the exponential (Tsallis) warp, the doubly warped exponential
// metric, and convex double warps.

#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qgeom/error.hpp"
#include "qgeom/qcalc.hpp"

namespace qgeom {

/// Coordinates in a warped chart (x_0 is the base coordinate).
using MetricPoint = std::vector<double>;

/// A positive warp function with optional derivative evaluators.
class Warp {
 public:
  using Fn = std::function<double(std::span<const double>)>;
  using GradFn = std::function<void(std::span<const double>, std::span<double>)>;
  using BaseFn = std::function<double(double)>;

  /// Warp that may depend on every coordinate. `gradient` writes one entry per
  /// coordinate; leave it empty when no closed form is available.
  Warp(std::string name, Fn value, GradFn gradient = {})
      : name_(std::move(name)), value_(std::move(value)), gradient_(std::move(gradient)) {
    if (!value_) throw DomainError("warp evaluator is empty");
  }

  /// Warp depending on the base coordinate only: h(x_0).
  static Warp of_base(std::string name, BaseFn h, BaseFn dh = {}, BaseFn d2h = {}) {
    Warp w(std::move(name), [h](std::span<const double> p) { return h(p[0]); });
    w.base_only_ = true;
    w.dh_ = dh;
    w.d2h_ = std::move(d2h);
    if (dh) {
      w.gradient_ = [dh](std::span<const double> p, std::span<double> out) {
        std::fill(out.begin(), out.end(), 0.0);
        out[0] = dh(p[0]);
      };
    }
    return w;
  }

  /// e^{-t x_0}.
  static Warp exponential(double t) {
    std::ostringstream os;
    os.precision(17);
    os << "exp(-" << t << "*x0)";
    return of_base(
        os.str(), [t](double x) { return std::exp(-t * x); },
        [t](double x) { return -t * std::exp(-t * x); },
        [t](double x) { return t * t * std::exp(-t * x); });
  }

  static Warp hyperbolic_cosine() {
    return of_base(
        "cosh(x0)", [](double x) { return std::cosh(x); }, [](double x) { return std::sinh(x); },
        [](double x) { return std::cosh(x); });
  }

  /// cosh(x_0) cosh(x_1): strictly convex on R^2.
  static Warp cosh_product() {
    return Warp(
        "cosh(x0)*cosh(x1)", [](std::span<const double> p) { return std::cosh(p[0]) * std::cosh(p[1]); },
        [](std::span<const double> p, std::span<double> out) {
          std::fill(out.begin(), out.end(), 0.0);
          out[0] = std::sinh(p[0]) * std::cosh(p[1]);
          out[1] = std::cosh(p[0]) * std::sinh(p[1]);
        });
  }

  static Warp unit() {
    return of_base(
        "1", [](double) { return 1.0; }, [](double) { return 0.0; }, [](double) { return 0.0; });
  }

  double operator()(std::span<const double> p) const { return value_(p); }

  bool has_gradient() const noexcept { return static_cast<bool>(gradient_); }
  void gradient(std::span<const double> p, std::span<double> out) const {
    if (!gradient_) throw CapabilityError("warp '" + name_ + "' has no gradient evaluator");
    gradient_(p, out);
  }

  bool base_only() const noexcept { return base_only_; }
  bool has_base_second_derivative() const noexcept { return base_only_ && dh_ && d2h_; }
  double base_derivative(double x0) const {
    if (!base_only_ || !dh_) throw CapabilityError("warp '" + name_ + "' has no base derivative");
    return dh_(x0);
  }
  double base_second_derivative(double x0) const {
    if (!has_base_second_derivative()) {
      throw CapabilityError("warp '" + name_ + "' has no second-derivative evaluator");
    }
    return d2h_(x0);
  }

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
  Fn value_;
  GradFn gradient_;
  bool base_only_ = false;
  BaseFn dh_;
  BaseFn d2h_;
};

enum class MetricKind {
  kFlat,               ///< Euclidean, the q = 1 collapse
  kSingleExponential,  ///< dx^2 + e^{-2tx} |dy|^2
  kDoubleExponential,  ///< dx^2 + e^{-2 t1 x} dy^2 + e^{-2 t2 x} dz^2
  kConvexDoubleWarp,   ///< dx^2 + h1(x)^2 dy^2 + h2(x, y)^2 dz^2, h1, h2 strictly convex
  kSingleWarp,         ///< dx^2 + h(x)^2 |dy|^2 for a general positive warp h
};

inline const char* to_string(MetricKind k) {
  switch (k) {
    case MetricKind::kFlat: return "flat";
    case MetricKind::kSingleExponential: return "single-exponential";
    case MetricKind::kDoubleExponential: return "double-exponential";
    case MetricKind::kConvexDoubleWarp: return "convex-double-warp";
    case MetricKind::kSingleWarp: return "single-warp";
  }
  return "?";
}

/// Immutable diagonal metric diag(1, h_1^2, ..., h_n^2) on R^{n+1}.
class WarpedMetric {
 public:
  /// Half-width of the box sampled for the positivity / convexity checks.
  static constexpr double kCheckHalfWidth = 3.0;

  static WarpedMetric flat(std::size_t dim) {
    if (dim < 2) throw ShapeError("metric dimension must be >= 2");
    return WarpedMetric(MetricKind::kFlat, std::vector<Warp>(dim - 1, Warp::unit()), {});
  }

  /// dx^2 + e^{-2tx}(dy_1^2 + ... + dy_n^2); t = 0 collapses to the flat branch.
  static WarpedMetric exponential(double t, std::size_t fiber_dim = 1) {
    if (fiber_dim < 1) throw ShapeError("fiber dimension must be >= 1");
    if (!std::isfinite(t)) throw DomainError("twist must be finite");
    if (t == 0.0) return flat(fiber_dim + 1);
    return WarpedMetric(MetricKind::kSingleExponential, std::vector<Warp>(fiber_dim, Warp::exponential(t)),
                        {t});
  }

  /// The metric induced by the entropic parameter: t = log(2 - q).
  static WarpedMetric tsallis(const QParam& p, std::size_t fiber_dim = 1) {
    if (p.is_limit()) return flat(fiber_dim + 1);
    return exponential(p.t(), fiber_dim);
  }

  static WarpedMetric double_exponential(double t1, double t2) {
    if (!std::isfinite(t1) || !std::isfinite(t2)) throw DomainError("twists must be finite");
    return WarpedMetric(MetricKind::kDoubleExponential, {Warp::exponential(t1), Warp::exponential(t2)},
                        {t1, t2});
  }

  static WarpedMetric double_exponential(const QParam& p1, const QParam& p2) {
    return double_exponential(p1.t(), p2.t());
  }

  /// dx^2 + h1(x)^2 dy^2 + h2(x, y)^2 dz^2 with h1 = h1(x_0) and both warps
  /// strictly convex (checked by sampling).
  static WarpedMetric convex_double(Warp h1, Warp h2) {
    if (!h1.base_only()) throw DomainError("h1 must depend on the base coordinate only");
    WarpedMetric m(MetricKind::kConvexDoubleWarp, {std::move(h1), std::move(h2)}, {});
    m.check_convexity();
    return m;
  }

  static WarpedMetric single_warp(Warp h, std::size_t fiber_dim = 1) {
    if (fiber_dim < 1) throw ShapeError("fiber dimension must be >= 1");
    return WarpedMetric(MetricKind::kSingleWarp, std::vector<Warp>(fiber_dim, std::move(h)), {});
  }

  MetricKind kind() const noexcept { return kind_; }
  std::size_t dim() const noexcept { return warps_.size() + 1; }
  const std::vector<Warp>& warps() const noexcept { return warps_; }
  /// Exponential twists (t) or (t1, t2); empty for other kinds.
  const std::vector<double>& twists() const noexcept { return twists_; }

  /// True when every warp provides a gradient, so the Levi-Civita connection
  /// has a closed form.
  bool has_gradients() const {
    for (const auto& w : warps_) {
      if (!w.has_gradient()) return false;
    }
    return true;
  }

  /// Optional box |x_i| <= half_width outside which geodesic solvers stop.
  WarpedMetric with_validity_box(double half_width) const {
    WarpedMetric m = *this;
    m.validity_half_width_ = half_width;
    return m;
  }
  double validity_half_width() const noexcept { return validity_half_width_; }
  bool inside_validity_box(std::span<const double> at) const {
    for (double c : at) {
      if (!(std::fabs(c) <= validity_half_width_)) return false;
    }
    return true;
  }

  void require_dim(std::span<const double> at) const {
    if (at.size() != dim()) {
      std::ostringstream os;
      os << "point has " << at.size() << " coordinates, metric expects " << dim();
      throw ShapeError(os.str());
    }
  }

  /// Warp value h_i at a point (i = 1..n); throws if not strictly positive.
  double warp(std::size_t i, std::span<const double> at) const {
    const double h = warps_[i - 1](at);
    if (!(h > 0.0) || !std::isfinite(h)) {
      std::ostringstream os;
      os.precision(17);
      os << "warp '" << warps_[i - 1].name() << "' is not strictly positive (" << h << ")";
      throw DomainError(os.str());
    }
    return h;
  }

  /// Diagonal components g_ii.
  void diagonal(std::span<const double> at, std::span<double> out) const {
    out[0] = 1.0;
    for (std::size_t i = 1; i < dim(); ++i) {
      const double h = warp(i, at);
      out[i] = h * h;
    }
  }

  std::vector<double> diagonal(std::span<const double> at) const {
    require_dim(at);
    std::vector<double> g(dim());
    diagonal(at, g);
    return g;
  }

  /// g(u, v) at a point.
  double inner(std::span<const double> at, std::span<const double> u, std::span<const double> v) const {
    require_dim(at);
    if (u.size() != dim() || v.size() != dim()) throw ShapeError("tangent vector dimension mismatch");
    double s = u[0] * v[0];
    for (std::size_t i = 1; i < dim(); ++i) {
      const double h = warp(i, at);
      s += h * h * u[i] * v[i];
    }
    return s;
  }

 private:
  WarpedMetric(MetricKind kind, std::vector<Warp> warps, std::vector<double> twists)
      : kind_(kind), warps_(std::move(warps)), twists_(std::move(twists)) {
    check_positivity();
  }

  void check_positivity() const {
    const std::size_t d = dim();
    const int n = 13;
    std::vector<double> p(d, 0.0);
    // Base axis through the origin plus a coarse grid over the first two coordinates.
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        std::fill(p.begin(), p.end(), 0.0);
        p[0] = -kCheckHalfWidth + 2.0 * kCheckHalfWidth * i / (n - 1);
        p[1] = -kCheckHalfWidth + 2.0 * kCheckHalfWidth * j / (n - 1);
        for (std::size_t w = 1; w < d; ++w) (void)warp(w, p);
      }
    }
  }

  void check_convexity() const {
    const int n = 13;
    const double h = 1e-3;
    std::vector<double> p(dim(), 0.0);
    auto eval = [&](std::size_t w, double x, double y) {
      p[0] = x;
      p[1] = y;
      return warps_[w](p);
    };
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const double x = -kCheckHalfWidth + 2.0 * kCheckHalfWidth * i / (n - 1);
        const double y = -kCheckHalfWidth + 2.0 * kCheckHalfWidth * j / (n - 1);
        // h1'' > 0
        const double d2 = (eval(0, x + h, y) - 2.0 * eval(0, x, y) + eval(0, x - h, y)) / (h * h);
        if (!(d2 > 0.0)) throw DomainError("h1 is not strictly convex (sampled h'' <= 0)");
        // Hessian of h2 in (x, y) positive definite
        const double hxx = (eval(1, x + h, y) - 2.0 * eval(1, x, y) + eval(1, x - h, y)) / (h * h);
        const double hyy = (eval(1, x, y + h) - 2.0 * eval(1, x, y) + eval(1, x, y - h)) / (h * h);
        const double hxy = (eval(1, x + h, y + h) - eval(1, x + h, y - h) - eval(1, x - h, y + h) +
                            eval(1, x - h, y - h)) /
                           (4.0 * h * h);
        if (!(hxx > 0.0) || !(hxx * hyy - hxy * hxy > 0.0)) {
          throw DomainError("h2 is not strictly convex (sampled Hessian not positive definite)");
        }
      }
    }
  }

  MetricKind kind_;
  std::vector<Warp> warps_;
  std::vector<double> twists_;
  double validity_half_width_ = std::numeric_limits<double>::infinity();
};

/// ds^2 = dx^2 + sum_i h_i^2 dv_i^2.
inline double line_element(const WarpedMetric& m, std::span<const double> at, std::span<const double> dv) {
  m.require_dim(at);
  if (dv.size() != m.dim()) throw ShapeError("displacement dimension mismatch");
  return m.inner(at, dv, dv);
}

}  // namespace qgeom
