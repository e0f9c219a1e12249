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

// Type-erased geodesic metric spaces used by the CAT(k) harness: the
// exponentially warped hyperbolic spaces, arbitrary warped metrics through
// the numeric geodesic solver, weighted metric trees and l^p spaces.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <memory>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qgeom/error.hpp"
#include "qgeom/geometry/geodesic.hpp"
#include "qgeom/geometry/warped_metric.hpp"
#include "qgeom/qcalc.hpp"
#include "qgeom/random.hpp"

namespace qgeom {

/// Points are coordinate vectors; tree points are (edge index, offset).
using SpacePoint = std::vector<double>;

/// A chosen geodesic from a to b, evaluated at arclength fraction s in [0, 1].
using Segment = std::function<SpacePoint(double)>;

enum class SpaceKind { kWarpedHyperbolic, kMetricTree, kLp };

inline const char* to_string(SpaceKind k) {
  switch (k) {
    case SpaceKind::kWarpedHyperbolic: return "warped-hyperbolic";
    case SpaceKind::kMetricTree: return "metric-tree";
    case SpaceKind::kLp: return "lp";
  }
  return "unknown";
}

struct GeodesicSpace {
  SpaceKind kind = SpaceKind::kLp;
  std::string description;
  std::function<double(const SpacePoint&, const SpacePoint&)> distance;
  /// Default geodesic between two points.
  std::function<Segment(const SpacePoint&, const SpacePoint&)> segment;
  /// All geodesics the space can enumerate between two points; the default
  /// one comes first.
  std::function<std::vector<Segment>(const SpacePoint&, const SpacePoint&)> segment_variants;
  /// Random point from the sampling region.
  std::function<SpacePoint(Rng&)> sample;
  /// Random point near p, at scale `radius` (relative to the sampling region).
  std::function<SpacePoint(const SpacePoint&, double, Rng&)> perturb;
  /// Same space with geodesic solver tolerance tightened by `factor`; empty
  /// for spaces whose geodesics are exact.
  std::function<GeodesicSpace(double)> refined;

  GeodesicSpace refine(double factor) const { return refined ? refined(factor) : *this; }
  SpacePoint geodesic_point(const SpacePoint& a, const SpacePoint& b, double s) const { return segment(a, b)(s); }
};

/// Vertices, side lengths a = d(y, z), b = d(z, x), c = d(x, y) and side samples.
struct GeodesicTriangle {
  struct SidePoint {
    int side;  ///< 0: [y z], 1: [z x], 2: [x y]
    double fraction;
    SpacePoint point;
  };
  SpacePoint x, y, z;
  double a = 0.0, b = 0.0, c = 0.0;
  std::vector<SidePoint> samples;
};

/// Triangle with `per_side` interior samples on each side at fractions j/(per_side+1).
inline GeodesicTriangle make_triangle(const GeodesicSpace& space, SpacePoint x, SpacePoint y, SpacePoint z,
                                      int per_side) {
  GeodesicTriangle tri{std::move(x), std::move(y), std::move(z), 0.0, 0.0, 0.0, {}};
  tri.a = space.distance(tri.y, tri.z);
  tri.b = space.distance(tri.z, tri.x);
  tri.c = space.distance(tri.x, tri.y);
  const Segment sides[3] = {space.segment(tri.y, tri.z), space.segment(tri.z, tri.x), space.segment(tri.x, tri.y)};
  for (int side = 0; side < 3; ++side) {
    for (int j = 1; j <= per_side; ++j) {
      const double s = static_cast<double>(j) / (per_side + 1);
      tri.samples.push_back({side, s, sides[side](s)});
    }
  }
  return tri;
}

namespace detail {

inline SpacePoint lerp(const SpacePoint& a, const SpacePoint& b, double s) {
  SpacePoint out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = (1.0 - s) * a[i] + s * b[i];
  return out;
}

inline std::function<SpacePoint(Rng&)> box_sampler(std::size_t dim, double half_width) {
  return [dim, half_width](Rng& rng) {
    SpacePoint p(dim);
    for (auto& c : p) c = rng.uniform(-half_width, half_width);
    return p;
  };
}

inline std::function<SpacePoint(const SpacePoint&, double, Rng&)> box_perturber(double half_width) {
  return [half_width](const SpacePoint& p, double radius, Rng& rng) {
    SpacePoint out = p;
    for (auto& c : out) c = std::clamp(c + rng.uniform(-1.0, 1.0) * radius * half_width, -half_width, half_width);
    return out;
  };
}

inline void check_half_width(double half_width) {
  if (!(half_width > 0.0) || !std::isfinite(half_width)) throw DomainError("sampling half-width must be positive");
}

}  // namespace detail

/// Exponentially warped space with warp e^{-t x} on every fiber coordinate,
/// t = log(2 - q); distances and geodesics in closed form. Samples the box
/// [-half_width, half_width]^(1 + fiber_dim).
inline GeodesicSpace warped_hyperbolic_space(const QParam& p, std::size_t fiber_dim = 1, double half_width = 3.0) {
  if (fiber_dim < 1) throw ShapeError("fiber dimension must be at least 1");
  detail::check_half_width(half_width);
  const double t = p.t();
  GeodesicSpace s;
  s.kind = SpaceKind::kWarpedHyperbolic;
  std::ostringstream os;
  os.precision(17);
  os << "warped-hyperbolic q=" << p.q() << " dim=" << fiber_dim + 1 << " (closed form)";
  s.description = os.str();
  s.distance = [t](const SpacePoint& a, const SpacePoint& b) { return geodesic_distance_closed(t, a, b); };
  s.segment = [t](const SpacePoint& a, const SpacePoint& b) -> Segment {
    return [t, a, b](double f) { return geodesic_point_closed(t, a, b, f); };
  };
  s.segment_variants = [seg = s.segment](const SpacePoint& a, const SpacePoint& b) {
    return std::vector<Segment>{seg(a, b)};
  };
  s.sample = detail::box_sampler(fiber_dim + 1, half_width);
  s.perturb = detail::box_perturber(half_width);
  return s;
}

/// Any warped metric, through the numeric geodesic solver at tolerance `tol`.
/// Geodesics may wander up to four half-widths from the origin.
inline GeodesicSpace warped_geodesic_space(const WarpedMetric& metric, double half_width = 2.0, double tol = 1e-9) {
  detail::check_half_width(half_width);
  if (!(tol > 0.0)) throw DomainError("geodesic tolerance must be positive");
  auto m = std::make_shared<const WarpedMetric>(metric.with_validity_box(4.0 * half_width));
  GeodesicSpace s;
  s.kind = SpaceKind::kWarpedHyperbolic;
  std::ostringstream os;
  os << to_string(m->kind()) << " dim=" << m->dim() << " (numeric geodesics, tol " << tol << ")";
  s.description = os.str();
  s.distance = [m, tol](const SpacePoint& a, const SpacePoint& b) { return geodesic_distance_numeric(*m, a, b, tol); };
  s.segment = [m, tol](const SpacePoint& a, const SpacePoint& b) -> Segment {
    auto sol = std::make_shared<const GeodesicSolution>(solve_geodesic(*m, a, b, tol));
    return [m, sol, tol](double f) { return geodesic_point_numeric(*m, *sol, f, tol); };
  };
  s.segment_variants = [seg = s.segment](const SpacePoint& a, const SpacePoint& b) {
    return std::vector<Segment>{seg(a, b)};
  };
  s.sample = detail::box_sampler(m->dim(), half_width);
  s.perturb = detail::box_perturber(half_width);
  s.refined = [metric, half_width, tol](double factor) {
    return warped_geodesic_space(metric, half_width, std::max(tol / factor, 1e-13));
  };
  return s;
}

/// Undirected tree on vertices 0..n-1 with positive edge weights.
struct WeightedTree {
  struct Edge {
    std::size_t u, v;
    double weight;
  };
  std::size_t vertex_count = 0;
  std::vector<Edge> edges;
  std::vector<std::string> labels;  ///< optional vertex names
};

/// Geodesic structure of a metric tree: all-pairs vertex distances and
/// next-hop tables, so that paths can be walked edge by edge.
class TreeMetric {
 public:
  explicit TreeMetric(WeightedTree tree) : tree_(std::move(tree)) {
    const std::size_t n = tree_.vertex_count;
    if (n < 2) throw DomainError("a metric tree needs at least two vertices");
    if (tree_.edges.size() != n - 1) {
      std::ostringstream os;
      os << "a tree on " << n << " vertices has " << n - 1 << " edges, got " << tree_.edges.size()
         << (tree_.edges.size() < n - 1 ? " (disconnected)" : " (contains a cycle)");
      throw DomainError(os.str());
    }
    adj_.assign(n, {});
    for (std::size_t e = 0; e < tree_.edges.size(); ++e) {
      const auto& ed = tree_.edges[e];
      if (ed.u >= n || ed.v >= n) throw DomainError("edge endpoint out of range");
      if (ed.u == ed.v) throw DomainError("self-loop in tree");
      if (!(ed.weight > 0.0) || !std::isfinite(ed.weight)) {
        std::ostringstream os;
        os << "edge " << ed.u << "-" << ed.v << " has non-positive weight " << ed.weight;
        throw DomainError(os.str());
      }
      adj_[ed.u].push_back(e);
      adj_[ed.v].push_back(e);
    }
    const double inf = std::numeric_limits<double>::infinity();
    dist_.assign(n * n, inf);
    hop_.assign(n * n, kNone);
    for (std::size_t src = 0; src < n; ++src) {
      // Depth-first walk; hop_[v][src] is the edge leaving v toward src.
      std::vector<std::size_t> stack{src};
      dist_[src * n + src] = 0.0;
      while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t e : adj_[v]) {
          const std::size_t w = other(e, v);
          if (dist_[src * n + w] != inf) continue;
          dist_[src * n + w] = dist_[src * n + v] + tree_.edges[e].weight;
          hop_[w * n + src] = e;
          stack.push_back(w);
        }
      }
      for (std::size_t v = 0; v < n; ++v) {
        if (dist_[src * n + v] == inf) throw DomainError("tree is disconnected");
      }
    }
  }

  const WeightedTree& tree() const noexcept { return tree_; }
  std::size_t vertex_count() const noexcept { return tree_.vertex_count; }
  double vertex_distance(std::size_t i, std::size_t j) const { return dist_[i * tree_.vertex_count + j]; }

  /// Point on edge e at distance `offset` from the edge's first endpoint u.
  SpacePoint point(std::size_t e, double offset) const {
    check_edge(e);
    return {static_cast<double>(e), std::clamp(offset, 0.0, tree_.edges[e].weight)};
  }
  SpacePoint vertex_point(std::size_t v) const {
    if (v >= tree_.vertex_count) throw DomainError("vertex out of range");
    const std::size_t e = adj_[v].front();
    return point(e, tree_.edges[e].u == v ? 0.0 : tree_.edges[e].weight);
  }

  double distance(const SpacePoint& p, const SpacePoint& q) const {
    const auto [ep, op] = unpack(p);
    const auto [eq, oq] = unpack(q);
    if (ep == eq) return std::fabs(op - oq);
    const Route r = route(ep, op, eq, oq);
    return r.length;
  }

  /// Point at fraction s of the unique path from p to q.
  SpacePoint walk(const SpacePoint& p, const SpacePoint& q, double s) const {
    const auto [ep, op] = unpack(p);
    const auto [eq, oq] = unpack(q);
    if (ep == eq) return point(ep, (1.0 - s) * op + s * oq);
    const Route r = route(ep, op, eq, oq);
    double left = s * r.length;
    // Leg on p's edge toward vertex r.from.
    const double first = offset_to(ep, op, r.from);
    if (left <= first) {
      return point(ep, tree_.edges[ep].u == r.from ? op - left : op + left);
    }
    left -= first;
    std::size_t v = r.from;
    while (v != r.to) {
      const std::size_t e = hop_[v * tree_.vertex_count + r.to];
      const double w = tree_.edges[e].weight;
      if (left <= w) return point(e, tree_.edges[e].u == v ? left : w - left);
      left -= w;
      v = other(e, v);
    }
    const double last = offset_to(eq, oq, r.to);
    left = std::min(left, last);
    return point(eq, tree_.edges[eq].u == r.to ? left : tree_.edges[eq].weight - left);
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  struct Route {
    std::size_t from, to;
    double length;
  };

  void check_edge(std::size_t e) const {
    if (e >= tree_.edges.size()) throw DomainError("tree point refers to a missing edge");
  }
  std::pair<std::size_t, double> unpack(const SpacePoint& p) const {
    if (p.size() != 2) throw ShapeError("tree points are (edge, offset) pairs");
    if (!(p[0] >= 0.0) || p[0] != std::floor(p[0])) throw DomainError("tree point edge index must be a whole number");
    const auto e = static_cast<std::size_t>(p[0]);
    check_edge(e);
    if (!(p[1] >= 0.0 && p[1] <= tree_.edges[e].weight)) throw DomainError("tree point offset outside its edge");
    return {e, p[1]};
  }
  std::size_t other(std::size_t e, std::size_t v) const {
    return tree_.edges[e].u == v ? tree_.edges[e].v : tree_.edges[e].u;
  }
  double offset_to(std::size_t e, double off, std::size_t v) const {
    return tree_.edges[e].u == v ? off : tree_.edges[e].weight - off;
  }
  /// Shortest of the four endpoint combinations; exactly the tree path.
  Route route(std::size_t ep, double op, std::size_t eq, double oq) const {
    Route best{0, 0, std::numeric_limits<double>::infinity()};
    for (std::size_t i : {tree_.edges[ep].u, tree_.edges[ep].v}) {
      for (std::size_t j : {tree_.edges[eq].u, tree_.edges[eq].v}) {
        const double len = offset_to(ep, op, i) + vertex_distance(i, j) + offset_to(eq, oq, j);
        if (len < best.length) best = {i, j, len};
      }
    }
    return best;
  }

  WeightedTree tree_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<double> dist_;
  std::vector<std::size_t> hop_;
};

/// Metric tree as a geodesic space. Samples edges proportionally to weight.
inline GeodesicSpace tree_metric(WeightedTree tree) {
  auto tm = std::make_shared<const TreeMetric>(std::move(tree));
  GeodesicSpace s;
  s.kind = SpaceKind::kMetricTree;
  std::ostringstream os;
  os << "metric tree with " << tm->vertex_count() << " vertices";
  s.description = os.str();
  s.distance = [tm](const SpacePoint& a, const SpacePoint& b) { return tm->distance(a, b); };
  s.segment = [tm](const SpacePoint& a, const SpacePoint& b) -> Segment {
    return [tm, a, b](double f) { return tm->walk(a, b, f); };
  };
  s.segment_variants = [seg = s.segment](const SpacePoint& a, const SpacePoint& b) {
    return std::vector<Segment>{seg(a, b)};
  };
  std::vector<double> cumulative;
  double total = 0.0;
  for (const auto& e : tm->tree().edges) cumulative.push_back(total += e.weight);
  s.sample = [tm, cumulative, total](Rng& rng) {
    const double r = rng.uniform() * total;
    const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), r);
    const auto e = static_cast<std::size_t>(std::min<std::ptrdiff_t>(it - cumulative.begin(),
                                                                      static_cast<std::ptrdiff_t>(cumulative.size()) - 1));
    return tm->point(e, rng.uniform() * tm->tree().edges[e].weight);
  };
  s.perturb = [tm, sample = s.sample](const SpacePoint& p, double radius, Rng& rng) {
    if (rng.uniform() < radius) return sample(rng);
    const auto e = static_cast<std::size_t>(p[0]);
    const double w = tm->tree().edges[e].weight;
    return tm->point(e, p[1] + rng.uniform(-1.0, 1.0) * radius * w);
  };
  return s;
}

/// R^dim with the p-norm; samples the box [-half_width, half_width]^dim.
/// Straight lines are geodesics for every p >= 1. For p = 1 the axis-aligned
/// staircases (one per axis order, up to 720) are enumerated as well.
inline GeodesicSpace lp_space(std::size_t dim, double p, double half_width = 10.0) {
  if (dim < 2) throw DomainError("l^p space needs dim >= 2");
  if (!(p >= 1.0) || !std::isfinite(p)) {
    std::ostringstream os;
    os << "l^p needs finite p >= 1 for the triangle inequality (got p=" << p << ")";
    throw DomainError(os.str());
  }
  detail::check_half_width(half_width);
  GeodesicSpace s;
  s.kind = SpaceKind::kLp;
  std::ostringstream os;
  os.precision(17);
  os << "l^" << p << " dim=" << dim;
  s.description = os.str();
  s.distance = [dim, p](const SpacePoint& a, const SpacePoint& b) {
    if (a.size() != dim || b.size() != dim) throw ShapeError("point dimension does not match the l^p space");
    if (p == 1.0) {
      double sum = 0.0;
      for (std::size_t i = 0; i < dim; ++i) sum += std::fabs(a[i] - b[i]);
      return sum;
    }
    double scale = 0.0;
    for (std::size_t i = 0; i < dim; ++i) scale = std::max(scale, std::fabs(a[i] - b[i]));
    if (scale == 0.0) return 0.0;
    double sum = 0.0;
    for (std::size_t i = 0; i < dim; ++i) sum += std::pow(std::fabs(a[i] - b[i]) / scale, p);
    return scale * std::pow(sum, 1.0 / p);
  };
  s.segment = [](const SpacePoint& a, const SpacePoint& b) -> Segment {
    return [a, b](double f) { return detail::lerp(a, b, f); };
  };
  s.segment_variants = [dim, p, seg = s.segment](const SpacePoint& a, const SpacePoint& b) {
    std::vector<Segment> out{seg(a, b)};
    if (p != 1.0 || dim > 6) return out;
    std::vector<std::size_t> order(dim);
    std::iota(order.begin(), order.end(), 0);
    do {
      out.push_back([a, b, order](double f) {
        double total = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) total += std::fabs(b[i] - a[i]);
        double left = f * total;
        SpacePoint x = a;
        for (std::size_t axis : order) {
          const double leg = std::fabs(b[axis] - a[axis]);
          if (left >= leg) {
            x[axis] = b[axis];
            left -= leg;
          } else {
            x[axis] = a[axis] + std::copysign(left, b[axis] - a[axis]);
            break;
          }
        }
        return x;
      });
    } while (std::next_permutation(order.begin(), order.end()));
    return out;
  };
  s.sample = detail::box_sampler(dim, half_width);
  s.perturb = detail::box_perturber(half_width);
  return s;
}

}  // namespace qgeom
