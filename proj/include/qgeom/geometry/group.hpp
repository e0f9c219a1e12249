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

// The twisted group G = (R x R^n, semi-direct product):
//   (x, y) . (x', y') = (x + x', y + e^{t x} y').

#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "qgeom/error.hpp"

namespace qgeom {

class GroupElement {
 public:
  GroupElement(double x0, std::vector<double> y, double t) : x0_(x0), y_(std::move(y)), t_(t) {
    if (!std::isfinite(t)) throw DomainError("twist must be finite");
  }

  static GroupElement identity(std::size_t n, double t) { return {0.0, std::vector<double>(n, 0.0), t}; }

  double x0() const noexcept { return x0_; }
  const std::vector<double>& y() const noexcept { return y_; }
  double twist() const noexcept { return t_; }
  std::size_t fiber_dim() const noexcept { return y_.size(); }

  /// Coordinates (x0, y_1, ..., y_n), i.e. the point of the warped chart.
  std::vector<double> coords() const {
    std::vector<double> c{x0_};
    c.insert(c.end(), y_.begin(), y_.end());
    return c;
  }

 private:
  double x0_;
  std::vector<double> y_;
  double t_;
};

namespace detail {

inline void require_compatible(const GroupElement& a, const GroupElement& b) {
  if (a.fiber_dim() != b.fiber_dim()) throw ShapeError("group elements have different fiber dimension");
  if (a.twist() != b.twist()) throw DomainError("group elements have different twist t");
}

}  // namespace detail

inline GroupElement group_compose(const GroupElement& a, const GroupElement& b) {
  detail::require_compatible(a, b);
  const double s = std::exp(a.twist() * a.x0());
  std::vector<double> y(a.fiber_dim());
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = a.y()[i] + s * b.y()[i];
  return {a.x0() + b.x0(), std::move(y), a.twist()};
}

/// (x, y)^{-1} = (-x, -e^{-t x} y).
inline GroupElement group_inverse(const GroupElement& a) {
  const double s = std::exp(-a.twist() * a.x0());
  std::vector<double> y(a.fiber_dim());
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = -s * a.y()[i];
  return {-a.x0(), std::move(y), a.twist()};
}

/// a . b . a^{-1} . b^{-1}, evaluated in closed form:
///   (0, y_a (1 - e^{t x_b}) + y_b (e^{t x_a} - 1)).
/// The base coordinate is exactly zero.
inline GroupElement commutator(const GroupElement& a, const GroupElement& b) {
  detail::require_compatible(a, b);
  const double t = a.twist();
  const double ca = std::expm1(t * a.x0());
  const double cb = std::expm1(t * b.x0());
  std::vector<double> y(a.fiber_dim());
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = b.y()[i] * ca - a.y()[i] * cb;
  return {0.0, std::move(y), t};
}

}  // namespace qgeom
