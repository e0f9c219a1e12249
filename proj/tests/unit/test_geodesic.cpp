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

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "qgeom/geometry/geodesic.hpp"
#include "qgeom/geometry/warped_metric.hpp"
#include "qgeom/qcalc.hpp"
#include "qgeom/random.hpp"

using namespace qgeom;

namespace {

std::vector<double> random_point(Rng& rng, std::size_t n, double hw) {
  std::vector<double> p(n);
  for (auto& c : p) c = rng.uniform(-hw, hw);
  return p;
}

// Distance on dx^2 + cosh^2(x) dy^2 + cosh^2(x) cosh^2(y) dz^2 through its
// isometric embedding in the hyperboloid model of H^3.
double cosh_metric_oracle(const std::vector<double>& a, const std::vector<double>& b) {
  auto embed = [](const std::vector<double>& p) {
    const double r = std::cosh(p[0]) * std::cosh(p[1]);
    return std::array<long double, 4>{r * std::cosh(p[2]), r * std::sinh(p[2]), std::cosh(p[0]) * std::sinh(p[1]),
                                      std::sinh(p[0])};
  };
  const auto pa = embed(a), pb = embed(b);
  const long double dot = -pa[0] * pb[0] + pa[1] * pb[1] + pa[2] * pb[2] + pa[3] * pb[3];
  return static_cast<double>(std::acosh(std::max(1.0L, -dot)));
}

}  // namespace

TEST(GeodesicClosed, KnownValue) {
  const double t = std::log(2.0);
  const std::vector<double> a{0.0, 0.0}, b{0.0, 1.0};
  EXPECT_NEAR(geodesic_distance_closed(QParam(0.0), a, b), std::acosh(1.0 + 0.5 * t * t) / t, 1e-15);
  // Raising both endpoints by x shrinks the fiber separation by e^{-tx}.
  const std::vector<double> a2{1.0, 0.0}, b2{1.0, 2.0};
  EXPECT_NEAR(geodesic_distance_closed(t, a2, b2), geodesic_distance_closed(t, a, b), 1e-14);
}

TEST(GeodesicClosed, SharedFiberIsExact) {
  Rng rng(1);
  for (int i = 0; i < 100; ++i) {
    const double y = rng.uniform(-3, 3), x1 = rng.uniform(-3, 3), x2 = rng.uniform(-3, 3);
    const std::vector<double> a{x1, y, -y}, b{x2, y, -y};
    EXPECT_EQ(geodesic_distance_closed(QParam(0.3), a, b), std::fabs(x1 - x2));
  }
}

TEST(GeodesicClosed, FlatAndSymmetry) {
  const std::vector<double> a{1.0, 2.0}, b{4.0, 6.0};
  EXPECT_DOUBLE_EQ(geodesic_distance_closed(QParam(1.0), a, b), 5.0);
  EXPECT_EQ(geodesic_distance_closed(0.7, a, a), 0.0);
  Rng rng(2);
  for (int i = 0; i < 50; ++i) {
    const auto p = random_point(rng, 3, 3), r = random_point(rng, 3, 3);
    EXPECT_EQ(geodesic_distance_closed(0.4, p, r), geodesic_distance_closed(0.4, r, p));
  }
  EXPECT_THROW(geodesic_distance_closed(0.4, std::vector<double>{0, 0}, std::vector<double>{0, 0, 0}), ShapeError);
}

TEST(GeodesicClosed, PointsLieOnTheGeodesic) {
  Rng rng(3);
  for (double t : {0.0, std::log(2.0), -0.5}) {
    for (int i = 0; i < 30; ++i) {
      const auto a = random_point(rng, 3, 3), b = random_point(rng, 3, 3);
      const double d = geodesic_distance_closed(t, a, b);
      const auto p0 = geodesic_point_closed(t, a, b, 0.0);
      const auto p1 = geodesic_point_closed(t, a, b, 1.0);
      for (std::size_t k = 0; k < 3; ++k) {
        EXPECT_NEAR(p0[k], a[k], 1e-12);
        EXPECT_NEAR(p1[k], b[k], 1e-12);
      }
      for (double s : {0.2, 0.5, 0.9}) {
        const auto p = geodesic_point_closed(t, a, b, s);
        EXPECT_NEAR(geodesic_distance_closed(t, a, p), s * d, 1e-10 * std::fmax(1.0, d));
        EXPECT_NEAR(geodesic_distance_closed(t, p, b), (1 - s) * d, 1e-10 * std::fmax(1.0, d));
      }
    }
  }
}

TEST(GeodesicNumeric, MatchesClosedForm) {
  Rng rng(4);
  for (std::size_t n : {2u, 3u}) {
    for (double q : {0.0, 0.5, 0.9}) {
      const auto m = WarpedMetric::tsallis(QParam(q), n - 1);
      for (int i = 0; i < 8; ++i) {
        const auto a = random_point(rng, n, 3), b = random_point(rng, n, 3);
        const auto sol = solve_geodesic(m, a, b);
        EXPECT_LE(sol.residual, 1e-10);
        EXPECT_NEAR(sol.length, geodesic_distance_closed(QParam(q), a, b), 1e-6) << "q=" << q << " n=" << n;
      }
    }
  }
}

TEST(GeodesicNumeric, MidpointMatchesClosedForm) {
  const QParam p(0.0);
  const auto m = WarpedMetric::tsallis(p);
  const std::vector<double> a{-1.0, -2.0}, b{1.5, 2.5};
  const auto sol = solve_geodesic(m, a, b, 1e-12);
  const auto mid = geodesic_point_numeric(m, sol, 0.5, 1e-12);
  const auto ref = geodesic_point_closed(p, a, b, 0.5);
  EXPECT_NEAR(mid[0], ref[0], 1e-8);
  EXPECT_NEAR(mid[1], ref[1], 1e-8);
}

TEST(GeodesicNumeric, DegenerateAndFlat) {
  const auto m = WarpedMetric::tsallis(QParam(0.2));
  const std::vector<double> a{0.3, 0.4};
  const auto sol = solve_geodesic(m, a, a);
  EXPECT_EQ(sol.length, 0.0);
  EXPECT_EQ(sol.iterations, 0);
  const auto flat = WarpedMetric::flat(2);
  EXPECT_NEAR(geodesic_distance_numeric(flat, std::vector<double>{0, 0}, std::vector<double>{3, 4}), 5.0, 1e-10);
  EXPECT_THROW(solve_geodesic(m, a, a, 0.0), DomainError);
  EXPECT_THROW(solve_geodesic(m, a, std::vector<double>{0, 0, 0}), ShapeError);
}

TEST(GeodesicNumeric, SharedFiberStaysOnLine) {
  const auto m = WarpedMetric::tsallis(QParam(0.0));
  const std::vector<double> a{-2.0, 1.0}, b{2.5, 1.0};
  EXPECT_NEAR(geodesic_distance_numeric(m, a, b), 4.5, 1e-9);
}

TEST(GeodesicNumeric, DoubleExponentialEqualTwistsIsHyperbolic) {
  const double t = std::log(1.5);
  const auto m = WarpedMetric::double_exponential(t, t);
  Rng rng(5);
  for (int i = 0; i < 6; ++i) {
    const auto a = random_point(rng, 3, 2), b = random_point(rng, 3, 2);
    EXPECT_NEAR(geodesic_distance_numeric(m, a, b), geodesic_distance_closed(t, a, b), 1e-7);
  }
}

TEST(GeodesicNumeric, DoubleExponentialSymmetric) {
  const auto m = WarpedMetric::double_exponential(QParam(0.1), QParam(0.8));
  const std::vector<double> a{-0.5, 1.0, -1.0}, b{0.7, -0.4, 1.2};
  EXPECT_NEAR(geodesic_distance_numeric(m, a, b), geodesic_distance_numeric(m, b, a), 1e-8);
}

TEST(GeodesicNumeric, CoshMetricMatchesHyperboloid) {
  const auto m = WarpedMetric::convex_double(Warp::hyperbolic_cosine(), Warp::cosh_product());
  Rng rng(6);
  for (int i = 0; i < 6; ++i) {
    const auto a = random_point(rng, 3, 1.5), b = random_point(rng, 3, 1.5);
    EXPECT_NEAR(geodesic_distance_numeric(m, a, b), cosh_metric_oracle(a, b), 1e-7);
  }
}

TEST(GeodesicNumeric, ValidityBoxRejectsOutsideTargets) {
  const auto m = WarpedMetric::tsallis(QParam(0.0)).with_validity_box(1.0);
  EXPECT_NO_THROW(solve_geodesic(m, std::vector<double>{0.0, -0.5}, std::vector<double>{0.5, 0.5}));
  EXPECT_THROW(solve_geodesic(m, std::vector<double>{0.0, 0.0}, std::vector<double>{2.0, 0.0}), NumericalError);
}
