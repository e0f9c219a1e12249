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
#include <numbers>
#include <vector>

#include "qgeom/geometry/bdp.hpp"
#include "qgeom/geometry/curvature.hpp"
#include "qgeom/geometry/warped_metric.hpp"
#include "qgeom/qcalc.hpp"

using namespace qgeom;

namespace {

const std::vector<double> kRadii{0.4, 0.2, 0.1};

// Geodesic disk area in a space of constant curvature k < 0.
double hyperbolic_disk_area(double k, double r) {
  const double s = std::sqrt(-k);
  return 2.0 * std::numbers::pi / -k * (std::cosh(s * r) - 1.0);
}

}  // namespace

TEST(BdpExtrapolate, ReproducesConstantCurvature) {
  for (double k : {-0.01, -0.4804530139182014, -1.0, -4.0}) {
    std::vector<double> areas;
    for (double r : kRadii) areas.push_back(hyperbolic_disk_area(k, r));
    EXPECT_NEAR(bdp_extrapolate(kRadii, areas), k, 1e-6 * std::fmax(1.0, -k)) << "k=" << k;
  }
}

TEST(BdpExtrapolate, EuclideanDiskIsFlat) {
  std::vector<double> areas;
  for (double r : kRadii) areas.push_back(std::numbers::pi * r * r);
  EXPECT_NEAR(bdp_extrapolate(kRadii, areas), 0.0, 1e-12);
  EXPECT_NEAR(area_deficit_curvature(0.3, std::numbers::pi * 0.09), 0.0, 1e-12);
}

TEST(BdpExtrapolate, InputChecks) {
  EXPECT_THROW(bdp_extrapolate(std::vector<double>{0.1, 0.2}, std::vector<double>{1.0}), ShapeError);
  EXPECT_THROW(bdp_extrapolate(std::vector<double>{}, std::vector<double>{}), ShapeError);
  EXPECT_THROW(bdp_extrapolate(std::vector<double>{0.0}, std::vector<double>{0.0}), DomainError);
}

TEST(Bdp, FlatMetric) {
  const auto m = WarpedMetric::flat(2);
  const std::vector<double> at{0.5, -0.5}, u{1, 0}, v{0, 1};
  const auto est = bdp_curvature_detail(m, at, u, v, kRadii);
  EXPECT_NEAR(est.curvature, 0.0, 1e-3);
  ASSERT_EQ(est.radii.size(), 3u);
  EXPECT_EQ(est.radii[0], 0.1);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_NEAR(est.areas[i], std::numbers::pi * est.radii[i] * est.radii[i], 1e-9);
  }
}

TEST(Bdp, TsallisWithinTwoPercent) {
  for (double q : {0.0, 0.5, 0.9}) {
    const auto m = WarpedMetric::tsallis(QParam(q));
    const double k = tsallis_curvature(QParam(q));
    const std::vector<double> at{0.3, 1.0}, u{1.0, 0.2}, v{-0.3, 1.0};
    const double est = bdp_curvature_estimate(m, at, u, v, kRadii);
    EXPECT_NEAR(est, k, 0.02 * std::fabs(k)) << "q=" << q;
  }
}

TEST(Bdp, AreasMatchConstantCurvatureDisks) {
  const QParam p(0.0);
  const auto m = WarpedMetric::tsallis(p);
  const double k = tsallis_curvature(p);
  const std::vector<double> at{0.0, 0.0}, u{1, 0}, v{0, 1};
  const auto est = bdp_curvature_detail(m, at, u, v, {0.5, 1.0});
  EXPECT_NEAR(est.areas[0], hyperbolic_disk_area(k, 0.5), 1e-8);
  EXPECT_NEAR(est.areas[1], hyperbolic_disk_area(k, 1.0), 1e-8);
}

TEST(Bdp, CoshMetricPlanes) {
  const auto m = WarpedMetric::convex_double(Warp::hyperbolic_cosine(), Warp::cosh_product());
  const std::vector<double> at{0.2, -0.3, 0.4}, u{0, 1, 0}, v{0, 0.5, 1};
  EXPECT_NEAR(bdp_curvature_estimate(m, at, u, v, kRadii), -1.0, 0.02);
}

TEST(Bdp, ArgumentChecks) {
  const auto m = WarpedMetric::tsallis(QParam(0.5));
  const std::vector<double> at{0, 0}, u{1, 0}, v{0, 1}, par{2, 0};
  EXPECT_THROW(bdp_curvature_detail(m, at, u, v, {}), DomainError);
  EXPECT_THROW(bdp_curvature_detail(m, at, u, v, {0.1, -0.2}), DomainError);
  EXPECT_THROW(bdp_curvature_detail(m, at, u, v, kRadii, 3), DomainError);
  EXPECT_THROW(bdp_curvature_detail(m, at, u, par, kRadii), DomainError);
  EXPECT_THROW(bdp_curvature_detail(m, at, u, std::vector<double>{0, 1, 0}, kRadii), ShapeError);
}

TEST(Bdp, RadiusBeyondValidityBox) {
  const auto m = WarpedMetric::tsallis(QParam(0.0)).with_validity_box(1.0);
  const std::vector<double> at{0, 0}, u{1, 0}, v{0, 1};
  EXPECT_NO_THROW(bdp_curvature_detail(m, at, u, v, {0.1, 0.5}));
  EXPECT_THROW(bdp_curvature_detail(m, at, u, v, {0.1, 2.0}), DomainError);
}
