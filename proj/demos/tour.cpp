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

// Walk through the library: deformed arithmetic, entropy composition,
// curvature of the induced metric and a CAT(k) check.

#include <cstdio>

#include "qgeom/qgeom.hpp"

int main() {
  using namespace qgeom;
  const QParam p(0.5);
  std::printf("q = %.2f, t = log(2-q) = %.6f\n", p.q(), p.t());

  const DeformedReal a = tau(p, 2.0), b = tau(p, 3.0);
  std::printf("tau(2) = %.6f, tau(3) = %.6f\n", a.value(), b.value());
  std::printf("tau(2) (+)q tau(3) = %.6f = tau(5) = %.6f\n", q_add(a, b).value(), tau(p, 5.0).value());
  std::printf("tau(2) (*)q tau(3) = %.6f = tau(6) = %.6f\n", q_mul(a, b).value(), tau(p, 6.0).value());

  const DiscreteDistribution u({0.5, 0.5}), v({0.2, 0.3, 0.5});
  std::printf("S_q(A) = %.6f, S_q(B) = %.6f, composition residual = %.2e\n", tsallis_discrete(p, u),
              tsallis_discrete(p, v), check_composition(p, u, v));

  const WarpedMetric m = WarpedMetric::tsallis(p);
  const std::vector<double> at{0.3, -0.2}, e0{1.0, 0.0}, e1{0.0, 1.0};
  std::printf("curvature: closed form %.9f, Riemann tensor %.9f, disk areas %.9f\n", tsallis_curvature(p),
              sectional_curvature_numeric(m, at, e0, e1), bdp_curvature_estimate(m, at, e0, e1, {0.4, 0.2, 0.1}));

  const std::vector<double> x{0.0, 0.0}, y{0.5, 2.0};
  std::printf("distance (0,0)-(0.5,2): closed form %.12f, shooting %.12f\n", geodesic_distance_closed(p, x, y),
              geodesic_distance_numeric(m, x, y));

  const GeodesicSpace space = warped_hyperbolic_space(p);
  const double k = tsallis_curvature(p);
  for (double kk : {k, 2.0 * k}) {
    const CatReport r = cat_test(space, kk, 200, 8, 42);
    std::printf("CAT(%.4f) over %llu samples: %s, worst margin %.3e\n", kk,
                static_cast<unsigned long long>(r.samples), r.pass ? "pass" : "fail", r.worst_margin);
  }
  return 0;
}
