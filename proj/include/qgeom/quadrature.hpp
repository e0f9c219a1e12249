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

#pragma once

#include <cmath>
#include <limits>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "qgeom/error.hpp"

namespace qgeom {

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double s = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      comp_ += (sum_ - s) + x;
    } else {
      comp_ += (x - s) + sum_;
    }
    sum_ = s;
  }
  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

struct QuadratureResult {
  double value;
  double error;  ///< absolute error estimate
};

/// Adaptive Gauss-Kronrod (G7/K15) quadrature on a finite interval with an
/// absolute error target. Throws NumericalError (carrying the partial result)
/// when the estimate stays above abs_tol.
template <class F>
QuadratureResult integrate(F&& f, double a, double b, double abs_tol) {
  using boost::math::quadrature::gauss_kronrod;
  if (!(abs_tol > 0.0)) throw DomainError("quadrature tolerance must be positive");
  double error = 0.0;
  double l1 = 0.0;
  double value = gauss_kronrod<double, 15>::integrate(f, a, b, 15, abs_tol, &error, &l1);
  if (std::isfinite(value) && error <= abs_tol) return {value, error};

  // Relative target that translates into the absolute one. Deeper bisection
  // in stages; stop once a stage no longer halves the estimate, which means
  // the target sits below the integrand's roundoff floor.
  const double rel = 0.25 * abs_tol / std::fmax(l1, 1.0);
  for (int depth : {20, 25, 30}) {
    const double previous = error;
    value = gauss_kronrod<double, 15>::integrate(f, a, b, depth, rel, &error, &l1);
    if (std::isfinite(value) && error <= abs_tol) return {value, error};
    if (!std::isfinite(value) || !(error < 0.5 * previous)) break;
  }
  std::ostringstream os;
  os.precision(6);
  os << "quadrature did not converge: error estimate " << error << " > tolerance " << abs_tol;
  throw NumericalError(os.str(), value, error);
}

}  // namespace qgeom
