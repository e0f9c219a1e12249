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

// Superstatistics: chi^2-distributed inverse temperature and its Laplace
// transform, the q-exponential.

#pragma once

#include <cmath>
#include <sstream>

#include "qgeom/error.hpp"
#include "qgeom/quadrature.hpp"

namespace qgeom {

/// q > 1, beta0 > 0, E >= 0.
class SuperstatParams {
 public:
  SuperstatParams(double q, double beta0, double energy) : q_(q), beta0_(beta0), energy_(energy) {
    if (!std::isfinite(q) || !(q > 1.0)) throw DomainError("superstatistics needs q > 1");
    if (!std::isfinite(beta0) || !(beta0 > 0.0)) throw DomainError("beta0 must be positive");
    if (!std::isfinite(energy) || energy < 0.0) throw DomainError("energy must be >= 0");
  }

  double q() const noexcept { return q_; }
  double beta0() const noexcept { return beta0_; }
  double energy() const noexcept { return energy_; }

  /// Gamma shape 1/(q-1).
  double shape() const noexcept { return 1.0 / (q_ - 1.0); }
  /// Gamma scale (q-1) beta0.
  double scale() const noexcept { return (q_ - 1.0) * beta0_; }

 private:
  double q_;
  double beta0_;
  double energy_;
};

namespace detail {

inline double log_chi2_density(const SuperstatParams& s, double beta) {
  const double qm1 = s.q() - 1.0;
  const double scale = s.scale();
  // exponent -(2-q)/(1-q) = (2-q)/(q-1)
  return -std::lgamma(1.0 / qm1) - std::log(scale) / qm1 + ((2.0 - s.q()) / qm1) * std::log(beta) -
         beta / scale;
}

}  // namespace detail

/// f(beta) = 1/Gamma(1/(q-1)) [1/((q-1) beta0)]^{1/(q-1)} beta^{-(2-q)/(1-q)} e^{-beta/((q-1) beta0)}.
inline double chi2_density(const SuperstatParams& s, double beta) {
  if (!(beta > 0.0)) throw DomainError("chi^2 density needs beta > 0");
  return std::exp(detail::log_chi2_density(s, beta));
}

/// [1 + (q-1) beta0 E]^{1/(1-q)}.
inline double q_exponential(const SuperstatParams& s) {
  const double arg = (s.q() - 1.0) * s.beta0() * s.energy();
  if (!(1.0 + arg > 0.0)) throw DomainError("q-exponential argument must be positive");
  return std::exp(std::log1p(arg) / (1.0 - s.q()));
}

/// int_0^inf g(beta) f(beta) dbeta on (0, 1) via beta = beta0 (u / (1 - u))^p.
/// p = ceil(a)/a with a = 1/(q-1) turns the beta^(a-1) endpoint factor into
/// an integer power of u, so the integrand is smooth at u = 0.
template <class G>
QuadratureResult integrate_against_density(const SuperstatParams& s, G&& g, double quad_tol) {
  const double a = s.shape();
  const double pw = std::ceil(a) / a;
  const double log_b0 = std::log(s.beta0());
  auto integrand = [&](double u) {
    if (u <= 0.0 || u >= 1.0) return 0.0;
    const double log_beta = log_b0 + pw * (std::log(u) - std::log1p(-u));
    const double beta = std::exp(log_beta);
    // dbeta/du = p beta / (u (1 - u))
    const double lf = detail::log_chi2_density(s, beta) + std::log(pw) + log_beta - std::log(u) - std::log1p(-u);
    if (lf < -745.0) return 0.0;
    return g(beta) * std::exp(lf);
  };
  return integrate(integrand, 0.0, 1.0, quad_tol);
}

struct LaplaceCheck {
  double integral;
  double closed_form;
  double residual;
};

/// Quadrature of the Laplace transform of f at E against the q-exponential.
inline LaplaceCheck laplace_check_detail(const SuperstatParams& s, double quad_tol = 1e-8) {
  const double e = s.energy();
  const auto r = integrate_against_density(s, [e](double beta) { return std::exp(-beta * e); }, quad_tol);
  const double closed = q_exponential(s);
  return {r.value, closed, std::fabs(r.value - closed)};
}

inline double laplace_check(const SuperstatParams& s, double quad_tol = 1e-8) {
  return laplace_check_detail(s, quad_tol).residual;
}

}  // namespace qgeom
