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

// Tsallis and Boltzmann-Gibbs-Shannon entropy functionals (k_B = 1).

#pragma once

#include <cmath>
#include <functional>
#include <span>
#include <sstream>
#include <utility>
#include <vector>

#include "qgeom/error.hpp"
#include "qgeom/qcalc.hpp"
#include "qgeom/quadrature.hpp"

namespace qgeom {

/// Finite probability vector: entries >= 0 summing to one within 1e-12.
/// Inputs that miss the tolerance are rejected, never renormalized.
class DiscreteDistribution {
 public:
  static constexpr double kNormTolerance = 1e-12;

  explicit DiscreteDistribution(std::vector<double> probs) : probs_(std::move(probs)) {
    if (probs_.empty()) throw ValidationError("distribution is empty");
    CompensatedSum sum;
    for (std::size_t i = 0; i < probs_.size(); ++i) {
      const double p = probs_[i];
      if (!std::isfinite(p) || p < 0.0) {
        std::ostringstream os;
        os << "probability #" << i << " is negative or not finite (" << p << ")";
        throw ValidationError(os.str());
      }
      sum.add(p);
    }
    const double deficit = 1.0 - sum.value();
    if (std::fabs(deficit) > kNormTolerance) {
      std::ostringstream os;
      os.precision(17);
      os << "probabilities sum to " << sum.value() << " (deficit " << deficit
         << "), tolerance " << kNormTolerance;
      throw ValidationError(os.str());
    }
  }

  /// Outer product a_i * b_j flattened row-major (index i * b.size() + j).
  static DiscreteDistribution product(const DiscreteDistribution& a, const DiscreteDistribution& b) {
    std::vector<double> out;
    out.reserve(a.size() * b.size());
    for (double pa : a.probs_) {
      for (double pb : b.probs_) out.push_back(pa * pb);
    }
    return DiscreteDistribution(std::move(out), Trusted{});
  }

  std::span<const double> probs() const noexcept { return probs_; }
  std::size_t size() const noexcept { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }

 private:
  struct Trusted {};
  DiscreteDistribution(std::vector<double> probs, Trusted) : probs_(std::move(probs)) {}

  std::vector<double> probs_;
};

/// -sum p_i log p_i with 0 log 0 = 0.
inline double bgs_entropy(const DiscreteDistribution& dist) {
  CompensatedSum s;
  for (double p : dist.probs()) {
    if (p > 0.0) s.add(-p * std::log(p));
  }
  return s.value();
}

/// S_q = (1 - sum p_i^q) / (q - 1); BGS entropy on the q = 1 branch.
/// Zero entries contribute nothing for q > 0 and are a domain error for q <= 0.
inline double tsallis_discrete(const QParam& p, const DiscreteDistribution& dist) {
  if (p.is_limit()) return bgs_entropy(dist);
  const double q = p.q();
  CompensatedSum s;
  for (double pi : dist.probs()) {
    if (pi == 0.0) {
      if (q <= 0.0) throw DomainError("0^q is undefined for q <= 0 (zero-probability entry)");
      continue;
    }
    s.add(std::pow(pi, q));
  }
  return (1.0 - s.value()) / (q - 1.0);
}

inline DiscreteDistribution product_distribution(const DiscreteDistribution& a,
                                                 const DiscreteDistribution& b) {
  return DiscreteDistribution::product(a, b);
}

/// |S_q(a x b) - (S_q(a) (+)_q S_q(b))|.
inline double check_composition(const QParam& p, const DiscreteDistribution& a,
                                const DiscreteDistribution& b) {
  const double sa = tsallis_discrete(p, a);
  const double sb = tsallis_discrete(p, b);
  const double sab = tsallis_discrete(p, product_distribution(a, b));
  return std::fabs(sab - q_add(p, sa, sb));
}

/// ln_q(x) = (1 - x^{1-q}) / (q - 1); log x on the q = 1 branch.
inline double q_log(const QParam& p, double x) {
  if (!(x > 0.0)) throw DomainError("q-logarithm needs x > 0");
  if (p.is_limit()) return std::log(x);
  return std::expm1(p.one_minus_q() * std::log(x)) / p.one_minus_q();
}

/// |sum_i p_i ln_q(1/p_i) - S_q|; the two forms agree identically.
inline double q_log_representation_residual(const QParam& p, const DiscreteDistribution& dist) {
  CompensatedSum s;
  for (double pi : dist.probs()) {
    if (!(pi > 0.0)) throw DomainError("q-log representation needs every p_i > 0");
    s.add(pi * q_log(p, 1.0 / pi));
  }
  return std::fabs(s.value() - tsallis_discrete(p, dist));
}

/// Probability density on a finite interval [a, b] (Lebesgue measure).
class DensityFunction {
 public:
  using Fn = std::function<double(double)>;

  DensityFunction(Fn f, double a, double b, double norm_tol = 1e-8)
      : f_(std::move(f)), a_(a), b_(b) {
    if (!f_) throw DomainError("density evaluator is empty");
    if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
      throw DomainError("density support must be a finite interval a < b");
    }
    const auto mass = integrate(f_, a_, b_, 0.1 * norm_tol);
    if (std::fabs(mass.value - 1.0) > norm_tol) {
      std::ostringstream os;
      os.precision(17);
      os << "density integrates to " << mass.value << ", not 1";
      throw ValidationError(os.str());
    }
  }

  double operator()(double x) const { return f_(x); }
  double lower() const noexcept { return a_; }
  double upper() const noexcept { return b_; }

 private:
  Fn f_;
  double a_;
  double b_;
};

/// (1 - int p(x)^q dx) / (q - 1); -int p log p on the q = 1 branch.
inline double tsallis_continuous(const QParam& p, const DensityFunction& f, double quad_tol = 1e-8) {
  if (p.is_limit()) {
    auto integrand = [&](double x) {
      const double v = f(x);
      return v > 0.0 ? -v * std::log(v) : 0.0;
    };
    return integrate(integrand, f.lower(), f.upper(), quad_tol).value;
  }
  const double q = p.q();
  auto integrand = [&](double x) {
    const double v = f(x);
    if (v < 0.0) throw DomainError("density evaluated negative");
    if (v == 0.0) {
      if (q <= 0.0) throw DomainError("0^q is undefined for q <= 0 (density vanishes)");
      return 0.0;
    }
    return std::pow(v, q);
  };
  const auto r = integrate(integrand, f.lower(), f.upper(), quad_tol);
  return (1.0 - r.value) / (q - 1.0);
}

}  // namespace qgeom
