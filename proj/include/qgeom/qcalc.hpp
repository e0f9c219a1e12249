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

// The deformed field R_q: the isomorphism tau_q : R -> R_q, its inverse, and
// the arithmetic carried over from R through it.
//
// A DeformedReal keeps, next to its value u, the log-coordinate
// l = log(1 + (1-q) u) = t * tau_q^{-1}(u). In that coordinate q-addition is
// ordinary addition and the generalized product is l_u * l_v / t, so operands
// close to the lower end of the range (u -> -1/(1-q)) keep full precision.
// Plain-double overloads of q_add / q_sub evaluate the textbook formulas.

#pragma once

#include <cfloat>
#include <cmath>
#include <sstream>
#include <string>

#include "qgeom/error.hpp"

namespace qgeom {

/// Entropic parameter q with cached twist t = log(2 - q).
class QParam {
 public:
  /// |1 - q| below this switches every operation to its q = 1 form.
  static constexpr double kLimitWidth = 1e-9;

  explicit QParam(double q) : q_(q) {
    if (!std::isfinite(q) || !(q < 2.0)) {
      throw DomainError("q must be finite and < 2, got " + std::to_string(q));
    }
    one_minus_q_ = 1.0 - q;
    t_ = std::log1p(one_minus_q_);
    limit_ = std::fabs(one_minus_q_) < kLimitWidth;
  }

  double q() const noexcept { return q_; }
  double one_minus_q() const noexcept { return one_minus_q_; }
  /// t = log(2 - q); 0 at q = 1, negative for q > 1.
  double t() const noexcept { return t_; }
  bool is_limit() const noexcept { return limit_; }

  friend bool operator==(const QParam& a, const QParam& b) noexcept { return a.q_ == b.q_; }

 private:
  double q_;
  double one_minus_q_;
  double t_;
  bool limit_;
};

/// Element of R_q. Constructed eagerly range-checked: 1 + (1-q) value > 0.
class DeformedReal {
 public:
  DeformedReal(const QParam& p, double value) : p_(p), value_(value) {
    if (!std::isfinite(value)) throw DomainError("deformed value must be finite");
    if (p.is_limit()) {
      log_coordinate_ = value;
      return;
    }
    const double base = 1.0 + p.one_minus_q() * value;
    if (!(base > 0.0)) {
      std::ostringstream os;
      os.precision(17);
      os << "value " << value << " outside the range of tau_q for q=" << p.q()
         << " (requires 1+(1-q)u > 0)";
      throw DomainError(os.str());
    }
    log_coordinate_ = std::log1p(p.one_minus_q() * value);
  }

  /// Build from the log-coordinate l = t * x directly.
  static DeformedReal from_log_coordinate(const QParam& p, double l) {
    if (p.is_limit()) return DeformedReal(p, l);
    if (!std::isfinite(l)) throw RangeError("log-coordinate is not finite");
    const double value = std::expm1(l) / p.one_minus_q();
    if (!std::isfinite(value)) {
      std::ostringstream os;
      os.precision(17);
      os << "tau_q overflows: exponent " << l << " for q=" << p.q();
      throw RangeError(os.str());
    }
    return DeformedReal(p, value, l);
  }

  double value() const noexcept { return value_; }
  const QParam& qparam() const noexcept { return p_; }
  /// log(1 + (1-q) value); equals value on the q = 1 branch.
  double log_coordinate() const noexcept { return log_coordinate_; }
  /// tau_q^{-1}(value).
  double preimage() const noexcept {
    return p_.is_limit() ? value_ : log_coordinate_ / p_.t();
  }

 private:
  DeformedReal(const QParam& p, double value, double l) : p_(p), value_(value), log_coordinate_(l) {}

  QParam p_;
  double value_;
  double log_coordinate_;
};

namespace detail {

inline void require_same_q(const DeformedReal& a, const DeformedReal& b) {
  if (!(a.qparam() == b.qparam())) throw DomainError("operands carry different q");
}

}  // namespace detail

/// tau_q(x) = ((2-q)^x - 1) / (1-q); identity on the q = 1 branch.
inline DeformedReal tau(const QParam& p, double x) {
  if (!std::isfinite(x)) throw RangeError("tau_q argument is not finite");
  if (p.is_limit()) return DeformedReal(p, x);
  const double l = x * p.t();
  if (std::fabs(l) > 0.5 * DBL_MAX) throw RangeError("tau_q exponent out of range");
  return DeformedReal::from_log_coordinate(p, l);
}

inline double tau_inv(const DeformedReal& u) { return u.preimage(); }

/// Range-checked inverse of a raw value.
inline double tau_inv(const QParam& p, double u) { return DeformedReal(p, u).preimage(); }

/// u (+)_q v = u + v + (1-q) u v.
inline double q_add(const QParam& p, double u, double v) {
  if (p.is_limit()) return u + v;
  return u + v + p.one_minus_q() * u * v;
}

/// The unique w with q_add(w, v) = u: (u - v) / (1 + (1-q) v).
inline double q_sub(const QParam& p, double u, double v) {
  if (p.is_limit()) return u - v;
  const double scaled = p.one_minus_q() * v;
  const double den = 1.0 + scaled;
  if (std::fabs(den) <= 4.0 * DBL_EPSILON * std::fmax(1.0, std::fabs(scaled))) {
    std::ostringstream os;
    os.precision(17);
    os << "q-subtraction pole: v = " << v << " = -1/(1-q) for q=" << p.q();
    throw SingularityError(os.str());
  }
  return (u - v) / den;
}

inline DeformedReal q_add(const DeformedReal& u, const DeformedReal& v) {
  detail::require_same_q(u, v);
  const QParam& p = u.qparam();
  if (p.is_limit()) return DeformedReal(p, u.value() + v.value());
  return DeformedReal::from_log_coordinate(p, u.log_coordinate() + v.log_coordinate());
}

inline DeformedReal q_sub(const DeformedReal& u, const DeformedReal& v) {
  detail::require_same_q(u, v);
  const QParam& p = u.qparam();
  if (p.is_limit()) return DeformedReal(p, u.value() - v.value());
  return DeformedReal::from_log_coordinate(p, u.log_coordinate() - v.log_coordinate());
}

/// Generalized product
///   u <>_q v = ((2-q)^{log[1+(1-q)u] log[1+(1-q)v] / log(2-q)^2} - 1) / (1-q).
inline DeformedReal q_mul(const DeformedReal& u, const DeformedReal& v) {
  detail::require_same_q(u, v);
  const QParam& p = u.qparam();
  if (p.is_limit()) return DeformedReal(p, u.value() * v.value());
  const double t = p.t();
  const double exponent = (u.log_coordinate() / t) * (v.log_coordinate() / t);
  return DeformedReal::from_log_coordinate(p, exponent * t);
}

/// tau_q(tau_q^{-1}(u) / tau_q^{-1}(v)).
inline DeformedReal q_div(const DeformedReal& u, const DeformedReal& v) {
  detail::require_same_q(u, v);
  const QParam& p = u.qparam();
  if (v.value() == 0.0 || v.log_coordinate() == 0.0) {
    throw DivisionError("division by the zero of R_q");
  }
  if (p.is_limit()) return DeformedReal(p, u.value() / v.value());
  return tau(p, u.preimage() / v.preimage());
}

inline double q_mul(const QParam& p, double u, double v) {
  return q_mul(DeformedReal(p, u), DeformedReal(p, v)).value();
}

inline double q_div(const QParam& p, double u, double v) {
  return q_div(DeformedReal(p, u), DeformedReal(p, v)).value();
}

}  // namespace qgeom
