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

#include <stdexcept>
#include <string>

namespace qgeom {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A result would leave the representable double range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// q-subtraction hit its pole v = -1/(1-q).
class SingularityError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Division by the additive identity of R_q.
class DivisionError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Mismatched dimensions between points, vectors, or group elements.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// The requested computation needs something the input does not provide
/// (e.g. a warp without second-derivative evaluator).
class CapabilityError : public Error {
 public:
  using Error::Error;
};

/// k >= 0 model spaces are not supported.
class UnsupportedRegimeError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Malformed input file or flag.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Well-formed input that violates a data invariant (e.g. probabilities not summing to one).
class ValidationError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An iterative or finite-difference computation did not reach its tolerance.
/// Carries the best estimate obtained and the residual it was left with.
class NumericalError : public Error {
 public:
  NumericalError(const std::string& what, double best_estimate, double residual)
      : Error(what), best_estimate_(best_estimate), residual_(residual) {}

  double best_estimate() const noexcept { return best_estimate_; }
  double residual() const noexcept { return residual_; }

 private:
  double best_estimate_;
  double residual_;
};

}  // namespace qgeom
