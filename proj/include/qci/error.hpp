// Copyright 2026 The qci Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QCI_ERROR_HPP
#define QCI_ERROR_HPP

#include <stdexcept>
#include <string>

namespace qci {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not fit together (matrix sizes, factor lists, arity).
class DimensionError : public Error {
 public:
  using Error::Error;
};

enum class ValidationKind {
  non_finite,
  hermiticity,
  positivity,
  trace,
  normalization,
  isometry,
  completeness,
  weights,
  orthogonality,
  range,
  inequality,
};

const char* to_string(ValidationKind kind);

/// A numerical invariant was violated. `value()` carries the violated
/// quantity (max asymmetry, most negative eigenvalue, trace, ...).
class ValidationError : public Error {
 public:
  ValidationError(ValidationKind kind, double value, const std::string& what)
      : Error(what), kind_(kind), value_(value) {}

  ValidationKind kind() const noexcept { return kind_; }
  double value() const noexcept { return value_; }

 private:
  ValidationKind kind_;
  double value_;
};

/// Requested construction exists only for a narrower class of inputs.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// The entropy gap exceeds the saturation tolerance.
class NotSaturatingError : public Error {
 public:
  NotSaturatingError(double gap, const std::string& what)
      : Error(what), gap_(gap) {}
  double gap() const noexcept { return gap_; }

 private:
  double gap_;
};

/// The gap is small but the product/pure factorization could not be
/// reconstructed to the required accuracy.
class StructureNotFoundError : public Error {
 public:
  StructureNotFoundError(double residual, const std::string& what)
      : Error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

}  // namespace qci

#endif  // QCI_ERROR_HPP
