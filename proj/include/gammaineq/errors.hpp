// Copyright 2026 The gammaineq Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gammaineq {

/// Argument outside the mathematical domain of an operation (non-positive
/// shape, zero sample size, NaN input, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An observation that cannot enter a log-based estimator. `index` is the
/// zero-based position of the first offending value.
class InvalidObservation : public DomainError {
 public:
  InvalidObservation(std::size_t index, double value, const std::string& what)
      : DomainError(what), index_(index), value_(value) {}

  std::size_t index() const noexcept { return index_; }
  double value() const noexcept { return value_; }

 private:
  std::size_t index_;
  double value_;
};

/// Shape MLE does not exist: all observations equal (log-moment gap is 0).
class DegenerateSample : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NoConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gammaineq
