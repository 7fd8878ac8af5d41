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
#include <span>
#include <vector>

namespace gammaineq {

/// Nonempty collection of strictly positive, finite observations.
///
/// Construction validates every value and throws InvalidObservation naming
/// the first offender. An ascending copy is kept so that every sum over the
/// sample is accumulated in the same order regardless of input order.
class Sample {
 public:
  explicit Sample(std::vector<double> observations);

  std::size_t size() const noexcept { return observations_.size(); }

  /// Observations in input order.
  std::span<const double> observations() const noexcept {
    return observations_;
  }
  /// Observations sorted ascending.
  std::span<const double> sorted() const noexcept { return sorted_; }

  /// Arithmetic mean, summed over the ascending copy.
  double mean() const noexcept { return mean_; }

 private:
  std::vector<double> observations_;
  std::vector<double> sorted_;
  double mean_ = 0.0;
};

}  // namespace gammaineq
