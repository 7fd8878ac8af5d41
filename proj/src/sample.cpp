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

#include "gammaineq/sample.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gammaineq/errors.hpp"

namespace gammaineq {

Sample::Sample(std::vector<double> observations)
    : observations_(std::move(observations)) {
  if (observations_.empty()) throw DomainError("sample is empty");
  for (std::size_t i = 0; i < observations_.size(); ++i) {
    const double x = observations_[i];
    if (!(x > 0.0) || !std::isfinite(x)) {
      std::ostringstream msg;
      msg << "observation " << i << " is " << x
          << "; every observation must be positive and finite";
      throw InvalidObservation(i, x, msg.str());
    }
  }
  sorted_ = observations_;
  std::sort(sorted_.begin(), sorted_.end());
  double sum = 0.0;
  for (double x : sorted_) sum += x;
  mean_ = sum / static_cast<double>(sorted_.size());
}

}  // namespace gammaineq
