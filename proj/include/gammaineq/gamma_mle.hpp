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

#include "gammaineq/sample.hpp"

namespace gammaineq {

struct MleResult {
  double alpha_hat;
  double rate_hat;  // alpha_hat / sample mean
  int iterations;
  double residual;  // |ln(alpha_hat) - psi(alpha_hat) - s|
};

/// s = ln(mean) - mean(ln x), the sufficient statistic of the shape score
/// equation. Identical to theil_l_hat(sample); s >= 0 with equality iff all
/// observations are equal.
double log_moment_gap(const Sample& sample);

/// Log-moment gaps below this are treated as an all-equal sample.
inline constexpr double kDegenerateGap = 1e-12;
/// Success requires the score residual at or below this.
inline constexpr double kMaxResidual = 1e-10;
inline constexpr int kMaxIterations = 100;

/// Solves ln(alpha) - psi(alpha) = gap for alpha. Throws DegenerateSample
/// for gap < kDegenerateGap and NoConvergence if the residual cannot be
/// brought under kMaxResidual. `rate_hat` is left at 0.
MleResult solve_shape(double gap);

/// Maximum likelihood fit of Gamma(alpha, lambda) to the sample. Requires
/// n >= 2 and a non-degenerate sample.
MleResult fit_shape(const Sample& sample);

}  // namespace gammaineq
