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

#include <cstdint>
#include <string_view>

#include "gammaineq/rng.hpp"
#include "gammaineq/sample.hpp"

namespace gammaineq {

/// Gamma(shape, rate) population; density proportional to x^(shape-1) e^(-rate x).
class GammaParams {
 public:
  /// Throws DomainError unless both parameters are positive and finite.
  GammaParams(double shape, double rate = 1.0);

  double shape() const noexcept { return shape_; }
  double rate() const noexcept { return rate_; }

 private:
  double shape_;
  double rate_;
};

enum class IndexKind { TheilT, TheilL, Atkinson };

std::string_view to_string(IndexKind kind) noexcept;

struct PopulationValues {
  double theil_t;
  double theil_l;
  double atkinson;
};

// Population indices. All depend on the shape only.

/// T_T = psi(alpha) + 1/alpha - ln(alpha).
double theil_t_population(const GammaParams& params);
/// T_L = ln(alpha) - psi(alpha) = 1/alpha - T_T.
double theil_l_population(const GammaParams& params);
/// A = 1 - exp(psi(alpha)) / alpha = 1 - exp(-T_L).
double atkinson_population(const GammaParams& params);
PopulationValues population_values(const GammaParams& params);
double population_value(IndexKind kind, const GammaParams& params);

// Exact expectations of the plug-in estimators on an i.i.d. sample of size
// n, 1 <= n <= 2^31. Throw DomainError for n outside that range.

/// E(T_T hat) = psi(alpha) + 1/alpha + ln n - 1/(n alpha) - psi(n alpha).
double expected_theil_t(const GammaParams& params, std::int64_t n);
/// E(T_L hat) = psi(n alpha) - ln n - psi(alpha).
double expected_theil_l(const GammaParams& params, std::int64_t n);
/// E(A hat) = 1 - Gamma^n(alpha + 1/n) / (alpha Gamma^n(alpha)).
double expected_atkinson(const GammaParams& params, std::int64_t n);
double expected_value(IndexKind kind, const GammaParams& params,
                      std::int64_t n);

// Finite-sample biases (expectation minus population value).

/// ln(n alpha) - 1/(n alpha) - psi(n alpha); always negative.
double bias_theil_t(const GammaParams& params, std::int64_t n);
/// psi(n alpha) - ln(n alpha); always negative.
double bias_theil_l(const GammaParams& params, std::int64_t n);
/// (1/alpha) [exp(psi(alpha)) - Gamma^n(alpha + 1/n) / Gamma^n(alpha)]; <= 0.
double bias_atkinson(const GammaParams& params, std::int64_t n);
double bias(IndexKind kind, const GammaParams& params, std::int64_t n);

/// One Gamma(shape, 1) variate. Marsaglia-Tsang for shape >= 1; for
/// shape < 1 boosts to shape + 1 and multiplies by U^(1/shape).
double draw_standard_gamma(double shape, RngStream& stream);

/// `count` i.i.d. Gamma(shape, rate) draws, each a standard gamma variate
/// divided by the rate. Deterministic given the stream state.
Sample sample_gamma(const GammaParams& params, std::size_t count,
                    RngStream& stream);

}  // namespace gammaineq
