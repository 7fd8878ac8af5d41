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

#include "gammaineq/gamma_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "gammaineq/errors.hpp"
#include "gammaineq/special_functions.hpp"

namespace gammaineq {
namespace {

constexpr std::int64_t kMaxSampleSize = std::int64_t{1} << 31;

double checked_size(std::int64_t n) {
  if (n < 1 || n > kMaxSampleSize) {
    throw DomainError("sample size n must lie in [1, 2^31], got " +
                      std::to_string(n));
  }
  return static_cast<double>(n);
}

}  // namespace

GammaParams::GammaParams(double shape, double rate) : shape_(shape), rate_(rate) {
  if (!(shape > 0.0) || !std::isfinite(shape)) {
    std::ostringstream msg;
    msg << "gamma shape alpha must be positive and finite, got " << shape;
    throw DomainError(msg.str());
  }
  if (!(rate > 0.0) || !std::isfinite(rate)) {
    std::ostringstream msg;
    msg << "gamma rate lambda must be positive and finite, got " << rate;
    throw DomainError(msg.str());
  }
}

std::string_view to_string(IndexKind kind) noexcept {
  switch (kind) {
    case IndexKind::TheilT:
      return "theil_t";
    case IndexKind::TheilL:
      return "theil_l";
    case IndexKind::Atkinson:
      return "atkinson";
  }
  return "unknown";
}

double theil_t_population(const GammaParams& params) {
  const double alpha = params.shape();
  return 1.0 / alpha - log_minus_digamma(alpha);
}

double theil_l_population(const GammaParams& params) {
  return log_minus_digamma(params.shape());
}

double atkinson_population(const GammaParams& params) {
  return -std::expm1(-theil_l_population(params));
}

PopulationValues population_values(const GammaParams& params) {
  return {theil_t_population(params), theil_l_population(params),
          atkinson_population(params)};
}

double population_value(IndexKind kind, const GammaParams& params) {
  switch (kind) {
    case IndexKind::TheilT:
      return theil_t_population(params);
    case IndexKind::TheilL:
      return theil_l_population(params);
    case IndexKind::Atkinson:
      return atkinson_population(params);
  }
  throw DomainError("unknown index kind");
}

double expected_theil_t(const GammaParams& params, std::int64_t n) {
  const double nd = checked_size(n);
  const double alpha = params.shape();
  const double total_shape = nd * alpha;
  // Grouped so that every bracket vanishes exactly at n = 1.
  return (digamma(alpha) - digamma(total_shape)) +
         (1.0 / alpha - 1.0 / total_shape) + std::log(nd);
}

double expected_theil_l(const GammaParams& params, std::int64_t n) {
  const double nd = checked_size(n);
  const double alpha = params.shape();
  return (digamma(nd * alpha) - digamma(alpha)) - std::log(nd);
}

double expected_atkinson(const GammaParams& params, std::int64_t n) {
  checked_size(n);
  const double alpha = params.shape();
  return 0.0 - std::expm1(log_gamma_ratio_scaled(alpha, n) - std::log(alpha));
}

double expected_value(IndexKind kind, const GammaParams& params,
                      std::int64_t n) {
  switch (kind) {
    case IndexKind::TheilT:
      return expected_theil_t(params, n);
    case IndexKind::TheilL:
      return expected_theil_l(params, n);
    case IndexKind::Atkinson:
      return expected_atkinson(params, n);
  }
  throw DomainError("unknown index kind");
}

double bias_theil_t(const GammaParams& params, std::int64_t n) {
  const double total_shape = checked_size(n) * params.shape();
  return log_minus_digamma(total_shape) - 1.0 / total_shape;
}

double bias_theil_l(const GammaParams& params, std::int64_t n) {
  const double total_shape = checked_size(n) * params.shape();
  return -log_minus_digamma(total_shape);
}

double bias_atkinson(const GammaParams& params, std::int64_t n) {
  checked_size(n);
  const double alpha = params.shape();
  const double psi = digamma(alpha);
  // exp(psi)/alpha * (1 - exp(log_ratio - psi)), with log_ratio >= psi.
  const double geometric_ratio = std::exp(-log_minus_digamma(alpha));
  return -geometric_ratio * std::expm1(log_gamma_ratio_scaled(alpha, n) - psi);
}

double bias(IndexKind kind, const GammaParams& params, std::int64_t n) {
  switch (kind) {
    case IndexKind::TheilT:
      return bias_theil_t(params, n);
    case IndexKind::TheilL:
      return bias_theil_l(params, n);
    case IndexKind::Atkinson:
      return bias_atkinson(params, n);
  }
  throw DomainError("unknown index kind");
}

double draw_standard_gamma(double shape, RngStream& stream) {
  if (shape < 1.0) {
    // X = Y * U^(1/shape) with Y ~ Gamma(shape + 1); done in log space so
    // tiny shapes do not underflow U^(1/shape) before the product.
    const double y = draw_standard_gamma(shape + 1.0, stream);
    const double log_u = std::log(stream.uniform_open());
    const double x = std::exp(std::log(y) + log_u / shape);
    return std::max(x, std::numeric_limits<double>::denorm_min());
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double z, v;
    do {
      z = stream.normal();
      v = 1.0 + c * z;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = stream.uniform_open();
    const double z2 = z * z;
    if (u < 1.0 - 0.0331 * z2 * z2) return d * v;
    if (std::log(u) < 0.5 * z2 + d * (1.0 - v + std::log(v))) return d * v;
  }
}

Sample sample_gamma(const GammaParams& params, std::size_t count,
                    RngStream& stream) {
  if (count == 0) throw DomainError("sample_gamma: count must be >= 1");
  std::vector<double> draws(count);
  for (auto& x : draws) {
    x = draw_standard_gamma(params.shape(), stream) / params.rate();
  }
  return Sample(std::move(draws));
}

}  // namespace gammaineq
