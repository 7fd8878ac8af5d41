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
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gammaineq/sample.hpp"

namespace gammaineq {

/// Theil T estimate: sum x_i ln(x_i / mean) / sum x_i. Zero iff all
/// observations are equal.
double theil_t_hat(const Sample& sample);

/// Theil L estimate (mean log deviation): (1/n) sum ln(mean / x_i).
double theil_l_hat(const Sample& sample);

/// Atkinson estimate 1 - geometric mean / arithmetic mean, with the
/// geometric mean formed as exp(mean log), i.e. 1 - exp(-T_L hat).
double atkinson_hat(const Sample& sample);

// Plug-in bias corrections: subtract the closed-form gamma bias evaluated at
// the fitted shape `alpha_hat` and the sample size.
double corrected_theil_t(const Sample& sample, double alpha_hat);
double corrected_theil_l(const Sample& sample, double alpha_hat);
double corrected_atkinson(const Sample& sample, double alpha_hat);

struct EstimateReport {
  std::size_t n = 0;
  double theil_t_hat = 0.0;
  double theil_l_hat = 0.0;
  double atkinson_hat = 0.0;
  // Present together, only when a correction was requested and succeeded.
  std::optional<double> alpha_hat;
  std::optional<double> theil_t_corrected;
  std::optional<double> theil_l_corrected;
  std::optional<double> atkinson_corrected;
  std::optional<int> mle_iterations;
  std::vector<std::string> diagnostics;
};

/// A correction was requested but no shape MLE exists for the sample
/// (singleton or all-equal). Carries the uncorrected report.
class CorrectionUnavailable : public std::runtime_error {
 public:
  CorrectionUnavailable(const std::string& what, EstimateReport report)
      : std::runtime_error(what), report_(std::move(report)) {}

  const EstimateReport& report() const noexcept { return report_; }

 private:
  EstimateReport report_;
};

/// Fitted shapes above this make the correction numerically negligible; the
/// report notes it in `diagnostics`.
inline constexpr double kLargeShapeThreshold = 1e8;

/// All three estimates and, when `apply_correction`, the shape MLE and the
/// corrected triple. Throws CorrectionUnavailable if correction is requested
/// for n = 1 or an all-equal sample.
EstimateReport estimate_all(const Sample& sample, bool apply_correction);

}  // namespace gammaineq
