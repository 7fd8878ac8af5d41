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

#include "gammaineq/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gammaineq/errors.hpp"
#include "gammaineq/gamma_mle.hpp"
#include "gammaineq/gamma_model.hpp"

namespace gammaineq {

// Both Theil estimators are accumulated on the mean-normalized observations
// w = x / mean, so an all-equal sample gives w = 1 and an exact zero, and
// rescaling the data cannot change the result beyond rounding of w. Rounding
// can still push a near-equal sample a few ulps below zero; those are
// clamped since both estimators are nonnegative.

double theil_t_hat(const Sample& sample) {
  const double mean = sample.mean();
  double acc = 0.0;
  for (double x : sample.sorted()) {
    const double w = x / mean;
    acc += w * std::log(w);
  }
  return std::max(0.0, acc / static_cast<double>(sample.size()));
}

double theil_l_hat(const Sample& sample) {
  const double mean = sample.mean();
  double acc = 0.0;
  for (double x : sample.sorted()) acc += std::log(x / mean);
  return std::max(0.0, -acc / static_cast<double>(sample.size()));
}

double atkinson_hat(const Sample& sample) {
  return -std::expm1(-theil_l_hat(sample));
}

double corrected_theil_t(const Sample& sample, double alpha_hat) {
  const GammaParams fitted(alpha_hat);
  return theil_t_hat(sample) -
         bias_theil_t(fitted, static_cast<std::int64_t>(sample.size()));
}

double corrected_theil_l(const Sample& sample, double alpha_hat) {
  const GammaParams fitted(alpha_hat);
  return theil_l_hat(sample) -
         bias_theil_l(fitted, static_cast<std::int64_t>(sample.size()));
}

double corrected_atkinson(const Sample& sample, double alpha_hat) {
  const GammaParams fitted(alpha_hat);
  return atkinson_hat(sample) -
         bias_atkinson(fitted, static_cast<std::int64_t>(sample.size()));
}

EstimateReport estimate_all(const Sample& sample, bool apply_correction) {
  EstimateReport report;
  report.n = sample.size();
  report.theil_t_hat = theil_t_hat(sample);
  report.theil_l_hat = theil_l_hat(sample);
  report.atkinson_hat = -std::expm1(-report.theil_l_hat);
  if (!apply_correction) return report;

  if (sample.size() < 2) {
    throw CorrectionUnavailable(
        "correction unavailable: the shape MLE needs at least 2 observations",
        std::move(report));
  }
  MleResult mle{};
  try {
    mle = fit_shape(sample);
  } catch (const DegenerateSample& e) {
    throw CorrectionUnavailable(
        std::string("correction unavailable: ") + e.what(), std::move(report));
  } catch (const NoConvergence& e) {
    throw CorrectionUnavailable(
        std::string("correction unavailable: ") + e.what(), std::move(report));
  }

  const GammaParams fitted(mle.alpha_hat);
  const auto n = static_cast<std::int64_t>(sample.size());
  report.alpha_hat = mle.alpha_hat;
  report.mle_iterations = mle.iterations;
  report.theil_t_corrected = report.theil_t_hat - bias_theil_t(fitted, n);
  report.theil_l_corrected = report.theil_l_hat - bias_theil_l(fitted, n);
  report.atkinson_corrected = report.atkinson_hat - bias_atkinson(fitted, n);
  if (mle.alpha_hat > kLargeShapeThreshold) {
    std::ostringstream note;
    note << "alpha_hat = " << mle.alpha_hat
         << " exceeds 1e8: sample is near-degenerate and the corrections are "
            "negligible";
    report.diagnostics.push_back(note.str());
  }
  return report;
}

}  // namespace gammaineq
