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

#include "gammaineq/gamma_mle.hpp"

#include <cmath>
#include <sstream>

#include "gammaineq/errors.hpp"
#include "gammaineq/estimators.hpp"
#include "gammaineq/special_functions.hpp"

namespace gammaineq {
namespace {

constexpr double kStepTolerance = 1e-12;
constexpr int kStallLimit = 3;

// Score residual as a function of u = ln(alpha); strictly decreasing.
double score(double log_shape, double gap) {
  return log_minus_digamma(std::exp(log_shape)) - gap;
}

// Bisection on u, used when Newton stalls or leaves the domain.
double bisect(double log_shape, double gap, int& iterations) {
  double lo = log_shape - 1.0;
  double hi = log_shape + 1.0;
  while (score(lo, gap) < 0.0) lo -= (hi - lo);
  while (score(hi, gap) > 0.0) hi += (hi - lo);
  while (hi - lo > kStepTolerance && iterations < kMaxIterations) {
    const double mid = 0.5 * (lo + hi);
    if (score(mid, gap) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
    ++iterations;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double log_moment_gap(const Sample& sample) { return theil_l_hat(sample); }

MleResult solve_shape(double gap) {
  if (!std::isfinite(gap) || gap < 0.0) {
    std::ostringstream msg;
    msg << "log-moment gap must be finite and nonnegative, got " << gap;
    throw DomainError(msg.str());
  }
  if (gap < kDegenerateGap) {
    throw DegenerateSample(
        "degenerate sample: all observations equal, the shape MLE diverges");
  }

  // Closed-form starting point, within a few percent of the root.
  const double start =
      (3.0 - gap + std::sqrt((gap - 3.0) * (gap - 3.0) + 24.0 * gap)) /
      (12.0 * gap);

  double u = std::log(start);
  double f = score(u, gap);
  int iterations = 0;
  int stalled = 0;
  bool converged = (f == 0.0);
  while (!converged && iterations < kMaxIterations) {
    const double shape = std::exp(u);
    const double slope = 1.0 - shape * trigamma(shape);  // d score / du < 0
    const double step = f / slope;
    const double u_next = u - step;
    ++iterations;
    if (!std::isfinite(u_next) || !std::isfinite(std::exp(u_next))) {
      u = bisect(u, gap, iterations);
      break;
    }
    const double f_next = score(u_next, gap);
    stalled = std::fabs(f_next) >= std::fabs(f) ? stalled + 1 : 0;
    u = u_next;
    f = f_next;
    converged = (f == 0.0) || std::fabs(step) <= kStepTolerance;
    if (!converged && stalled >= kStallLimit) {
      u = bisect(u, gap, iterations);
      break;
    }
  }

  const double alpha_hat = std::exp(u);
  const double residual = std::fabs(score(u, gap));
  if (!(residual <= kMaxResidual)) {
    std::ostringstream msg;
    msg << "shape MLE did not converge: residual " << residual << " after "
        << iterations << " iterations (gap " << gap << ")";
    throw NoConvergence(msg.str());
  }
  return {alpha_hat, 0.0, iterations, residual};
}

MleResult fit_shape(const Sample& sample) {
  if (sample.size() < 2) {
    throw DegenerateSample(
        "degenerate sample: the shape MLE needs at least 2 observations");
  }
  MleResult result = solve_shape(log_moment_gap(sample));
  result.rate_hat = result.alpha_hat / sample.mean();
  return result;
}

}  // namespace gammaineq
