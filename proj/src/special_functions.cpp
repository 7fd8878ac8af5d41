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

#include "gammaineq/special_functions.hpp"

#include <array>
#include <cmath>
#include <cstddef>
#include <sstream>

#include "gammaineq/errors.hpp"

namespace gammaineq {
namespace {

// Below this the argument is shifted upward with the recurrences before the
// asymptotic series are applied. At y = 10 the first omitted term of every
// series below is under 1e-17.
constexpr double kAsymptoticMin = 10.0;

void require_positive(double x, const char* fn) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    std::ostringstream msg;
    msg << fn << ": argument must be positive and finite, got " << x;
    throw DomainError(msg.str());
  }
}

int shift_count(double x) {
  return x >= kAsymptoticMin ? 0
                             : static_cast<int>(std::ceil(kAsymptoticMin - x));
}

// Tail of the Stirling series: sum B_2k / (2k (2k-1) y^(2k-1)), k = 1..7.
double stirling_tail(double y) {
  const double r = 1.0 / y;
  const double r2 = r * r;
  return r * (1.0 / 12.0 +
              r2 * (-1.0 / 360.0 +
                    r2 * (1.0 / 1260.0 +
                          r2 * (-1.0 / 1680.0 +
                                r2 * (1.0 / 1188.0 +
                                      r2 * (-691.0 / 360360.0 +
                                            r2 * (1.0 / 156.0)))))));
}

// stirling_tail(y + h) - stirling_tail(y), termwise through expm1 so the
// result keeps full relative precision when h << y.
double stirling_tail_diff(double y, double h) {
  constexpr std::array<double, 7> coef = {
      1.0 / 12.0,   -1.0 / 360.0,       1.0 / 1260.0, -1.0 / 1680.0,
      1.0 / 1188.0, -691.0 / 360360.0,  1.0 / 156.0};
  const double log_ratio = std::log1p(h / y);
  const double r2 = 1.0 / (y * y);
  double power = 1.0 / y;
  double diff = 0.0;
  for (std::size_t k = 0; k < coef.size(); ++k) {
    const double order = static_cast<double>(2 * k + 1);
    diff += coef[k] * power * std::expm1(-order * log_ratio);
    power *= r2;
  }
  return diff;
}

double stirling(double y) {
  constexpr double half_log_two_pi = 0.91893853320467274178;
  return (y - 0.5) * std::log(y) - y + half_log_two_pi + stirling_tail(y);
}

// ln(y) - psi(y) for y >= kAsymptoticMin:
// 1/(2y) + sum B_2k / (2k y^2k), k = 1..7.
double log_minus_digamma_series(double y) {
  const double r = 1.0 / y;
  const double r2 = r * r;
  return 0.5 * r +
         r2 * (1.0 / 12.0 +
               r2 * (-1.0 / 120.0 +
                     r2 * (1.0 / 252.0 +
                           r2 * (-1.0 / 240.0 +
                                 r2 * (1.0 / 132.0 +
                                       r2 * (-691.0 / 32760.0 +
                                             r2 * (1.0 / 12.0)))))));
}

// psi'(y) for y >= kAsymptoticMin:
// 1/y + 1/(2y^2) + sum B_2k / y^(2k+1), k = 1..7.
double trigamma_series(double y) {
  const double r = 1.0 / y;
  const double r2 = r * r;
  return r + 0.5 * r2 +
         r * r2 *
             (1.0 / 6.0 +
              r2 * (-1.0 / 30.0 +
                    r2 * (1.0 / 42.0 +
                          r2 * (-1.0 / 30.0 +
                                r2 * (5.0 / 66.0 +
                                      r2 * (-691.0 / 2730.0 +
                                            r2 * (7.0 / 6.0)))))));
}

}  // namespace

double ln_gamma(double x) {
  require_positive(x, "ln_gamma");
  const int k = shift_count(x);
  if (k == 0) return stirling(x);
  double prod = 1.0;
  for (int j = 0; j < k; ++j) prod *= x + j;
  return stirling(x + k) - std::log(prod);
}

double ln_gamma_diff(double x, double h) {
  require_positive(x, "ln_gamma_diff");
  if (!(h >= 0.0) || !std::isfinite(h)) {
    std::ostringstream msg;
    msg << "ln_gamma_diff: increment must be nonnegative and finite, got " << h;
    throw DomainError(msg.str());
  }
  if (h == 0.0) return 0.0;
  const int k = shift_count(x);
  const double y = x + k;
  // Difference of the Stirling forms at y and y + h, regrouped so the only
  // log of a near-one ratio goes through log1p.
  const double log_ratio = std::log1p(h / y);
  double diff = h * std::log(y) + (y + h - 0.5) * log_ratio - h +
                stirling_tail_diff(y, h);
  for (int j = k - 1; j >= 0; --j) diff -= std::log1p(h / (x + j));
  return diff;
}

double digamma(double x) {
  require_positive(x, "digamma");
  const int k = shift_count(x);
  double shift_sum = 0.0;
  for (int j = k - 1; j >= 0; --j) shift_sum += 1.0 / (x + j);
  const double y = x + k;
  return (std::log(y) - log_minus_digamma_series(y)) - shift_sum;
}

double trigamma(double x) {
  require_positive(x, "trigamma");
  const int k = shift_count(x);
  double shift_sum = 0.0;
  for (int j = k - 1; j >= 0; --j) shift_sum += 1.0 / ((x + j) * (x + j));
  return trigamma_series(x + k) + shift_sum;
}

double log_minus_digamma(double x) {
  require_positive(x, "log_minus_digamma");
  if (x >= kAsymptoticMin) return log_minus_digamma_series(x);
  return std::log(x) - digamma(x);
}

double log_gamma_ratio_scaled(double alpha, long long n) {
  require_positive(alpha, "log_gamma_ratio_scaled");
  if (n < 1) {
    throw DomainError("log_gamma_ratio_scaled: n must be >= 1, got " +
                      std::to_string(n));
  }
  // Gamma(alpha + 1) / Gamma(alpha) = alpha exactly.
  if (n == 1) return std::log(alpha);
  const double nd = static_cast<double>(n);
  return nd * ln_gamma_diff(alpha, 1.0 / nd);
}

}  // namespace gammaineq
