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

// Gamma-family special functions on the positive real axis.
//
// Every function rejects x <= 0, NaN and infinity with DomainError; no
// reflection formulas are applied.

namespace gammaineq {

/// ln Gamma(x) for x > 0.
double ln_gamma(double x);

/// ln Gamma(x + h) - ln Gamma(x) for x > 0, h >= 0, without cancellation
/// when h is small relative to x.
double ln_gamma_diff(double x, double h);

/// Digamma psi(x) = d/dx ln Gamma(x).
double digamma(double x);

/// Trigamma psi'(x).
double trigamma(double x);

/// ln(x) - psi(x), accurate for large x where the direct difference loses
/// all significant digits. Strictly positive and decreasing on (0, inf).
double log_minus_digamma(double x);

/// n * (ln Gamma(alpha + 1/n) - ln Gamma(alpha)), the logarithm of
/// Gamma^n(alpha + 1/n) / Gamma^n(alpha). Never forms Gamma^n.
double log_gamma_ratio_scaled(double alpha, long long n);

}  // namespace gammaineq
