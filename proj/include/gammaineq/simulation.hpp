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

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "gammaineq/gamma_model.hpp"
#include "gammaineq/rng.hpp"

namespace gammaineq {

/// The six estimators tracked by the Monte Carlo study, in output order.
enum class Estimator {
  TheilT,
  TheilTCorrected,
  TheilL,
  TheilLCorrected,
  Atkinson,
  AtkinsonCorrected,
};

inline constexpr std::array<Estimator, 6> kAllEstimators = {
    Estimator::TheilT,   Estimator::TheilTCorrected,
    Estimator::TheilL,   Estimator::TheilLCorrected,
    Estimator::Atkinson, Estimator::AtkinsonCorrected,
};

/// theil_t, theil_t_corr, theil_l, theil_l_corr, atkinson, atkinson_corr.
std::string_view to_string(Estimator estimator) noexcept;
std::optional<Estimator> parse_estimator(std::string_view name) noexcept;
IndexKind target_index(Estimator estimator) noexcept;
bool is_corrected(Estimator estimator) noexcept;

struct SimConfig {
  std::vector<double> alphas{0.1, 0.5, 1.5, 2.0};
  std::vector<std::int64_t> ns{10, 20, 50, 100, 200};
  std::int64_t n_sim = 1000;
  double rate = 1.0;
  /// Sample each cell from Gamma(alpha, alpha) instead of Gamma(alpha, rate).
  bool rate_tracks_shape = false;
  std::uint64_t master_seed = 0;
  /// Worker threads per cell; 0 picks the hardware concurrency. Results do
  /// not depend on this value.
  unsigned threads = 0;
};

struct SimSummary {
  double alpha = 0.0;
  std::int64_t n = 0;
  Estimator estimator = Estimator::TheilT;
  double true_value = 0.0;
  double mean_estimate = 0.0;
  double rel_bias = 0.0;  // (mean_estimate - true_value) / true_value
  double mse = 0.0;
  std::int64_t n_effective = 0;
  std::int64_t n_failed = 0;
};

/// Monte Carlo standard error of `mean_estimate`, recovered from the stored
/// mean and MSE (MSE = variance + bias^2).
double standard_error(const SimSummary& summary);

/// Smallest population index value the harness accepts as a relative-bias
/// denominator; shapes whose indices fall below it are rejected.
inline constexpr double kMinTrueValue = 1e-6;

/// Throws DomainError describing the first invalid field.
void validate(const SimConfig& config);

/// Independent stream for one replication of one grid cell: the four inputs
/// are folded through the splitmix64 mixer into the seed of a fresh stream.
RngStream derive_stream(std::uint64_t master_seed, std::size_t alpha_index,
                        std::size_t n_index, std::uint64_t replication);

struct CellOptions {
  std::size_t alpha_index = 0;
  std::size_t n_index = 0;
  unsigned threads = 0;
};

/// Runs `n_sim` replications at one (alpha, n) and returns six summaries in
/// kAllEstimators order. Replications whose shape fit fails count toward
/// `n_failed` of the corrected estimators only.
std::vector<SimSummary> run_cell(double alpha, std::int64_t n,
                                 std::int64_t n_sim, double rate,
                                 std::uint64_t master_seed,
                                 const CellOptions& options = {});

/// Per-replication values in kAllEstimators order; NaN marks a corrected
/// estimator whose shape fit failed.
using ReplicateValues = std::array<double, kAllEstimators.size()>;

/// Reduces replications in index order with compensated summation into six
/// summaries against the population values of Gamma(alpha, .).
std::vector<SimSummary> summarize_cell(double alpha, std::int64_t n,
                                       std::span<const ReplicateValues> reps);

/// run_cell over the whole grid, alpha-major then n, six rows per cell.
std::vector<SimSummary> run_grid(const SimConfig& config);

}  // namespace gammaineq
