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

#include "gammaineq/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <sstream>
#include <thread>

#include "gammaineq/errors.hpp"
#include "gammaineq/estimators.hpp"

namespace gammaineq {
namespace {

using Replicate = ReplicateValues;

struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;

  void add(double x) {
    const double y = x - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

Replicate run_replication(const GammaParams& params, std::int64_t n,
                          RngStream stream) {
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  const Sample sample =
      sample_gamma(params, static_cast<std::size_t>(n), stream);
  try {
    const EstimateReport r = estimate_all(sample, true);
    return {r.theil_t_hat, *r.theil_t_corrected, r.theil_l_hat,
            *r.theil_l_corrected, r.atkinson_hat, *r.atkinson_corrected};
  } catch (const CorrectionUnavailable& e) {
    const EstimateReport& r = e.report();
    return {r.theil_t_hat, nan, r.theil_l_hat, nan, r.atkinson_hat, nan};
  }
}

unsigned resolve_threads(unsigned requested, std::int64_t work) {
  unsigned threads = requested != 0 ? requested
                                    : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(
      std::min<std::int64_t>(threads, std::max<std::int64_t>(work, 1)));
}

void validate_cell(double alpha, std::int64_t n, std::int64_t n_sim,
                   double rate) {
  const GammaParams params(alpha, rate);
  if (n < 2) {
    throw DomainError("sample size n must be >= 2 for the corrected "
                      "estimators, got " + std::to_string(n));
  }
  if (n > (std::int64_t{1} << 31)) {
    throw DomainError("sample size n must be <= 2^31, got " +
                      std::to_string(n));
  }
  if (n_sim < 1) {
    throw DomainError("n_sim must be >= 1, got " + std::to_string(n_sim));
  }
  const PopulationValues truth = population_values(params);
  const double smallest =
      std::min({truth.theil_t, truth.theil_l, truth.atkinson});
  if (!(smallest >= kMinTrueValue)) {
    std::ostringstream msg;
    msg << "alpha = " << alpha << " gives population index " << smallest
        << " below " << kMinTrueValue
        << "; relative bias is meaningless there";
    throw DomainError(msg.str());
  }
}

}  // namespace

std::string_view to_string(Estimator estimator) noexcept {
  switch (estimator) {
    case Estimator::TheilT:
      return "theil_t";
    case Estimator::TheilTCorrected:
      return "theil_t_corr";
    case Estimator::TheilL:
      return "theil_l";
    case Estimator::TheilLCorrected:
      return "theil_l_corr";
    case Estimator::Atkinson:
      return "atkinson";
    case Estimator::AtkinsonCorrected:
      return "atkinson_corr";
  }
  return "unknown";
}

std::optional<Estimator> parse_estimator(std::string_view name) noexcept {
  for (Estimator e : kAllEstimators) {
    if (to_string(e) == name) return e;
  }
  return std::nullopt;
}

IndexKind target_index(Estimator estimator) noexcept {
  switch (estimator) {
    case Estimator::TheilT:
    case Estimator::TheilTCorrected:
      return IndexKind::TheilT;
    case Estimator::TheilL:
    case Estimator::TheilLCorrected:
      return IndexKind::TheilL;
    case Estimator::Atkinson:
    case Estimator::AtkinsonCorrected:
      return IndexKind::Atkinson;
  }
  return IndexKind::TheilT;
}

bool is_corrected(Estimator estimator) noexcept {
  return estimator == Estimator::TheilTCorrected ||
         estimator == Estimator::TheilLCorrected ||
         estimator == Estimator::AtkinsonCorrected;
}

double standard_error(const SimSummary& summary) {
  if (summary.n_effective < 2) return std::numeric_limits<double>::infinity();
  const double bias = summary.mean_estimate - summary.true_value;
  const double spread = std::max(0.0, summary.mse - bias * bias);
  return std::sqrt(spread / static_cast<double>(summary.n_effective - 1));
}

void validate(const SimConfig& config) {
  if (config.alphas.empty()) throw DomainError("alphas must be nonempty");
  if (config.ns.empty()) throw DomainError("ns must be nonempty");
  for (double alpha : config.alphas) {
    const double rate = config.rate_tracks_shape ? alpha : config.rate;
    for (std::int64_t n : config.ns) validate_cell(alpha, n, config.n_sim, rate);
  }
}

RngStream derive_stream(std::uint64_t master_seed, std::size_t alpha_index,
                        std::size_t n_index, std::uint64_t replication) {
  std::uint64_t key = mix64(master_seed);
  key = mix64(key ^ static_cast<std::uint64_t>(alpha_index));
  key = mix64(key ^ static_cast<std::uint64_t>(n_index));
  key = mix64(key ^ replication);
  return RngStream(key);
}

std::vector<SimSummary> summarize_cell(double alpha, std::int64_t n,
                                       std::span<const ReplicateValues> reps) {
  const PopulationValues truth = population_values(GammaParams(alpha));
  const auto n_sim = static_cast<std::int64_t>(reps.size());
  std::vector<SimSummary> summaries;
  summaries.reserve(kAllEstimators.size());
  for (std::size_t j = 0; j < kAllEstimators.size(); ++j) {
    const Estimator estimator = kAllEstimators[j];
    double true_value = truth.theil_t;
    if (target_index(estimator) == IndexKind::TheilL) true_value = truth.theil_l;
    if (target_index(estimator) == IndexKind::Atkinson) true_value = truth.atkinson;

    KahanSum sum;
    KahanSum squared_error;
    std::int64_t effective = 0;
    for (const Replicate& rep : reps) {
      const double value = rep[j];
      if (std::isnan(value)) continue;
      sum.add(value);
      squared_error.add((value - true_value) * (value - true_value));
      ++effective;
    }

    SimSummary s;
    s.alpha = alpha;
    s.n = n;
    s.estimator = estimator;
    s.true_value = true_value;
    s.n_effective = effective;
    s.n_failed = n_sim - effective;
    if (effective > 0) {
      s.mean_estimate = sum.sum / static_cast<double>(effective);
      s.mse = squared_error.sum / static_cast<double>(effective);
    } else {
      s.mean_estimate = std::numeric_limits<double>::quiet_NaN();
      s.mse = std::numeric_limits<double>::quiet_NaN();
    }
    s.rel_bias = (s.mean_estimate - true_value) / true_value;
    summaries.push_back(s);
  }
  return summaries;
}

std::vector<SimSummary> run_cell(double alpha, std::int64_t n,
                                 std::int64_t n_sim, double rate,
                                 std::uint64_t master_seed,
                                 const CellOptions& options) {
  validate_cell(alpha, n, n_sim, rate);
  const GammaParams params(alpha, rate);

  std::vector<Replicate> results(static_cast<std::size_t>(n_sim));
  const unsigned threads = resolve_threads(options.threads, n_sim);
  auto work = [&](std::int64_t begin, std::int64_t end) {
    for (std::int64_t k = begin; k < end; ++k) {
      results[static_cast<std::size_t>(k)] = run_replication(
          params, n,
          derive_stream(master_seed, options.alpha_index, options.n_index,
                        static_cast<std::uint64_t>(k)));
    }
  };
  if (threads <= 1) {
    work(0, n_sim);
  } else {
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    const std::int64_t chunk = (n_sim + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::int64_t begin = std::min<std::int64_t>(t * chunk, n_sim);
      const std::int64_t end = std::min<std::int64_t>(begin + chunk, n_sim);
      pool.emplace_back([&, t, begin, end] {
        try {
          work(begin, end);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  return summarize_cell(alpha, n, results);
}

std::vector<SimSummary> run_grid(const SimConfig& config) {
  validate(config);
  std::vector<SimSummary> rows;
  rows.reserve(config.alphas.size() * config.ns.size() * kAllEstimators.size());

  // Rows come out in ascending value order; streams stay keyed to each
  // value's position in the configured list.
  std::vector<std::size_t> alpha_order(config.alphas.size());
  std::vector<std::size_t> n_order(config.ns.size());
  for (std::size_t i = 0; i < alpha_order.size(); ++i) alpha_order[i] = i;
  for (std::size_t i = 0; i < n_order.size(); ++i) n_order[i] = i;
  std::stable_sort(alpha_order.begin(), alpha_order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return config.alphas[a] < config.alphas[b];
                   });
  std::stable_sort(n_order.begin(), n_order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return config.ns[a] < config.ns[b];
                   });

  for (std::size_t ai : alpha_order) {
    const double alpha = config.alphas[ai];
    const double rate = config.rate_tracks_shape ? alpha : config.rate;
    for (std::size_t ni : n_order) {
      auto cell = run_cell(alpha, config.ns[ni], config.n_sim, rate,
                           config.master_seed, {ai, ni, config.threads});
      rows.insert(rows.end(), cell.begin(), cell.end());
    }
  }
  return rows;
}

}  // namespace gammaineq
