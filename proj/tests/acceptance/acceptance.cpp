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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Tolerances and runtime budgets are fixed below.

#include <sys/wait.h>

#include <boost/math/special_functions/digamma.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gammaineq/estimators.hpp"
#include "gammaineq/gamma_mle.hpp"
#include "gammaineq/gamma_model.hpp"
#include "gammaineq/results_csv.hpp"
#include "gammaineq/simulation.hpp"
#include "gammaineq/special_functions.hpp"

namespace {

using namespace gammaineq;
namespace fs = std::filesystem;

constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
constexpr double kPi = std::numbers::pi;
constexpr double kLn2 = std::numbers::ln2;
constexpr std::uint64_t kStudySeed = 42;

const std::vector<double> kIdentityShapes = {0.1, 0.5, 1.0, 1.5, 2.0, 10.0, 100.0};
const std::vector<std::int64_t> kIdentitySizes = {1, 2, 10, 200};

// Collects failure messages for one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 8) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  void near(double actual, double expected, double tol, const std::string& what) {
    std::ostringstream msg;
    msg.precision(17);
    msg << what << ": got " << actual << ", expected " << expected << " +/- " << tol;
    expect(std::fabs(actual - expected) <= tol, msg.str());
  }
  int failed() const { return failed_; }
  int checks() const { return checks_; }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  int checks_ = 0;
  int failed_ = 0;
  std::vector<std::string> failures_;
};

struct Outcome {
  bool pass;
  double seconds;
};

Outcome run_criterion(int id, const std::string& title, double budget_seconds,
                      const std::function<void(Check&)>& body) {
  Check check;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(check);
  } catch (const std::exception& e) {
    check.expect(false, std::string("exception: ") + e.what());
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream budget;
  budget << "runtime " << seconds << " s exceeds budget " << budget_seconds << " s";
  check.expect(seconds < budget_seconds, budget.str());

  const bool pass = check.failed() == 0;
  std::printf("[%s] AC%d %s (%d checks, %.3f s, budget %.0f s)\n",
              pass ? "PASS" : "FAIL", id, title.c_str(), check.checks(), seconds,
              budget_seconds);
  for (const auto& f : check.failures()) std::printf("       %s\n", f.c_str());
  std::fflush(stdout);
  return {pass, seconds};
}

std::string label(double alpha, std::int64_t n) {
  std::ostringstream s;
  s << "alpha=" << alpha << " n=" << n;
  return s.str();
}

void closed_form_identities(Check& c) {
  for (double alpha : kIdentityShapes) {
    const GammaParams p(alpha);
    const PopulationValues v = population_values(p);
    c.near(v.theil_l, 1.0 / alpha - v.theil_t, 1e-12, "T_L = 1/alpha - T_T " + label(alpha, 0));
    c.near(v.atkinson, 1.0 - std::exp(-v.theil_l), 1e-12, "A = 1 - exp(-T_L) " + label(alpha, 0));
    for (std::int64_t n : kIdentitySizes) {
      const double total = static_cast<double>(n) * alpha;
      const std::string at = label(alpha, n);
      c.near(bias_theil_l(p, n), -bias_theil_t(p, n) - 1.0 / total, 1e-12,
             "Bias(T_L) = -Bias(T_T) - 1/(n alpha) " + at);
      c.near(expected_theil_t(p, n) - v.theil_t, bias_theil_t(p, n), 1e-12, "T_T bias " + at);
      c.near(expected_theil_l(p, n) - v.theil_l, bias_theil_l(p, n), 1e-12, "T_L bias " + at);
      c.near(expected_atkinson(p, n) - v.atkinson, bias_atkinson(p, n), 1e-12, "A bias " + at);
    }
  }
}

void special_function_accuracy(Check& c) {
  c.near(ln_gamma(1.0), 0.0, 1e-12, "lnGamma(1)");
  c.near(ln_gamma(2.0), 0.0, 1e-12, "lnGamma(2)");
  c.near(ln_gamma(0.5), 0.5 * std::log(kPi), 1e-12, "lnGamma(1/2)");
  c.near(digamma(1.0), -kEulerGamma, 1e-12, "psi(1)");
  c.near(digamma(2.0), 1.0 - kEulerGamma, 1e-12, "psi(2)");
  c.near(digamma(0.5), -kEulerGamma - 2.0 * kLn2, 1e-12, "psi(1/2)");
  c.near(trigamma(1.0), kPi * kPi / 6.0, 1e-12, "psi'(1)");
  c.near(trigamma(2.0), kPi * kPi / 6.0 - 1.0, 1e-12, "psi'(2)");
  c.near(trigamma(0.5), kPi * kPi / 2.0, 1e-12, "psi'(1/2)");
  c.near(log_gamma_ratio_scaled(1.0, 1), 0.0, 1e-12, "ratio(1,1)");
  c.near(log_gamma_ratio_scaled(1.0, 2), 2.0 * std::log(std::sqrt(kPi) / 2.0), 1e-12, "ratio(1,2)");
  c.near(log_gamma_ratio_scaled(0.5, 1), -kLn2, 1e-12, "ratio(1/2,1)");

  constexpr int kPoints = 1000;
  const double step = std::log(100.0 / 0.01) / (kPoints - 1);
  for (int i = 0; i < kPoints; ++i) {
    const double x = 0.01 * std::exp(step * i);
    std::ostringstream at;
    at << "x=" << x;
    c.near(digamma(x + 1.0) - digamma(x), 1.0 / x, 1e-12, "psi recurrence " + at.str());
    c.near(ln_gamma(x + 1.0) - ln_gamma(x), std::log(x), 1e-12, "lnGamma recurrence " + at.str());
    const double t = trigamma(x);
    c.near((trigamma(x + 1.0) + 1.0 / (x * x)) / t, 1.0, 1e-10, "psi' recurrence " + at.str());
  }
}

void sign_properties(Check& c) {
  for (double alpha : kIdentityShapes) {
    const GammaParams p(alpha);
    for (std::int64_t n : kIdentitySizes) {
      const std::string at = label(alpha, n);
      const double bt = bias_theil_t(p, n);
      c.expect(bt < 0.0, "Bias(T_T) < 0 " + at);
      c.expect(bt > -1.0 / (static_cast<double>(n) * alpha), "Bias(T_T) > -1/(n alpha) " + at);
      c.expect(bias_theil_l(p, n) < 0.0, "Bias(T_L) < 0 " + at);
      c.expect(bias_atkinson(p, n) <= 0.0, "Bias(A) <= 0 " + at);
    }
  }
}

void monte_carlo_oracle(Check& c) {
  const auto rows = run_cell(1.0, 2, 1'000'000, 1.0, kStudySeed);
  const double target[] = {kLn2 - 0.5, 1.0 - kLn2, 1.0 - kPi / 4.0};
  int k = 0;
  for (const SimSummary& r : rows) {
    if (is_corrected(r.estimator)) continue;
    c.expect(r.n_effective == 1'000'000, "all replications counted");
    c.near(r.mean_estimate, target[k++], 4.0 * standard_error(r),
           std::string("E(") + std::string(to_string(r.estimator)) + ") at alpha=1 n=2");
  }
}

double oracle_shape(double gap) {
  double lo = std::log(1e-8), hi = std::log(1e8);
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double a = std::exp(mid);
    (std::log(a) - boost::math::digamma(a) > gap ? lo : hi) = mid;
  }
  return std::exp(0.5 * (lo + hi));
}

void mle_correctness(Check& c) {
  std::mt19937_64 rng(kStudySeed);
  std::uniform_real_distribution<double> log_shape(std::log(0.05), std::log(50.0));
  std::uniform_int_distribution<int> size(2, 200);
  for (int trial = 0; trial < 1000; ++trial) {
    RngStream stream(rng());
    const Sample s = sample_gamma(GammaParams(std::exp(log_shape(rng))), size(rng), stream);
    const MleResult r = fit_shape(s);
    const double gap = log_moment_gap(s);
    c.expect(r.residual <= 1e-10, "residual <= 1e-10 trial " + std::to_string(trial));
    c.expect(std::fabs(std::log(r.alpha_hat) - boost::math::digamma(r.alpha_hat) - gap) <= 1e-10,
             "independent residual trial " + std::to_string(trial));
    c.near(r.alpha_hat / oracle_shape(gap), 1.0, 1e-8, "bisection oracle trial " + std::to_string(trial));
  }
  RngStream stream(kStudySeed);
  const Sample big = sample_gamma(GammaParams(2.0, 1.0), 100'000, stream);
  const double alpha_hat = fit_shape(big).alpha_hat;
  c.expect(alpha_hat >= 1.95 && alpha_hat <= 2.05,
           "alpha_hat in [1.95, 2.05] for n=1e5 Gamma(2,1): " + std::to_string(alpha_hat));
}

void study_reproduction(Check& c) {
  SimConfig config;
  config.master_seed = kStudySeed;
  const auto rows = run_grid(config);
  c.expect(rows.size() == 120, "120 summary rows");
  double sum_uncorrected = 0.0, sum_corrected = 0.0;
  for (std::size_t i = 0; i + 1 < rows.size(); i += 2) {
    const SimSummary& u = rows[i];
    const SimSummary& k = rows[i + 1];
    const std::string at = label(u.alpha, u.n) + " " + std::string(to_string(u.estimator));
    const double se_u = standard_error(u) / u.true_value;
    const double se_k = standard_error(k) / k.true_value;
    const double combined = std::sqrt(se_u * se_u + se_k * se_k);
    c.expect(u.rel_bias < 3.0 * se_u, "uncorrected rel_bias negative " + at);
    c.expect(std::fabs(k.rel_bias) <= std::fabs(u.rel_bias) + 3.0 * combined,
             "corrected |rel_bias| no worse " + at);
    sum_uncorrected += std::fabs(u.rel_bias);
    sum_corrected += std::fabs(k.rel_bias);
  }
  std::ostringstream ratio;
  ratio << "grid-average |rel_bias| corrected/uncorrected = " << sum_corrected / sum_uncorrected
        << " (must be <= 0.5)";
  c.expect(sum_corrected <= 0.5 * sum_uncorrected, ratio.str());
  std::printf("       %s\n", ratio.str().c_str());
}

int run_cli(const std::string& args) {
  const std::string command = std::string(GAMMAINEQ_CLI_PATH) + " " + args + " 2>/dev/null";
  const int status = std::system(command.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void determinism(Check& c) {
  const fs::path dir = fs::temp_directory_path() / "gammaineq_acceptance";
  fs::create_directories(dir);
  const fs::path serial = dir / "serial.csv";
  const fs::path parallel = dir / "parallel.csv";
  const std::string flags = "simulate --seed " + std::to_string(kStudySeed);
  c.expect(run_cli(flags + " --threads 1 --out " + serial.string()) == 0, "CLI run 1 exit 0");
  c.expect(run_cli(flags + " --threads 8 --out " + parallel.string()) == 0, "CLI run 2 exit 0");
  const std::string a = slurp(serial), b = slurp(parallel);
  c.expect(!a.empty() && a == b, "CLI CSV outputs byte-identical");

  SimConfig config;
  config.master_seed = kStudySeed;
  config.threads = 3;
  c.expect(results_csv(run_grid(config)) == a, "library output matches CLI bytes");
  fs::remove_all(dir);
}

void scale_invariance(Check& c) {
  std::mt19937_64 rng(kStudySeed);
  std::uniform_real_distribution<double> log_shape(std::log(0.1), std::log(20.0));
  for (int trial = 0; trial < 200; ++trial) {
    RngStream stream(rng());
    const Sample s = sample_gamma(GammaParams(std::exp(log_shape(rng))), 2 + trial % 150, stream);
    const EstimateReport ref = estimate_all(s, true);
    for (double scale : {1e-6, 1.0, 1e6}) {
      std::vector<double> xs(s.observations().begin(), s.observations().end());
      for (auto& x : xs) x *= scale;
      const EstimateReport r = estimate_all(Sample(xs), true);
      const std::string at = "trial " + std::to_string(trial) + " c=" + std::to_string(scale);
      c.near(r.theil_t_hat, ref.theil_t_hat, 1e-10, "T_T " + at);
      c.near(r.theil_l_hat, ref.theil_l_hat, 1e-10, "T_L " + at);
      c.near(r.atkinson_hat, ref.atkinson_hat, 1e-10, "A " + at);
      c.near(*r.theil_t_corrected, *ref.theil_t_corrected, 1e-10, "T_T corr " + at);
      c.near(*r.theil_l_corrected, *ref.theil_l_corrected, 1e-10, "T_L corr " + at);
      c.near(*r.atkinson_corrected, *ref.atkinson_corrected, 1e-10, "A corr " + at);
      c.near(*r.alpha_hat / *ref.alpha_hat, 1.0, 1e-10, "alpha_hat " + at);
    }
  }

  SimConfig fixed;
  fixed.master_seed = kStudySeed;
  SimConfig tracking = fixed;
  tracking.rate_tracks_shape = true;
  const auto a = run_grid(fixed);
  const auto b = run_grid(tracking);
  c.expect(a.size() == b.size(), "same grid size for rate 1 and rate alpha");
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    const std::string at = label(a[i].alpha, a[i].n) + " " + std::string(to_string(a[i].estimator));
    c.near(b[i].mean_estimate, a[i].mean_estimate, 1e-10, "rate-free mean " + at);
    c.near(b[i].rel_bias, a[i].rel_bias, 1e-10, "rate-free rel_bias " + at);
    c.near(b[i].mse, a[i].mse, 1e-10, "rate-free mse " + at);
  }
}

}  // namespace

int main() {
  std::printf("gammaineq acceptance suite\n");
  bool all = true;
  all &= run_criterion(1, "closed-form identities", 1.0, closed_form_identities).pass;
  all &= run_criterion(2, "special-function accuracy", 1.0, special_function_accuracy).pass;
  all &= run_criterion(3, "bias sign properties", 1.0, sign_properties).pass;
  all &= run_criterion(4, "Monte Carlo check of the expectation formulas", 30.0,
                       monte_carlo_oracle).pass;
  all &= run_criterion(5, "shape MLE correctness", 10.0, mle_correctness).pass;
  const Outcome study = run_criterion(6, "simulation study reproduction", 60.0, study_reproduction);
  all &= study.pass;
  all &= run_criterion(7, "simulate determinism", 120.0, determinism).pass;
  all &= run_criterion(8, "scale invariance", 60.0, scale_invariance).pass;
  std::printf("%s\n", all ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED");
  return all ? 0 : 1;
}
