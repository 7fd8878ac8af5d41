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

// Command-line front end: population values, closed-form expectations and
// biases, estimates from data files, and the Monte Carlo study.
//
// Exit codes: 0 success, 1 domain or data error, 2 usage error,
// 3 correction unavailable.

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "gammaineq/errors.hpp"
#include "gammaineq/estimators.hpp"
#include "gammaineq/gamma_model.hpp"
#include "gammaineq/observations_io.hpp"
#include "gammaineq/results_csv.hpp"
#include "gammaineq/simulation.hpp"

namespace {

using namespace gammaineq;

constexpr int kExitOk = 0;
constexpr int kExitDataError = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCorrectionUnavailable = 3;

void print_value(std::ostream& out, const std::string& name, double value) {
  out << name << " = " << std::setprecision(12) << value << '\n';
}

int cmd_population(double alpha) {
  const GammaParams params(alpha);
  const PopulationValues v = population_values(params);
  print_value(std::cout, "alpha", alpha);
  print_value(std::cout, "theil_t", v.theil_t);
  print_value(std::cout, "theil_l", v.theil_l);
  print_value(std::cout, "atkinson", v.atkinson);
  return kExitOk;
}

int cmd_expectation(double alpha, std::int64_t n) {
  const GammaParams params(alpha);
  print_value(std::cout, "alpha", alpha);
  std::cout << "n = " << n << '\n';
  for (IndexKind kind :
       {IndexKind::TheilT, IndexKind::TheilL, IndexKind::Atkinson}) {
    const std::string name(to_string(kind));
    print_value(std::cout, "expected_" + name, expected_value(kind, params, n));
    print_value(std::cout, "bias_" + name, bias(kind, params, n));
  }
  return kExitOk;
}

void print_report(const EstimateReport& r) {
  std::cout << "n = " << r.n << '\n';
  print_value(std::cout, "theil_t", r.theil_t_hat);
  print_value(std::cout, "theil_l", r.theil_l_hat);
  print_value(std::cout, "atkinson", r.atkinson_hat);
  if (r.alpha_hat) {
    print_value(std::cout, "alpha_hat", *r.alpha_hat);
    print_value(std::cout, "theil_t_corr", *r.theil_t_corrected);
    print_value(std::cout, "theil_l_corr", *r.theil_l_corrected);
    print_value(std::cout, "atkinson_corr", *r.atkinson_corrected);
  }
  for (const auto& note : r.diagnostics) std::cerr << "note: " << note << '\n';
}

int cmd_estimate(const std::string& input_path, bool correct) {
  std::ifstream in(input_path);
  if (!in) {
    std::cerr << "error: cannot open " << input_path << '\n';
    return kExitDataError;
  }
  const Sample sample(read_observations(in));
  try {
    print_report(estimate_all(sample, correct));
  } catch (const CorrectionUnavailable& e) {
    print_report(e.report());
    std::cerr << "error: " << e.what() << '\n';
    return kExitCorrectionUnavailable;
  }
  return kExitOk;
}

struct SimulateFlags {
  std::vector<double> alphas{0.1, 0.5, 1.5, 2.0};
  std::vector<std::int64_t> ns{10, 20, 50, 100, 200};
  std::int64_t n_sim = 1000;
  std::string rate = "1.0";
  std::uint64_t seed = 1;
  unsigned threads = 0;
  std::string out = "-";
};

int cmd_simulate(const SimulateFlags& flags) {
  SimConfig config;
  config.alphas = flags.alphas;
  config.ns = flags.ns;
  config.n_sim = flags.n_sim;
  config.master_seed = flags.seed;
  config.threads = flags.threads;
  if (flags.rate == "alpha") {
    config.rate_tracks_shape = true;
  } else {
    std::size_t used = 0;
    try {
      config.rate = std::stod(flags.rate, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != flags.rate.size()) {
      std::cerr << "error: --rate expects a positive number or 'alpha', got '"
                << flags.rate << "'\n";
      return kExitUsage;
    }
  }
  validate(config);

  const auto start = std::chrono::steady_clock::now();
  const std::vector<SimSummary> rows = run_grid(config);
  const std::string csv = results_csv(rows);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();

  if (flags.out == "-") {
    std::cout << csv;
  } else {
    try {
      write_file_atomically(flags.out, csv);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << '\n';
      return kExitDataError;
    }
  }
  std::cerr << "simulate: " << config.alphas.size() << " alphas x "
            << config.ns.size() << " sample sizes x " << config.n_sim
            << " replications, " << rows.size() << " rows, seed "
            << config.master_seed << ", rate "
            << (config.rate_tracks_shape ? std::string("alpha") : flags.rate)
            << ", " << std::fixed << std::setprecision(3) << seconds
            << " s wall\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Theil and Atkinson inequality indices for gamma populations"};
  app.require_subcommand(1);

  double pop_alpha = 0.0;
  auto* population = app.add_subcommand(
      "population", "Population Theil T, Theil L and Atkinson indices");
  population->add_option("--alpha", pop_alpha, "Gamma shape")->required();

  double exp_alpha = 0.0;
  std::int64_t exp_n = 0;
  auto* expectation = app.add_subcommand(
      "expectation", "Exact estimator expectations and biases at (alpha, n)");
  expectation->add_option("--alpha", exp_alpha, "Gamma shape")->required();
  expectation->add_option("--n", exp_n, "Sample size")->required();

  std::string input_path;
  bool correct = false;
  auto* estimate = app.add_subcommand(
      "estimate", "Estimate the indices from a file of observations");
  estimate->add_option("input", input_path,
                       "One observation per line, or CSV with an income column")
      ->required();
  estimate->add_flag("--correct", correct,
                     "Also fit the gamma shape and report bias-corrected values");

  SimulateFlags sim;
  auto* simulate = app.add_subcommand(
      "simulate", "Monte Carlo study of original and corrected estimators");
  simulate->add_option("--alphas", sim.alphas, "Comma-separated shapes")
      ->delimiter(',')
      ->capture_default_str();
  simulate->add_option("--ns", sim.ns, "Comma-separated sample sizes")
      ->delimiter(',')
      ->capture_default_str();
  simulate->add_option("--nsim", sim.n_sim, "Replications per cell")
      ->capture_default_str();
  simulate->add_option("--rate", sim.rate,
                       "Sampling rate, or 'alpha' to use rate = shape")
      ->capture_default_str();
  simulate->add_option("--seed", sim.seed, "Master seed")->capture_default_str();
  simulate->add_option("--threads", sim.threads,
                       "Worker threads, 0 = hardware concurrency")
      ->capture_default_str();
  simulate->add_option("--out", sim.out, "Output CSV path, '-' for stdout")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*population) return cmd_population(pop_alpha);
    if (*expectation) return cmd_expectation(exp_alpha, exp_n);
    if (*estimate) return cmd_estimate(input_path, correct);
    if (*simulate) return cmd_simulate(sim);
  } catch (const ObservationParseError& e) {
    std::cerr << "error: " << input_path << ": " << e.what() << '\n';
    return kExitDataError;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDataError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDataError;
  }
  return kExitUsage;
}
