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

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "gammaineq/simulation.hpp"

namespace gammaineq {

inline constexpr std::string_view kResultsHeader =
    "alpha,n,estimator,true_value,mean_estimate,rel_bias,mse,n_effective,"
    "n_failed";

/// Shortest decimal string that parses back to exactly `value`.
std::string format_shortest(double value);

/// Header plus one LF-terminated record per summary.
void write_results_csv(std::ostream& out, const std::vector<SimSummary>& rows);
std::string results_csv(const std::vector<SimSummary>& rows);

/// Inverse of write_results_csv. Throws std::runtime_error on a malformed
/// header or record.
std::vector<SimSummary> read_results_csv(std::istream& in);

/// Writes `contents` to a temporary file beside `path`, then renames it into
/// place. Throws std::runtime_error if the file cannot be written.
void write_file_atomically(const std::filesystem::path& path,
                           std::string_view contents);

}  // namespace gammaineq
