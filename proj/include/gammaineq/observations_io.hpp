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
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace gammaineq {

/// Rejected input line. `line` is 1-based.
class ObservationParseError : public std::runtime_error {
 public:
  ObservationParseError(std::size_t line, const std::string& what)
      : std::runtime_error(what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Reads observations from either a bare list (one number per line) or a
/// headered CSV with an `income` column. A header is recognized when the
/// first non-blank line is not a single number. Blank lines are skipped.
/// Every value must be positive and finite; the first offender is reported
/// with its line number.
std::vector<double> read_observations(std::istream& in);

}  // namespace gammaineq
