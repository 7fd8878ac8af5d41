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

#include "gammaineq/results_csv.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace gammaineq {
namespace {

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

template <typename T>
T parse_field(std::string_view text, std::size_t line) {
  T value{};
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    // from_chars does not accept "nan" spelled by to_chars on every
    // standard library, so handle it explicitly.
    if constexpr (std::is_floating_point_v<T>) {
      if (text == "nan" || text == "-nan") return std::nan("");
    }
    throw std::runtime_error("results CSV line " + std::to_string(line) +
                             ": cannot parse '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

std::string format_shortest(double value) {
  std::array<char, 32> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc{}) throw std::runtime_error("format_shortest failed");
  return std::string(buf.data(), ptr);
}

void write_results_csv(std::ostream& out, const std::vector<SimSummary>& rows) {
  out << kResultsHeader << '\n';
  for (const SimSummary& r : rows) {
    out << format_shortest(r.alpha) << ',' << r.n << ',' << to_string(r.estimator)
        << ',' << format_shortest(r.true_value) << ','
        << format_shortest(r.mean_estimate) << ',' << format_shortest(r.rel_bias)
        << ',' << format_shortest(r.mse) << ',' << r.n_effective << ','
        << r.n_failed << '\n';
  }
}

std::string results_csv(const std::vector<SimSummary>& rows) {
  std::ostringstream out;
  write_results_csv(out, rows);
  return out.str();
}

std::vector<SimSummary> read_results_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kResultsHeader) {
    throw std::runtime_error("results CSV: missing or unexpected header");
  }
  std::vector<SimSummary> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto fields = split(line, ',');
    if (fields.size() != 9) {
      throw std::runtime_error("results CSV line " + std::to_string(line_no) +
                               ": expected 9 fields");
    }
    SimSummary r;
    r.alpha = parse_field<double>(fields[0], line_no);
    r.n = parse_field<std::int64_t>(fields[1], line_no);
    const auto estimator = parse_estimator(fields[2]);
    if (!estimator) {
      throw std::runtime_error("results CSV line " + std::to_string(line_no) +
                               ": unknown estimator '" +
                               std::string(fields[2]) + "'");
    }
    r.estimator = *estimator;
    r.true_value = parse_field<double>(fields[3], line_no);
    r.mean_estimate = parse_field<double>(fields[4], line_no);
    r.rel_bias = parse_field<double>(fields[5], line_no);
    r.mse = parse_field<double>(fields[6], line_no);
    r.n_effective = parse_field<std::int64_t>(fields[7], line_no);
    r.n_failed = parse_field<std::int64_t>(fields[8], line_no);
    rows.push_back(r);
  }
  return rows;
}

void write_file_atomically(const std::filesystem::path& path,
                           std::string_view contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) {
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw std::runtime_error("failed writing " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    std::filesystem::remove(tmp, ignored);
    throw std::runtime_error("cannot move output into place at " +
                             path.string() + ": " + ec.message());
  }
}

}  // namespace gammaineq
