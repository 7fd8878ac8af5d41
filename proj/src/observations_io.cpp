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

#include "gammaineq/observations_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <istream>
#include <optional>
#include <sstream>
#include <string_view>

namespace gammaineq {
namespace {

std::string_view trim(std::string_view s) {
  auto is_space = [](unsigned char c) { return std::isspace(c) != 0; };
  while (!s.empty() && is_space(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && is_space(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') {
    s = s.substr(1, s.size() - 2);
  }
  return s;
}

std::optional<double> parse_number(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc{} || ptr != end) return std::nullopt;
  return value;
}

std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = line.find(',', start);
    fields.push_back(trim(line.substr(start, pos == std::string_view::npos
                                                 ? std::string_view::npos
                                                 : pos - start)));
    if (pos == std::string_view::npos) return fields;
    start = pos + 1;
  }
}

bool equals_ignore_case(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) ==
                  std::tolower(static_cast<unsigned char>(y));
         });
}

[[noreturn]] void reject(std::size_t line, const std::string& why) {
  throw ObservationParseError(line, "line " + std::to_string(line) + ": " + why);
}

}  // namespace

std::vector<double> read_observations(std::istream& in) {
  std::vector<double> values;
  std::optional<std::size_t> column;  // set once a header has been seen
  bool first = true;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line.remove_prefix(3);
    if (trim(line).empty()) continue;

    if (first) {
      first = false;
      if (!parse_number(line)) {
        const auto names = split_csv(line);
        const auto it = std::find_if(names.begin(), names.end(), [](auto name) {
          return equals_ignore_case(name, "income");
        });
        if (it == names.end()) {
          reject(line_no, "header has no 'income' column and the line is not a number");
        }
        column = static_cast<std::size_t>(it - names.begin());
        continue;
      }
    }

    std::string_view field = line;
    if (column) {
      const auto fields = split_csv(line);
      if (*column >= fields.size()) reject(line_no, "missing income field");
      field = fields[*column];
    }
    const auto value = parse_number(field);
    if (!value) reject(line_no, "cannot parse '" + std::string(trim(field)) + "' as a number");
    if (!(*value > 0.0) || !std::isfinite(*value)) {
      std::ostringstream why;
      why << "observation " << *value << " is not positive and finite";
      reject(line_no, why.str());
    }
    values.push_back(*value);
  }
  return values;
}

}  // namespace gammaineq
