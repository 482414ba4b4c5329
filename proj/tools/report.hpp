// Copyright 2026 The Baccarat Equilibrium Authors
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

#ifndef BACCARAT_TOOLS_REPORT_HPP_
#define BACCARAT_TOOLS_REPORT_HPP_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "baccarat/rational.hpp"

namespace baccarat::cli {

enum class Format { Text, Json, Csv };

Format parse_format(const std::string& name);

using FieldValue = std::variant<Rational, std::string, std::int64_t, bool, double,
                                std::vector<std::string>>;

struct Field {
  std::string key;
  FieldValue value;
};

// What a command produced. Rationals are written as exact fractions with a
// decimal rendering next to them.
struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<Field> results;
  // Shown only in text output, above the fields.
  std::optional<std::string> text_block;

  void add(std::string key, FieldValue value) {
    results.push_back({std::move(key), std::move(value)});
  }
};

inline constexpr int kDecimalPlaces = 10;

void render(const Report& report, Format format, std::ostream& out);

}  // namespace baccarat::cli

#endif  // BACCARAT_TOOLS_REPORT_HPP_
