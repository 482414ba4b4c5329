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

#include "report.hpp"

#include <cstdio>
#include <iomanip>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace baccarat::cli {
namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", kDecimalPlaces, v);
  return buf;
}

std::string join(const std::vector<std::string>& items, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

// Exact rendering and, where one exists, the decimal one.
std::pair<std::string, std::string> renderings(const FieldValue& value) {
  struct Visitor {
    std::pair<std::string, std::string> operator()(const Rational& r) const {
      return {to_fraction_string(r), to_decimal_string(r, kDecimalPlaces)};
    }
    std::pair<std::string, std::string> operator()(const std::string& s) const { return {s, ""}; }
    std::pair<std::string, std::string> operator()(std::int64_t i) const {
      return {std::to_string(i), ""};
    }
    std::pair<std::string, std::string> operator()(bool b) const {
      return {b ? "true" : "false", ""};
    }
    std::pair<std::string, std::string> operator()(double d) const {
      return {format_double(d), format_double(d)};
    }
    std::pair<std::string, std::string> operator()(const std::vector<std::string>& v) const {
      return {join(v, " "), ""};
    }
  };
  return std::visit(Visitor{}, value);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void render_text(const Report& report, std::ostream& out) {
  out << "command: " << report.command << "\n";
  for (const auto& [k, v] : report.inputs) out << "input " << k << " = " << v << "\n";
  if (report.text_block) out << *report.text_block;
  std::size_t width = 0;
  for (const auto& f : report.results) width = std::max(width, f.key.size());
  for (const auto& f : report.results) {
    const auto [exact, decimal] = renderings(f.value);
    out << std::left << std::setw(static_cast<int>(width)) << f.key << "  " << exact;
    if (!decimal.empty() && decimal != exact) out << "  (" << decimal << ")";
    out << "\n";
  }
}

void render_json(const Report& report, std::ostream& out) {
  nlohmann::ordered_json doc;
  doc["command"] = report.command;
  doc["inputs"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : report.inputs) doc["inputs"][k] = v;
  nlohmann::ordered_json results = nlohmann::ordered_json::object();
  nlohmann::ordered_json decimals = nlohmann::ordered_json::object();
  for (const auto& f : report.results) {
    struct Visitor {
      nlohmann::ordered_json operator()(const Rational& r) const { return to_fraction_string(r); }
      nlohmann::ordered_json operator()(const std::string& s) const { return s; }
      nlohmann::ordered_json operator()(std::int64_t i) const { return i; }
      nlohmann::ordered_json operator()(bool b) const { return b; }
      nlohmann::ordered_json operator()(double d) const { return format_double(d); }
      nlohmann::ordered_json operator()(const std::vector<std::string>& v) const { return v; }
    };
    results[f.key] = std::visit(Visitor{}, f.value);
    const auto [exact, decimal] = renderings(f.value);
    if (!decimal.empty()) decimals[f.key] = decimal;
  }
  doc["results"] = std::move(results);
  doc["decimal"] = std::move(decimals);
  out << doc.dump(2) << "\n";
}

void render_csv(const Report& report, std::ostream& out) {
  out << "key,exact,decimal\n";
  for (const auto& f : report.results) {
    const auto [exact, decimal] = renderings(f.value);
    out << csv_escape(f.key) << "," << csv_escape(exact) << "," << csv_escape(decimal) << "\n";
  }
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  throw std::invalid_argument("unknown format '" + name + "'");
}

void render(const Report& report, Format format, std::ostream& out) {
  switch (format) {
    case Format::Text: render_text(report, out); break;
    case Format::Json: render_json(report, out); break;
    case Format::Csv: render_csv(report, out); break;
  }
}

}  // namespace baccarat::cli
