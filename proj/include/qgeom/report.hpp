// Copyright 2026 The qgeom Authors.
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

// Report emission: schema-versioned JSON or CSV, every float written with 17
// significant digits so that reports round-trip exactly.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace qgeom {

inline constexpr int kReportSchema = 1;

using ReportValue = nlohmann::ordered_json;

/// Scalar fields plus an optional table of rows.
class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {
    root_["schema"] = kReportSchema;
    root_["command"] = command_;
  }

  ReportValue& operator[](const std::string& key) { return root_[key]; }
  const ReportValue& root() const noexcept { return root_; }

  void set_table(std::string name, std::vector<std::string> columns) {
    table_name_ = std::move(name);
    columns_ = std::move(columns);
    rows_.clear();
  }
  void add_row(std::vector<ReportValue> row) { rows_.push_back(std::move(row)); }

  void write_json(std::ostream& os) const {
    ReportValue doc = root_;
    if (!table_name_.empty()) {
      ReportValue rows = ReportValue::array();
      for (const auto& r : rows_) {
        ReportValue obj = ReportValue::object();
        for (std::size_t i = 0; i < columns_.size(); ++i) obj[columns_[i]] = r[i];
        rows.push_back(std::move(obj));
      }
      doc[table_name_] = std::move(rows);
    }
    write_value(os, doc, 0);
    os << '\n';
  }

  /// The table if there is one, otherwise flattened key,value pairs.
  void write_csv(std::ostream& os) const {
    if (!table_name_.empty()) {
      for (std::size_t i = 0; i < columns_.size(); ++i) os << (i ? "," : "") << columns_[i];
      os << '\n';
      for (const auto& r : rows_) {
        for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << csv_cell(r[i]);
        os << '\n';
      }
      return;
    }
    os << "key,value\n";
    flatten(os, root_, "");
  }

  static std::string format_double(double v) {
    if (!std::isfinite(v)) return "null";
    if (v == 0.0) return "0";  // no "-0"
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
  }

 private:
  static std::string csv_cell(const ReportValue& v) {
    if (v.is_string()) {
      std::string s = v.get<std::string>();
      if (s.find_first_of(",\"\n") == std::string::npos) return s;
      std::string out = "\"";
      for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
      return out + "\"";
    }
    if (v.is_number_float()) {
      const double d = v.get<double>();
      return std::isfinite(d) ? format_double(d) : "";
    }
    if (v.is_null()) return "";
    return v.dump();
  }

  static void flatten(std::ostream& os, const ReportValue& v, const std::string& prefix) {
    if (v.is_object()) {
      for (const auto& [k, child] : v.items()) flatten(os, child, prefix.empty() ? k : prefix + "." + k);
    } else if (v.is_array()) {
      for (std::size_t i = 0; i < v.size(); ++i) flatten(os, v[i], prefix + "." + std::to_string(i));
    } else {
      os << csv_cell(ReportValue(prefix)) << ',' << csv_cell(v) << '\n';
    }
  }

  static void indent(std::ostream& os, int depth) {
    for (int i = 0; i < depth; ++i) os << "  ";
  }

  static void write_value(std::ostream& os, const ReportValue& v, int depth) {
    if (v.is_object()) {
      if (v.empty()) {
        os << "{}";
        return;
      }
      os << "{\n";
      bool first = true;
      for (const auto& [k, child] : v.items()) {
        if (!first) os << ",\n";
        first = false;
        indent(os, depth + 1);
        os << ReportValue(k).dump() << ": ";
        write_value(os, child, depth + 1);
      }
      os << '\n';
      indent(os, depth);
      os << '}';
    } else if (v.is_array()) {
      if (v.empty()) {
        os << "[]";
        return;
      }
      // Arrays of scalars stay on one line.
      const bool flat = std::none_of(v.begin(), v.end(), [](const auto& e) { return e.is_structured(); });
      os << '[';
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << (flat ? ", " : ",");
        if (!flat) {
          os << '\n';
          indent(os, depth + 1);
        }
        write_value(os, v[i], depth + 1);
      }
      if (!flat) {
        os << '\n';
        indent(os, depth);
      }
      os << ']';
    } else if (v.is_number_float()) {
      os << format_double(v.get<double>());
    } else {
      os << v.dump();
    }
  }

  std::string command_;
  ReportValue root_ = ReportValue::object();
  std::string table_name_;
  std::vector<std::string> columns_;
  std::vector<std::vector<ReportValue>> rows_;
};

}  // namespace qgeom
