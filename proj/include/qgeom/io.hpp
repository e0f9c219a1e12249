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

// Input parsing: probability vectors (JSON array or CSV column) and weighted
// tree fixtures (JSON adjacency maps).

#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include <json.hpp>

#include "qgeom/catk/geodesic_space.hpp"
#include "qgeom/entropy.hpp"
#include "qgeom/error.hpp"

namespace qgeom {

enum class InputFormat { kAuto, kJson, kCsv };

inline InputFormat parse_input_format(std::string_view s) {
  if (s == "auto") return InputFormat::kAuto;
  if (s == "json") return InputFormat::kJson;
  if (s == "csv") return InputFormat::kCsv;
  throw ParseError("unknown input format '" + std::string(s) + "' (expected auto, json or csv)");
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

inline bool parse_number(std::string_view s, double& out) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
  return res.ec == std::errc() && res.ptr == s.data() + s.size();
}

inline nlohmann::json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // Translate the byte offset into a line number.
    std::size_t line = 1;
    const std::size_t upto = std::min<std::size_t>(e.byte, text.size());
    for (std::size_t i = 0; i + 1 < upto; ++i) line += text[i] == '\n';
    std::ostringstream os;
    os << source << ": line " << line << ": malformed JSON (" << e.what() << ")";
    throw ParseError(os.str());
  }
}

}  // namespace detail

/// JSON array of numbers.
inline std::vector<double> parse_distribution_json(const std::string& text, const std::string& source = "<input>") {
  const nlohmann::json doc = detail::parse_json_text(text, source);
  if (!doc.is_array()) throw ParseError(source + ": expected a JSON array of probabilities");
  std::vector<double> probs;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    if (!doc[i].is_number()) {
      std::ostringstream os;
      os << source << ": element " << i << " is not a number (" << doc[i].dump() << ")";
      throw ParseError(os.str());
    }
    probs.push_back(doc[i].get<double>());
  }
  return probs;
}

/// First column of a CSV table. '#' starts a comment; blank lines are
/// skipped; a non-numeric first row is taken as a header.
inline std::vector<double> parse_distribution_csv(const std::string& text, const std::string& source = "<input>") {
  std::vector<double> probs;
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  bool seen_row = false;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    const std::string_view field = detail::trim(line.substr(0, line.find(',')));
    double v = 0.0;
    if (!detail::parse_number(field, v)) {
      if (!seen_row) {
        seen_row = true;
        continue;
      }
      std::ostringstream os;
      os << source << ": line " << line_no << ", field 1: '" << field << "' is not a number";
      throw ParseError(os.str());
    }
    seen_row = true;
    probs.push_back(v);
  }
  return probs;
}

/// Reads a distribution file; kAuto picks JSON for a ".json" suffix and CSV otherwise.
inline DiscreteDistribution ingest_distribution(const std::string& path, InputFormat format = InputFormat::kAuto) {
  if (format == InputFormat::kAuto) {
    const bool json = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
    format = json ? InputFormat::kJson : InputFormat::kCsv;
  }
  const std::string text = read_text_file(path);
  auto probs = format == InputFormat::kJson ? parse_distribution_json(text, path) : parse_distribution_csv(text, path);
  if (probs.empty()) throw ParseError(path + ": no probabilities found");
  return DiscreteDistribution(std::move(probs));
}

/// {"adjacency": {"a": {"b": 1.5, ...}, ...}}. Each edge may be listed from
/// one or both ends; both listings must agree on the weight.
inline WeightedTree parse_tree_json(const std::string& text, const std::string& source = "<input>") {
  const nlohmann::json doc = detail::parse_json_text(text, source);
  if (!doc.is_object() || !doc.contains("adjacency") || !doc["adjacency"].is_object()) {
    throw ParseError(source + ": expected an object with an \"adjacency\" map");
  }
  WeightedTree tree;
  std::map<std::string, std::size_t> index;
  auto vertex = [&](const std::string& name) {
    auto [it, inserted] = index.emplace(name, tree.labels.size());
    if (inserted) tree.labels.push_back(name);
    return it->second;
  };
  std::map<std::pair<std::size_t, std::size_t>, double> seen;
  for (const auto& [from, nbrs] : doc["adjacency"].items()) {
    const std::size_t u = vertex(from);
    if (!nbrs.is_object()) throw ParseError(source + ": adjacency of '" + from + "' must be an object");
    for (const auto& [to, w] : nbrs.items()) {
      if (!w.is_number()) {
        throw ParseError(source + ": weight of edge '" + from + "'-'" + to + "' is not a number");
      }
      const std::size_t v = vertex(to);
      const double weight = w.get<double>();
      const auto key = std::minmax(u, v);
      if (auto it = seen.find(key); it != seen.end()) {
        if (it->second != weight) {
          std::ostringstream os;
          os << source << ": edge '" << from << "'-'" << to << "' listed with weights " << it->second << " and "
             << weight;
          throw ParseError(os.str());
        }
        continue;
      }
      seen.emplace(key, weight);
      tree.edges.push_back({u, v, weight});
    }
  }
  tree.vertex_count = tree.labels.size();
  return tree;
}

inline WeightedTree load_tree(const std::string& path) { return parse_tree_json(read_text_file(path), path); }

}  // namespace qgeom
