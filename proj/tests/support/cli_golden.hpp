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

// Running the CLI binary as a subprocess and comparing its reports with
// golden files (structure exact, numbers to a relative tolerance).

#pragma once

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace qgeom::testing {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

inline std::string shell_quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

/// Runs `cli args...` with stderr discarded; `env` is prepended verbatim.
inline CliResult run_cli(const std::string& cli, const std::vector<std::string>& args, const std::string& env = "") {
  std::string cmd = env.empty() ? "" : env + " ";
  cmd += shell_quote(cli);
  for (const auto& a : args) cmd += " " + shell_quote(a);
  cmd += " 2>/dev/null";
  CliResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

/// Relative tolerance plus an absolute floor, so roundoff-sized values
/// (residuals, margins near zero) compare equal across platforms.
inline bool numbers_close(double a, double b, double rel, double abs = 1e-12) {
  if (a == b) return true;
  return std::fabs(a - b) <= rel * std::fmax(std::fabs(a), std::fabs(b)) + abs;
}

/// Empty string when equal; otherwise a description of the first mismatch.
inline std::string compare_json(const nlohmann::ordered_json& want, const nlohmann::ordered_json& got,
                                double rel, const std::string& where = "$") {
  if (want.is_number() && got.is_number()) {
    const double a = want.get<double>(), b = got.get<double>();
    return numbers_close(a, b, rel) ? "" : where + ": " + want.dump() + " vs " + got.dump();
  }
  if (want.type() != got.type()) return where + ": type " + want.type_name() + " vs " + got.type_name();
  if (want.is_object()) {
    if (want.size() != got.size()) return where + ": key count " + std::to_string(want.size()) + " vs " +
                                          std::to_string(got.size());
    auto wi = want.begin();
    auto gi = got.begin();
    for (; wi != want.end(); ++wi, ++gi) {
      if (wi.key() != gi.key()) return where + ": key '" + wi.key() + "' vs '" + gi.key() + "'";
      if (auto d = compare_json(wi.value(), gi.value(), rel, where + "." + wi.key()); !d.empty()) return d;
    }
    return "";
  }
  if (want.is_array()) {
    if (want.size() != got.size()) return where + ": length " + std::to_string(want.size()) + " vs " +
                                          std::to_string(got.size());
    for (std::size_t i = 0; i < want.size(); ++i) {
      if (auto d = compare_json(want[i], got[i], rel, where + "[" + std::to_string(i) + "]"); !d.empty()) return d;
    }
    return "";
  }
  return want == got ? "" : where + ": " + want.dump() + " vs " + got.dump();
}

/// Cell-wise CSV comparison; numeric cells to `rel`.
inline std::string compare_csv(const std::string& want, const std::string& got, double rel) {
  auto split = [](const std::string& text, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
  };
  const auto wl = split(want, '\n'), gl = split(got, '\n');
  if (wl.size() != gl.size()) return "line count " + std::to_string(wl.size()) + " vs " + std::to_string(gl.size());
  for (std::size_t i = 0; i < wl.size(); ++i) {
    const auto wc = split(wl[i], ','), gc = split(gl[i], ',');
    if (wc.size() != gc.size()) return "line " + std::to_string(i + 1) + ": cell count differs";
    for (std::size_t j = 0; j < wc.size(); ++j) {
      if (wc[j] == gc[j]) continue;
      char* e1 = nullptr;
      char* e2 = nullptr;
      const double a = std::strtod(wc[j].c_str(), &e1), b = std::strtod(gc[j].c_str(), &e2);
      if (*e1 != '\0' || *e2 != '\0' || wc[j].empty() || !numbers_close(a, b, rel)) {
        return "line " + std::to_string(i + 1) + ", cell " + std::to_string(j + 1) + ": '" + wc[j] + "' vs '" +
               gc[j] + "'";
      }
    }
  }
  return "";
}

struct GoldenCase {
  std::string name;  ///< golden file stem; ".json" or ".csv" by --format
  std::vector<std::string> args;
  int exit_code = 0;
  bool csv = false;
};

/// The schema suite. "@" in an argument is replaced by the fixture directory.
inline std::vector<GoldenCase> golden_cases() {
  return {
      {"entropy_uniform2", {"entropy", "--q", "0.5", "--dist", "@/uniform2.json"}},
      {"entropy_composition", {"entropy", "--q", "0.7", "--dist", "@/skewed.json", "--with", "@/commented.csv"}},
      {"entropy_density", {"entropy", "--q", "0.5", "--density", "uniform:0:2"}},
      {"qeval_tau", {"qeval", "--q", "0", "--op", "tau", "--x", "3"}},
      {"qeval_mul_sweep", {"qeval", "--q", "0.5", "--op", "mul", "--x", "1,2.5,4.75", "--y", "2.5"}},
      {"qeval_sub_csv", {"qeval", "--q", "0", "--op", "sub", "--x", "3", "--y", "1", "--format", "csv"}, 0, true},
      {"curvature_analytic", {"curvature", "--q", "0", "--mode", "analytic"}},
      {"curvature_all", {"curvature", "--q", "0.5", "--at", "0.2,-0.4"}},
      {"curvature_double_exp", {"curvature", "--metric", "double-exp", "--q", "0", "--q2", "0.5", "--plane", "1,2",
                                "--mode", "numeric"}},
      {"geodesic_both", {"geodesic", "--q", "0", "--from", "0,0", "--to", "0,1", "--points", "4"}},
      {"catk_warped", {"catk", "--space", "warped", "--q", "0", "--k", "-0.4804530139182014", "--samples", "600",
                       "--seed", "3"}},
      {"catk_tree", {"catk", "--space", "tree", "--tree", "@/tree.json", "--k", "-1", "--samples", "600",
                     "--seed", "5"}},
      {"catk_l1", {"catk", "--space", "lp", "--p", "1", "--dim", "2", "--k", "-0.1", "--samples", "10000",
                   "--seed", "7"}, 5},
      {"superstat_grid", {"superstat", "--q", "1.1,1.5,1.9", "--E", "0,0.1,1,10"}},
      {"superstat_csv", {"superstat", "--q", "1.5", "--E", "1", "--format", "csv"}, 0, true},
  };
}

inline std::vector<std::string> expand_args(const std::vector<std::string>& args, const std::string& fixtures) {
  std::vector<std::string> out;
  for (auto a : args) {
    if (!a.empty() && a[0] == '@') a = fixtures + a.substr(1);
    out.push_back(a);
  }
  return out;
}

/// Runs one golden case; empty string on success.
inline std::string check_golden(const std::string& cli, const GoldenCase& c, const std::string& golden_dir,
                                const std::string& fixtures, double rel = 1e-9) {
  const CliResult r = run_cli(cli, expand_args(c.args, fixtures));
  if (r.exit_code != c.exit_code) {
    return c.name + ": exit code " + std::to_string(r.exit_code) + ", expected " + std::to_string(c.exit_code);
  }
  const std::string path = golden_dir + "/" + c.name + (c.csv ? ".csv" : ".json");
  const std::string want = read_file(path);
  if (want.empty()) return c.name + ": missing golden file " + path;
  std::string diff;
  if (c.csv) {
    diff = compare_csv(want, r.out, rel);
  } else {
    try {
      diff = compare_json(nlohmann::ordered_json::parse(want), nlohmann::ordered_json::parse(r.out), rel);
    } catch (const std::exception& e) {
      diff = std::string("unparseable report: ") + e.what();
    }
  }
  return diff.empty() ? "" : c.name + ": " + diff;
}

}  // namespace qgeom::testing
