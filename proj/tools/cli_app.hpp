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

// Command-line front end. Exposed as a function so that tests can drive it
// in-process as well as through the installed binary.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qgeom/io.hpp"
#include "qgeom/qgeom.hpp"
#include "qgeom/report.hpp"

namespace qgeom::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kParse = 2,
  kDomain = 3,
  kNumerical = 4,
  kCatFail = 5,
};

inline std::vector<double> parse_list(const std::string& text, const std::string& flag) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  std::size_t field = 0;
  while (std::getline(ss, item, ',')) {
    ++field;
    double v = 0.0;
    if (!detail::parse_number(detail::trim(item), v)) {
      std::ostringstream os;
      os << flag << ": field " << field << " ('" << item << "') is not a number";
      throw ParseError(os.str());
    }
    out.push_back(v);
  }
  if (out.empty()) throw ParseError(flag + ": empty list");
  return out;
}

inline ReportValue json_vector(const std::vector<double>& v) {
  ReportValue arr = ReportValue::array();
  for (double x : v) arr.push_back(x);
  return arr;
}

/// Finite doubles as numbers, anything else as null.
inline ReportValue num(double v) { return std::isfinite(v) ? ReportValue(v) : ReportValue(); }

struct Output {
  std::string format = "json";
  std::string path;
};

// ---------------------------------------------------------------- entropy

struct EntropyArgs {
  double q = 1.0;
  std::string dist;
  std::string density;
  std::string dist_format = "auto";
  std::string with;
  double quad_tol = 1e-8;
};

/// "normal:SIGMA", "uniform:A:B" or "exponential:RATE".
inline DensityFunction parse_density(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  auto arg = [&](std::size_t i) {
    if (i >= parts.size()) throw ParseError("--density " + spec + ": missing parameter " + std::to_string(i));
    double v = 0.0;
    if (!detail::parse_number(parts[i], v)) throw ParseError("--density: '" + parts[i] + "' is not a number");
    return v;
  };
  const std::string kind = parts.empty() ? "" : parts[0];
  if (kind == "normal") {
    const double sigma = arg(1);
    if (!(sigma > 0.0)) throw DomainError("normal density needs sigma > 0");
    const double c = 1.0 / (sigma * std::sqrt(2.0 * std::numbers::pi));
    return {[sigma, c](double x) { return c * std::exp(-0.5 * (x / sigma) * (x / sigma)); }, -12.0 * sigma,
            12.0 * sigma};
  }
  if (kind == "uniform") {
    const double a = arg(1), b = arg(2);
    if (!(a < b)) throw DomainError("uniform density needs a < b");
    return {[a, b](double) { return 1.0 / (b - a); }, a, b};
  }
  if (kind == "exponential") {
    const double rate = arg(1);
    if (!(rate > 0.0)) throw DomainError("exponential density needs rate > 0");
    return {[rate](double x) { return rate * std::exp(-rate * x); }, 0.0, 60.0 / rate};
  }
  throw ParseError("--density: unknown family '" + kind + "' (normal, uniform, exponential)");
}

inline Report run_entropy(const EntropyArgs& a) {
  const QParam p(a.q);
  Report r("entropy");
  r["q"] = a.q;
  if (!a.density.empty()) {
    const DensityFunction f = parse_density(a.density);
    r["density"] = a.density;
    r["support"] = json_vector({f.lower(), f.upper()});
    r["tsallis_entropy"] = tsallis_continuous(p, f, a.quad_tol);
    return r;
  }
  const auto fmt = parse_input_format(a.dist_format);
  const DiscreteDistribution d = ingest_distribution(a.dist, fmt);
  r["input"] = std::filesystem::path(a.dist).filename().string();
  r["support_size"] = d.size();
  r["tsallis_entropy"] = tsallis_discrete(p, d);
  r["bgs_entropy"] = bgs_entropy(d);
  const bool positive = std::all_of(d.probs().begin(), d.probs().end(), [](double x) { return x > 0.0; });
  r["q_log_residual"] = positive ? ReportValue(q_log_representation_residual(p, d)) : ReportValue();
  if (!a.with.empty()) {
    const DiscreteDistribution b = ingest_distribution(a.with, fmt);
    const double sa = tsallis_discrete(p, d), sb = tsallis_discrete(p, b);
    ReportValue c = ReportValue::object();
    c["input"] = std::filesystem::path(a.with).filename().string();
    c["entropy_a"] = sa;
    c["entropy_b"] = sb;
    c["entropy_product"] = tsallis_discrete(p, product_distribution(d, b));
    c["q_sum"] = q_add(p, sa, sb);
    c["residual"] = check_composition(p, d, b);
    r["composition"] = std::move(c);
  }
  return r;
}

// ---------------------------------------------------------------- qeval

struct QevalArgs {
  double q = 1.0;
  std::string op = "tau";
  std::string x;
  std::optional<double> y;
};

inline double evaluate_op(const QParam& p, const std::string& op, double x, std::optional<double> y) {
  auto need_y = [&]() {
    if (!y) throw ParseError("--op " + op + " needs --y");
    return *y;
  };
  if (op == "tau") return tau(p, x).value();
  if (op == "tau-inv") return tau_inv(p, x);
  if (op == "add") return q_add(p, x, need_y());
  if (op == "sub") return q_sub(p, x, need_y());
  if (op == "mul") return q_mul(p, x, need_y());
  if (op == "div") return q_div(p, x, need_y());
  if (op == "log") return q_log(p, x);
  if (op == "deformed-distance") return deformed_distance(p, x);
  throw ParseError("unknown --op '" + op + "'");
}

inline Report run_qeval(const QevalArgs& a) {
  const QParam p(a.q);
  Report r("qeval");
  r["q"] = a.q;
  r["t"] = p.t();
  r["op"] = a.op;
  r["y"] = a.y ? ReportValue(*a.y) : ReportValue();
  r.set_table("values", {"x", "result"});
  const auto xs = parse_list(a.x, "--x");
  for (double x : xs) r.add_row({x, evaluate_op(p, a.op, x, a.y)});
  if (xs.size() == 1) r["result"] = evaluate_op(p, a.op, xs[0], a.y);
  return r;
}

// ---------------------------------------------------------------- curvature

struct CurvatureArgs {
  double q = 0.0;
  std::optional<double> q2;
  std::string metric = "tsallis";
  std::size_t fiber_dim = 1;
  std::string mode = "all";
  std::string at;
  std::string plane = "0,1";
  double step = 1e-3;
  std::string radii = "0.4,0.2,0.1";
};

inline WarpedMetric make_metric(const std::string& name, double q, std::optional<double> q2, std::size_t fiber_dim) {
  if (name == "tsallis") return WarpedMetric::tsallis(QParam(q), fiber_dim);
  if (name == "double-exp") return WarpedMetric::double_exponential(QParam(q), QParam(q2.value_or(q)));
  if (name == "cosh") return WarpedMetric::convex_double(Warp::hyperbolic_cosine(), Warp::cosh_product());
  throw ParseError("unknown --metric '" + name + "' (tsallis, double-exp, cosh)");
}

inline Report run_curvature(const CurvatureArgs& a) {
  const WarpedMetric m = make_metric(a.metric, a.q, a.q2, a.fiber_dim);
  const std::size_t n = m.dim();
  std::vector<double> at = a.at.empty() ? std::vector<double>(n, 0.0) : parse_list(a.at, "--at");
  m.require_dim(at);
  const auto plane = parse_list(a.plane, "--plane");
  if (plane.size() != 2 || plane[0] < 0 || plane[1] < 0 || plane[0] >= static_cast<double>(n) ||
      plane[1] >= static_cast<double>(n) || plane[0] == plane[1] || plane[0] != std::floor(plane[0]) ||
      plane[1] != std::floor(plane[1])) {
    throw ParseError("--plane: expected two distinct axis indices below " + std::to_string(n));
  }
  const auto i = static_cast<std::size_t>(plane[0]), j = static_cast<std::size_t>(plane[1]);
  std::vector<double> u(n, 0.0), v(n, 0.0);
  u[i] = 1.0;
  v[j] = 1.0;
  const bool all = a.mode == "all";
  if (!all && a.mode != "analytic" && a.mode != "numeric" && a.mode != "bdp") {
    throw ParseError("unknown --mode '" + a.mode + "' (analytic, numeric, bdp, all)");
  }

  Report r("curvature");
  r["metric"] = to_string(m.kind());
  r["q"] = a.q;
  if (a.metric == "double-exp") r["q2"] = a.q2.value_or(a.q);
  r["dim"] = n;
  r["at"] = json_vector(at);
  r["plane"] = ReportValue::array({i, j});
  r["mode"] = a.mode;
  std::optional<double> k;
  if (all || a.mode == "analytic") {
    if (all && a.metric == "cosh") {
      r["analytic"] = ReportValue();
    } else {
      const double val = warped_curvature_analytic(m)(at, i, j);
      r["analytic"] = val;
      k = k.value_or(val);
    }
  }
  if (all || a.mode == "numeric") {
    const double val = sectional_curvature_numeric(m, at, u, v, a.step);
    r["numeric"] = val;
    k = k.value_or(val);
  }
  if (all || a.mode == "bdp") {
    const auto est = bdp_curvature_detail(m, at, u, v, parse_list(a.radii, "--radii"));
    r["bdp"] = est.curvature;
    k = k.value_or(est.curvature);
    r.set_table("disks", {"radius", "area", "raw_curvature"});
    for (std::size_t s = 0; s < est.radii.size(); ++s) {
      r.add_row({est.radii[s], est.areas[s], est.raw_curvatures[s]});
    }
  }
  r["k"] = *k;
  return r;
}

// ---------------------------------------------------------------- geodesic

struct GeodesicArgs {
  double q = 0.0;
  std::string from;
  std::string to;
  std::string method = "both";
  double tol = 1e-10;
  int points = 0;
};

inline Report run_geodesic(const GeodesicArgs& a) {
  const QParam p(a.q);
  const auto from = parse_list(a.from, "--from");
  const auto to = parse_list(a.to, "--to");
  if (from.size() != to.size()) throw ShapeError("--from and --to have different dimensions");
  if (from.size() < 2) throw ShapeError("points need at least two coordinates (base and fiber)");
  const bool closed = a.method == "closed" || a.method == "both";
  const bool numeric = a.method == "numeric" || a.method == "both";
  if (!closed && !numeric) throw ParseError("unknown --method '" + a.method + "' (closed, numeric, both)");
  if (a.points < 0) throw ParseError("--points must be >= 0");

  Report r("geodesic");
  r["q"] = a.q;
  r["t"] = p.t();
  r["from"] = json_vector(from);
  r["to"] = json_vector(to);
  r["method"] = a.method;
  std::optional<GeodesicSolution> sol;
  const WarpedMetric m = WarpedMetric::tsallis(p, from.size() - 1);
  if (closed) r["distance_closed"] = geodesic_distance_closed(p, from, to);
  if (numeric) {
    sol = solve_geodesic(m, from, to, a.tol);
    r["distance_numeric"] = sol->length;
    r["shooting"] = {{"tol", a.tol}, {"residual", sol->residual}, {"iterations", sol->iterations}};
  }
  if (closed && numeric) {
    r["difference"] = std::fabs(r["distance_closed"].get<double>() - sol->length);
  }
  if (a.points > 0) {
    std::vector<std::string> cols{"s"};
    for (std::size_t c = 0; c < from.size(); ++c) cols.push_back("x" + std::to_string(c));
    r.set_table("path", cols);
    for (int k = 0; k <= a.points; ++k) {
      const double s = static_cast<double>(k) / a.points;
      const MetricPoint pt = closed ? geodesic_point_closed(p, from, to, s) : geodesic_point_numeric(m, *sol, s, a.tol);
      std::vector<ReportValue> row{s};
      for (double c : pt) row.emplace_back(c);
      r.add_row(std::move(row));
    }
  }
  return r;
}

// ---------------------------------------------------------------- catk

struct CatkArgs {
  std::string space = "warped";
  double q = 0.0;
  std::size_t fiber_dim = 1;
  std::optional<double> half_width;
  std::string tree;
  double p = 2.0;
  std::size_t dim = 2;
  double k = -1.0;
  int samples = 1000;
  int per_side = 8;
  std::optional<int> search_budget;
  std::uint64_t seed = 1;
  double tol = 1e-7;
  int workers = 1;
};

inline ReportValue witness_json(const CatWitness& w, const std::string& source) {
  ReportValue o = ReportValue::object();
  o["source"] = source;
  o["x"] = json_vector(w.x);
  o["y"] = json_vector(w.y);
  o["z"] = json_vector(w.z);
  o["w"] = json_vector(w.w);
  o["fraction"] = w.fraction;
  o["geodesic_variant"] = w.variant;
  o["sides"] = json_vector({w.a, w.b, w.c});
  o["d_space"] = w.d_space;
  o["d_model"] = w.d_model;
  o["margin"] = w.margin;
  return o;
}

/// Returns the report and whether the verdict is fail.
inline std::pair<Report, bool> run_catk(const CatkArgs& a) {
  GeodesicSpace space;
  if (a.space == "warped") {
    space = warped_hyperbolic_space(QParam(a.q), a.fiber_dim, a.half_width.value_or(3.0));
  } else if (a.space == "warped-numeric") {
    space = warped_geodesic_space(WarpedMetric::tsallis(QParam(a.q), a.fiber_dim), a.half_width.value_or(2.0));
  } else if (a.space == "tree") {
    if (a.tree.empty()) throw ParseError("--space tree needs --tree FILE");
    space = tree_metric(load_tree(a.tree));
  } else if (a.space == "lp") {
    space = lp_space(a.dim, a.p, a.half_width.value_or(10.0));
  } else {
    throw ParseError("unknown --space '" + a.space + "' (warped, warped-numeric, tree, lp)");
  }
  if (a.samples < 1) throw ParseError("--samples must be positive");
  if (a.per_side < 1) throw ParseError("--per-side must be positive");
  const int triangles = std::max(1, a.samples / (3 * a.per_side));
  const CatReport rep = cat_test(space, a.k, triangles, a.per_side, a.seed, a.tol, a.workers);
  const int budget = a.search_budget.value_or(a.samples);
  std::optional<CatWitness> found;
  const bool search = rep.pass && budget > 0;
  if (search) found = counterexample_search(space, a.k, static_cast<std::uint64_t>(budget), a.seed, a.tol);
  const bool fail = !rep.pass || found.has_value();

  Report r("catk");
  r["space"] = space.description;
  if (a.space == "tree") r["tree"] = std::filesystem::path(a.tree).filename().string();
  r["k"] = a.k;
  r["tol"] = a.tol;
  r["seed"] = a.seed;
  r["triangles"] = rep.triangles;
  r["samples"] = rep.samples;
  r["sampling"] = {{"pass", rep.pass}, {"worst_margin", num(rep.worst_margin)}};
  r["search"] = {{"ran", search}, {"budget", search ? budget : 0}, {"found", found.has_value()}};
  r["verdict"] = fail ? "fail" : "pass";
  r["worst_margin"] = num(found ? std::max(found->margin, rep.worst_margin) : rep.worst_margin);
  if (rep.witness) {
    r["witness"] = witness_json(*rep.witness, "sampling");
  } else if (found) {
    r["witness"] = witness_json(*found, "search");
  } else {
    r["witness"] = ReportValue();
  }
  return {std::move(r), fail};
}

// ---------------------------------------------------------------- superstat

struct SuperstatArgs {
  std::string q = "1.5";
  double beta0 = 1.0;
  std::string energy = "1";
  double tol = 1e-8;
};

inline Report run_superstat(const SuperstatArgs& a) {
  const auto qs = parse_list(a.q, "--q");
  const auto es = parse_list(a.energy, "--E");
  Report r("superstat");
  r["beta0"] = a.beta0;
  r["quad_tol"] = a.tol;
  ReportValue dens = ReportValue::array();
  r.set_table("grid", {"q", "E", "integral", "closed_form", "residual"});
  double worst = 0.0;
  for (double q : qs) {
    const SuperstatParams base(q, a.beta0, 0.0);
    const auto mass = integrate_against_density(base, [](double) { return 1.0; }, a.tol);
    const auto mean = integrate_against_density(base, [](double b) { return b; }, a.tol);
    dens.push_back({{"q", q}, {"normalization", mass.value}, {"mean", mean.value}});
    for (double e : es) {
      const auto chk = laplace_check_detail(SuperstatParams(q, a.beta0, e), a.tol);
      worst = std::max(worst, chk.residual);
      r.add_row({q, e, chk.integral, chk.closed_form, chk.residual});
    }
  }
  r["densities"] = std::move(dens);
  r["max_residual"] = worst;
  return r;
}

// ---------------------------------------------------------------- driver

/// Resolves where the report goes: --output (relative paths land in
/// QGEOM_OUTPUT_DIR when set), else QGEOM_OUTPUT_DIR/<command>.<format>,
/// else stdout (empty path).
inline std::string resolve_output(const Output& o, const std::string& command) {
  const char* env = std::getenv("QGEOM_OUTPUT_DIR");
  const std::string dir = env ? env : "";
  if (!o.path.empty()) {
    std::filesystem::path p(o.path);
    if (p.is_relative() && !dir.empty()) p = std::filesystem::path(dir) / p;
    return p.string();
  }
  if (!dir.empty()) return (std::filesystem::path(dir) / (command + "." + o.format)).string();
  return {};
}

inline void emit(const Report& r, const Output& o, const std::string& command, std::ostream& out) {
  const std::string path = resolve_output(o, command);
  std::ostringstream buf;
  if (o.format == "csv") {
    r.write_csv(buf);
  } else {
    r.write_json(buf);
  }
  if (path.empty()) {
    out << buf.str();
    return;
  }
  const auto parent = std::filesystem::path(path).parent_path();
  if (!parent.empty()) std::filesystem::create_directories(parent);
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write report to '" + path + "'");
  f << buf.str();
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Deformed arithmetic, Tsallis entropy, warped hyperbolic geometry and CAT(k) checks", "qgeom"};
  app.set_version_flag("--version", "qgeom 0.1.0");
  app.require_subcommand(1);
  Output output;
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", output.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--output,-o", output.path, "Report file (default: stdout or $QGEOM_OUTPUT_DIR)");
  };

  EntropyArgs ea;
  auto* ent = app.add_subcommand("entropy", "Tsallis entropy of a distribution or density");
  ent->add_option("--q", ea.q, "Entropic index")->required();
  auto* dist_opt = ent->add_option("--dist", ea.dist, "Distribution file (JSON array or CSV column)");
  auto* dens_opt = ent->add_option("--density", ea.density, "normal:SIGMA | uniform:A:B | exponential:RATE");
  dist_opt->excludes(dens_opt);
  ent->add_option("--dist-format", ea.dist_format, "auto, json or csv");
  ent->add_option("--with", ea.with, "Second distribution for the composition check")->needs(dist_opt);
  ent->add_option("--quad-tol", ea.quad_tol, "Quadrature tolerance for densities");
  add_output(ent);

  QevalArgs qa;
  auto* qe = app.add_subcommand("qeval", "Deformed arithmetic");
  qe->add_option("--q", qa.q, "Entropic index")->required();
  qe->add_option("--op", qa.op, "tau, tau-inv, add, sub, mul, div, log, deformed-distance")->required();
  qe->add_option("--x", qa.x, "Operand (comma list for a sweep)")->required();
  qe->add_option("--y", qa.y, "Second operand");
  add_output(qe);

  CurvatureArgs ca;
  auto* cu = app.add_subcommand("curvature", "Sectional curvature of a warped metric");
  cu->add_option("--q", ca.q, "Entropic index of the (first) warp");
  cu->add_option("--q2", ca.q2, "Second entropic index for double-exp");
  cu->add_option("--metric", ca.metric, "tsallis, double-exp or cosh");
  cu->add_option("--fiber-dim", ca.fiber_dim, "Fiber dimension for tsallis");
  cu->add_option("--mode", ca.mode, "analytic, numeric, bdp or all");
  cu->add_option("--at", ca.at, "Point (comma list; default origin)");
  cu->add_option("--plane", ca.plane, "Coordinate plane axes i,j");
  cu->add_option("--step", ca.step, "Finite-difference step for numeric");
  cu->add_option("--radii", ca.radii, "Disk radii for bdp");
  add_output(cu);

  GeodesicArgs ga;
  auto* ge = app.add_subcommand("geodesic", "Geodesic distance on the exponentially warped metric");
  ge->add_option("--q", ga.q, "Entropic index");
  ge->add_option("--from", ga.from, "Start point (comma list)")->required();
  ge->add_option("--to", ga.to, "End point (comma list)")->required();
  ge->add_option("--method", ga.method, "closed, numeric or both");
  ge->add_option("--tol", ga.tol, "Shooting tolerance");
  ge->add_option("--points", ga.points, "Emit N+1 points along the geodesic");
  add_output(ge);

  CatkArgs ka;
  auto* ck = app.add_subcommand("catk", "CAT(k) comparison test with counterexample search");
  ck->add_option("--space", ka.space, "warped, warped-numeric, tree or lp");
  ck->add_option("--q", ka.q, "Entropic index for warped spaces");
  ck->add_option("--fiber-dim", ka.fiber_dim, "Fiber dimension for warped spaces");
  ck->add_option("--half-width", ka.half_width, "Sampling box half-width");
  ck->add_option("--tree", ka.tree, "Tree fixture (JSON adjacency)");
  ck->add_option("--p", ka.p, "Exponent for lp");
  ck->add_option("--dim", ka.dim, "Dimension for lp");
  ck->add_option("--k", ka.k, "Model curvature (< 0)")->required();
  ck->add_option("--samples", ka.samples, "Comparison samples");
  ck->add_option("--per-side", ka.per_side, "Points per triangle side");
  ck->add_option("--search-budget", ka.search_budget, "Search samples after a passing test (default: --samples)");
  ck->add_option("--seed", ka.seed, "Random seed");
  ck->add_option("--tol", ka.tol, "Comparison tolerance");
  ck->add_option("--workers", ka.workers, "Worker threads (results do not depend on it)");
  add_output(ck);

  SuperstatArgs sa;
  auto* ss = app.add_subcommand("superstat", "Laplace transform of the chi-square density vs the q-exponential");
  ss->add_option("--q", sa.q, "Entropic index (> 1; comma list)");
  ss->add_option("--beta0", sa.beta0, "Mean inverse temperature");
  ss->add_option("--E", sa.energy, "Energy (comma list)");
  ss->add_option("--tol", sa.tol, "Quadrature tolerance");
  add_output(ss);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (ent->parsed()) {
      if (ea.dist.empty() && ea.density.empty()) throw ParseError("entropy needs --dist or --density");
      emit(run_entropy(ea), output, "entropy", out);
    } else if (qe->parsed()) {
      emit(run_qeval(qa), output, "qeval", out);
    } else if (cu->parsed()) {
      emit(run_curvature(ca), output, "curvature", out);
    } else if (ge->parsed()) {
      emit(run_geodesic(ga), output, "geodesic", out);
    } else if (ck->parsed()) {
      auto [report, fail] = run_catk(ka);
      emit(report, output, "catk", out);
      if (fail) {
        err << "catk: fail verdict (worst margin " << Report::format_double(report["worst_margin"].get<double>())
            << ")\n";
        return kCatFail;
      }
    } else if (ss->parsed()) {
      emit(run_superstat(sa), output, "superstat", out);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << '\n';
    return kNumerical;
  } catch (const Error& e) {
    err << "domain error: " << e.what() << '\n';
    return kDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kOk;
}

}  // namespace qgeom::cli
