// Copyright 2026 The Tverberg Graphs Authors.
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

// Command-line frontend for the Tverberg graph constructors.
//
// Exit status: 0 success, 1 usage / parse / input error, 2 the requested
// intersection could not be certified.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "tverberg/assignment.h"
#include "tverberg/geometry.h"
#include "tverberg/io.h"
#include "tverberg/obtuse_descent.h"
#include "tverberg/oracle.h"
#include "tverberg/planar.h"
#include "tverberg/svg.h"

namespace {

using namespace tverberg;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitFailed = 2;

struct Options {
  std::string input;
  std::string graph;
  std::string svg;
  std::string trace;
  std::string output;
  std::string mode;
  std::uint64_t seed = 0;
  double tol = kEpsEval;
  // gen
  int dim = 2;
  int n = 10;
  std::string dist = "cube";
  std::string colors = "none";
  double noise = 0.0;
};

BallMode parse_mode(const std::string& s, BallMode fallback) {
  if (s.empty()) return fallback;
  if (s == "closed") return BallMode::kClosed;
  if (s == "open") return BallMode::kOpen;
  throw InvalidInput("mode must be 'closed' or 'open'");
}

std::string json_edges(const std::vector<Edge>& edges) {
  nlohmann::json a = nlohmann::json::array();
  for (const Edge& e : edges) a.push_back({e.i, e.j});
  return a.dump();
}

std::string step_line(const DescentStep& s) {
  std::string out = "{\"step\": " + std::to_string(s.step) +
                    ", \"value_before\": " + format_double(s.value_before) +
                    ", \"value_after\": " + format_double(s.next.witness.value) +
                    ", \"tight_count\": " + std::to_string(s.next.tight_count) +
                    ", \"components\": " + std::to_string(s.components) +
                    ", \"support\": " + json_edges(s.support) +
                    ", \"red\": " + json_edges(s.red) +
                    ", \"blue\": " + json_edges(s.blue) + "}\n";
  return out;
}

// Fills the verified witness and the success flag, returning the exit code.
int finish(RunReport& report, const PointSet& points, double tol) {
  Verification v = verify_tverberg(points, report.edges, report.mode, tol);
  report.witness = v.witness;
  report.success = v.intersects;
  if (report.mode == BallMode::kOpen && !v.intersects &&
      std::abs(v.witness.value) <= tol) {
    report.boundary = true;
  }
  return v.intersects ? kExitOk : kExitFailed;
}

class Timer {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void emit(RunReport& report, const Timer& timer) {
  report.wall_time_ms = timer.ms();
  std::cout << format_report(report);
}

int cmd_cycle2d(const Options& o) {
  Timer timer;
  PointSet points = read_point_set(o.input);
  if (points.dim != 2) throw InvalidInput("cycle2d needs planar input");
  if (points.size() < 3) throw InvalidInput("cycle2d needs at least 3 points");
  CycleResult r = build_tverberg_cycle(points, o.seed);
  RunReport report;
  report.command = "cycle2d";
  report.digest = instance_digest(points);
  report.mode = BallMode::kClosed;
  report.edges = r.cycle.edges();
  report.cycle = r.cycle.order;
  report.attempts = r.attempts;
  report.construction_case = r.construction_case;
  report.construction_witness = r.witness;
  int code = finish(report, points, o.tol);
  if (!o.svg.empty()) write_svg(o.svg, points, report.edges, r.witness);
  emit(report, timer);
  return code;
}

int cmd_match2d_rb(const Options& o) {
  Timer timer;
  PointSet points = read_point_set(o.input);
  if (points.dim != 2) throw InvalidInput("match2d-rb needs planar input");
  if (!points.colors) throw InvalidInput("match2d-rb needs colored points");
  RedBlueResult r = build_redblue_matching_2d(points, o.seed);
  RunReport report;
  report.command = "match2d-rb";
  report.digest = instance_digest(points);
  report.mode = parse_mode(o.mode, BallMode::kClosed);
  report.edges = r.matching;
  report.attempts = r.attempts;
  report.alpha = r.alpha;
  report.construction_witness = r.witness;
  int code = finish(report, points, o.tol);
  if (!o.svg.empty()) write_svg(o.svg, points, report.edges, r.witness);
  emit(report, timer);
  return code;
}

int cmd_match_dd(const Options& o) {
  Timer timer;
  PointSet points = read_point_set(o.input);
  BallMode mode = parse_mode(o.mode, BallMode::kOpen);
  std::unique_ptr<std::ofstream> trace;
  TraceSink sink;
  if (!o.trace.empty()) {
    trace = std::make_unique<std::ofstream>(o.trace, std::ios::binary);
    if (!*trace) throw InvalidInput("cannot write " + o.trace);
    sink = [&trace](const DescentStep& s) { *trace << step_line(s); };
  }
  OpenMatchingResult r = open_tverberg_matching(points, o.seed, o.tol, sink);
  RunReport report;
  report.command = "match-dd";
  report.digest = instance_digest(points);
  report.mode = mode;
  report.edges = r.matching;
  report.iterations = r.iterations;
  int code = finish(report, points, o.tol);
  report.boundary = report.boundary || r.boundary;
  if (!o.svg.empty()) write_svg(o.svg, points, report.edges, report.witness);
  emit(report, timer);
  return code;
}

int cmd_match_dd_rb(const Options& o) {
  Timer timer;
  PointSet points = read_point_set(o.input);
  if (!points.colors) throw InvalidInput("match-dd-rb needs colored points");
  RedBlueMatchingResult r = redblue_tverberg_matching(points);
  RunReport report;
  report.command = "match-dd-rb";
  report.digest = instance_digest(points);
  report.mode = parse_mode(o.mode, BallMode::kClosed);
  report.edges = r.matching;
  report.iterations = r.exchanges;
  int code = finish(report, points, o.tol);
  if (!o.svg.empty()) write_svg(o.svg, points, report.edges, report.witness);
  emit(report, timer);
  return code;
}

int cmd_verify(const Options& o) {
  Timer timer;
  PointSet points = read_point_set(o.input);
  GraphFile g = read_graph(o.graph);
  check_edges(points, g.edges);
  RunReport report;
  report.command = "verify";
  report.digest = instance_digest(points);
  report.mode = parse_mode(o.mode, BallMode::kClosed);
  report.edges = g.edges;
  if (!g.cycle.empty()) report.cycle = g.cycle;
  int code = finish(report, points, o.tol);
  if (!o.svg.empty()) write_svg(o.svg, points, report.edges, report.witness);
  emit(report, timer);
  return code;
}

int cmd_gen(const Options& o) {
  InstanceSpec spec;
  spec.dim = o.dim;
  spec.n = o.n;
  spec.seed = o.seed;
  spec.distribution = parse_distribution(o.dist);
  spec.noise = o.noise;
  if (o.colors == "rb") {
    spec.colors = ColorMode::kRedBlue;
  } else if (o.colors != "none") {
    throw InvalidInput("colors must be 'none' or 'rb'");
  }
  PointSet points = generate(spec);
  bool as_json = o.output.size() >= 5 &&
                 o.output.compare(o.output.size() - 5, 5, ".json") == 0;
  std::string text = as_json ? format_point_json(points) : format_point_text(points);
  if (o.output.empty() || o.output == "-") {
    std::cout << text;
  } else {
    std::ofstream out(o.output, std::ios::binary);
    if (!out) throw InvalidInput("cannot write " + o.output);
    out << text;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tverberg cycles and matchings with verified witnesses"};
  app.require_subcommand(1);
  Options o;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", o.input, "point file (text, or .json)")->required();
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "perturbation / tie-break seed");
    sub->add_option("--tol", o.tol, "verification tolerance");
    sub->add_option("--svg", o.svg, "write an SVG drawing (planar input)");
  };

  CLI::App* cycle = app.add_subcommand("cycle2d", "Tverberg cycle in the plane");
  add_input(cycle);
  add_common(cycle);

  CLI::App* rb2 = app.add_subcommand("match2d-rb", "planar red-blue Tverberg matching");
  add_input(rb2);
  add_common(rb2);
  rb2->add_option("--mode", o.mode, "closed|open");

  CLI::App* dd = app.add_subcommand("match-dd", "open Tverberg matching in any dimension");
  add_input(dd);
  add_common(dd);
  dd->add_option("--mode", o.mode, "closed|open (default open)");
  dd->add_option("--trace", o.trace, "write descent steps as JSON lines");

  CLI::App* ddrb = app.add_subcommand("match-dd-rb", "red-blue Tverberg matching in any dimension");
  add_input(ddrb);
  add_common(ddrb);
  ddrb->add_option("--mode", o.mode, "closed|open");

  CLI::App* verify = app.add_subcommand("verify", "check a graph file against a point file");
  add_input(verify);
  verify->add_option("graph", o.graph, "report JSON or 'i j' edge list")->required();
  verify->add_option("--mode", o.mode, "closed|open");
  verify->add_option("--tol", o.tol, "verification tolerance");
  verify->add_option("--svg", o.svg, "write an SVG drawing (planar input)");

  CLI::App* gen = app.add_subcommand("gen", "write a seeded random instance");
  gen->add_option("--dim", o.dim, "dimension");
  gen->add_option("--n", o.n, "number of points");
  gen->add_option("--seed", o.seed, "seed");
  gen->add_option("--dist", o.dist, "cube|sphere|collinear");
  gen->add_option("--noise", o.noise, "jitter for collinear instances");
  gen->add_option("--colors", o.colors, "none|rb");
  gen->add_option("-o,--output", o.output, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*cycle) return cmd_cycle2d(o);
    if (*rb2) return cmd_match2d_rb(o);
    if (*dd) return cmd_match_dd(o);
    if (*ddrb) return cmd_match_dd_rb(o);
    if (*verify) return cmd_verify(o);
    if (*gen) return cmd_gen(o);
  } catch (const InvalidInput& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInput;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "failed: %s\n", e.what());
    return kExitFailed;
  }
  return kExitInput;
}
