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

#ifndef TVERBERG_IO_H_
#define TVERBERG_IO_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tverberg/types.h"

namespace tverberg {

// Point files come in two equivalent forms, chosen by extension:
//
//   text (any extension but .json):
//     dim n
//     x_1 ... x_dim [r|b]      <- one line per point
//
//   JSON (.json):
//     {"dim": 2, "points": [[x, y], ...], "colors": ["r", "b", ...]}
//
// Colors are optional but must be given for all points or none. Blank
// lines and lines starting with '#' are ignored in the text form.
PointSet parse_point_text(std::istream& in);
PointSet parse_point_json(const std::string& text);
PointSet read_point_set(const std::string& path);

// Text form with every coordinate printed to 17 significant digits.
std::string format_point_text(const PointSet& points);
std::string format_point_json(const PointSet& points);

std::string format_double(double v);

// FNV-1a 64 of the canonical text form, as 16 hex digits.
std::string instance_digest(const PointSet& points);

// Graph files: either a run report / JSON object with an "edges" array of
// index pairs (a "cycle" array is accepted instead), or text with one
// "i j" pair per line.
struct GraphFile {
  std::vector<Edge> edges;
  std::vector<int> cycle;
};
GraphFile parse_graph_text(std::istream& in);
GraphFile read_graph(const std::string& path);

struct RunReport {
  std::string command;
  std::string digest;
  BallMode mode = BallMode::kClosed;
  bool success = false;
  std::vector<Edge> edges;
  std::optional<std::vector<int>> cycle;
  Witness witness;
  std::optional<int> iterations;
  std::optional<int> attempts;
  std::optional<double> alpha;
  std::optional<int> construction_case;
  // The point produced by the constructor itself, when it differs from the
  // verified power center reported in `witness`.
  std::optional<Witness> construction_witness;
  bool boundary = false;
  double wall_time_ms = 0.0;
};

// One JSON object. wall_time_ms comes last and is omitted when `with_time`
// is false.
std::string format_report(const RunReport& report, bool with_time = true);

}  // namespace tverberg

#endif  // TVERBERG_IO_H_
