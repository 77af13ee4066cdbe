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

#ifndef TVERBERG_TYPES_H_
#define TVERBERG_TYPES_H_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace tverberg {

// A point in R^d. All coordinates must be finite.
using Point = Eigen::VectorXd;

enum class Color : std::uint8_t { kRed, kBlue };

// Whether diameter balls are taken closed or open.
enum class BallMode : std::uint8_t { kClosed, kOpen };

// Numerical tolerances shared by all constructions. Values are absolute
// unless stated otherwise; the descent and planar constructors normalize
// their input to a unit bounding box (or re-verify on the originals) so
// that these bands are meaningful.
inline constexpr double kEpsEval = 1e-9;
inline constexpr double kEpsTight = 1e-7;  // relative to 1 + |value|
inline constexpr double kEpsSupport = 1e-9;
inline constexpr double kSolverTol = 1e-10;
inline constexpr double kEpsNeg = 1e-9;
inline constexpr double kEpsProg = 1e-10;

// Caller supplied malformed data (dimension mismatch, duplicate points...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A property the theory guarantees did not hold numerically.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The current coordinates are not in general position; callers re-perturb.
class GeneralPositionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A bounded retry or iteration loop ran out of budget.
class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PointSet {
  int dim = 0;
  std::vector<Point> points;
  std::optional<std::vector<Color>> colors;

  int size() const { return static_cast<int>(points.size()); }
  const Point& operator[](int i) const { return points[i]; }

  // Index lists by color, in input order. Empty when uncolored.
  std::vector<int> indices_of(Color c) const;

  // Throws InvalidInput unless every point has `dim` finite coordinates and
  // the color list (if any) has one entry per point.
  void validate() const;

  // Throws InvalidInput("points must be distinct") on any exact duplicate.
  void require_distinct() const;

  // Throws InvalidInput unless colored with equally many red and blue points.
  void require_balanced_colors() const;
};

PointSet make_point_set(const std::vector<std::vector<double>>& coords,
                        std::optional<std::vector<Color>> colors = {});

struct Edge {
  int i = 0;
  int j = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Edge with endpoints ordered i < j.
inline Edge canonical(Edge e) { return e.i < e.j ? e : Edge{e.j, e.i}; }

using Matching = std::vector<Edge>;

struct Cycle {
  std::vector<int> order;

  // Consecutive pairs of `order`, closing back to the first vertex.
  std::vector<Edge> edges() const;
};

struct Ball {
  Point center;
  double radius = 0.0;
};

// Candidate common point of all diameter balls of an edge set, with the
// minimax value max_e <a_e - x, b_e - x> and the edges attaining it.
struct Witness {
  Point x;
  double value = 0.0;
  std::vector<int> tight;
};

// Throws InvalidInput when `edges` is empty, an index is out of range or an
// edge is a loop.
void check_edges(const PointSet& points, const std::vector<Edge>& edges);

// Throws InvalidInput unless `edges` is a perfect matching of all points.
void check_perfect_matching(const PointSet& points, const Matching& edges);

}  // namespace tverberg

#endif  // TVERBERG_TYPES_H_
