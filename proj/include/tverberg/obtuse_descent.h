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

#ifndef TVERBERG_OBTUSE_DESCENT_H_
#define TVERBERG_OBTUSE_DESCENT_H_

#include <cstdint>
#include <functional>
#include <vector>

#include "tverberg/geometry.h"
#include "tverberg/types.h"

namespace tverberg {

// Graph on a dependent point set (translated so that the relevant
// minimizer is the origin) joining u and w iff <u, w> < -eps_neg.
struct ObtuseGraph {
  std::vector<Point> vertices;
  std::vector<Edge> adjacency;
  std::vector<int> component;  // component id per vertex
  std::vector<std::vector<int>> components;

  int num_components() const { return static_cast<int>(components.size()); }
  std::vector<int> isolated() const;
};

// Dependence of `translated_points` is the caller's responsibility.
ObtuseGraph build_obtuse_graph(std::vector<Point> translated_points,
                               double eps_neg = kEpsNeg);

// Star from a hub vertex v_1 (the vertex at the origin if there is one,
// else vertex 0) to one vertex of every other component, avoiding pairs in
// `blue`. Throws InvariantViolation if a star pair is not orthogonal within
// eps_neg or a component offers no admissible vertex.
std::vector<Edge> star_edges(const ObtuseGraph& graph, const Matching& blue,
                             double eps_neg = kEpsNeg);

struct AlternatingCycle {
  std::vector<Edge> red;
  std::vector<Edge> blue;
  std::vector<int> walk;  // vertices in cycle order, starting with a blue edge
};

// A cycle alternating between edges of the perfect matching `blue` and
// edges of `red`, found by exhaustive lowest-index-first search over
// alternating paths. Throws InvalidInput if red and blue share an edge and
// InvariantViolation if no alternating cycle exists.
AlternatingCycle alternating_cycle(const Matching& blue, const std::vector<Edge>& red);

struct DescentState {
  Matching matching;
  Witness witness;  // power center of `matching`
  int tight_count = 0;
};

DescentState make_descent_state(const PointSet& points, Matching matching);

// Everything one descent step touched, for tracing.
struct DescentStep {
  int step = 0;
  double value_before = 0.0;
  int tight_before = 0;
  DescentState next;
  std::vector<Edge> support;  // pairs carrying the convex certificate
  std::vector<Edge> red;      // edges swapped in
  std::vector<Edge> blue;     // edges swapped out
  int components = 0;
};

// One alternating-cycle exchange. Requires witness value >= -tol. The new
// state satisfies P' < P - kEpsProg, or |P' - P| <= kEpsProg with fewer
// tight pairs; anything else throws InvariantViolation.
DescentState descent_step(const PointSet& points, const DescentState& state,
                          double tol = 1e-12, DescentStep* record = nullptr);

// Deterministic greedy matching: pairs taken by increasing length, ties
// broken by a seeded shuffle.
Matching greedy_matching(const PointSet& points, std::uint64_t seed);

struct OpenMatchingResult {
  Matching matching;
  Witness witness;  // on original coordinates
  int iterations = 0;
  bool boundary = false;  // strict negativity could not be certified
};

using TraceSink = std::function<void(const DescentStep&)>;

// Perfect matching of an even set of distinct points whose open diameter
// balls share the witness. The search runs on a copy scaled into the unit
// box; the result is re-verified on the original coordinates.
OpenMatchingResult open_tverberg_matching(const PointSet& points,
                                          std::uint64_t seed, double tol = 1e-12,
                                          const TraceSink& trace = {});

}  // namespace tverberg

#endif  // TVERBERG_OBTUSE_DESCENT_H_
