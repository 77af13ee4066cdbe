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

#ifndef TVERBERG_ORACLE_H_
#define TVERBERG_ORACLE_H_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "tverberg/assignment.h"
#include "tverberg/geometry.h"
#include "tverberg/random.h"
#include "tverberg/types.h"

namespace tverberg {

// Brute-force ground truth and seeded instances for small problems. Nothing
// here shares a code path with the constructors it is used to check, except
// that brute_force_best(kMinimaxH) scores candidates with power_center.

enum class Distribution { kUnitCube, kUnitSphere, kCollinear };
enum class ColorMode { kNone, kRedBlue };

struct InstanceSpec {
  int dim = 2;
  int n = 4;
  ColorMode colors = ColorMode::kNone;
  std::uint64_t seed = 0;
  Distribution distribution = Distribution::kUnitCube;
  double noise = 0.0;  // collinear only: uniform jitter amplitude per coordinate
};

Distribution parse_distribution(const std::string& name);

// Deterministic for a given spec. Red-blue mode colors even positions red
// and odd positions blue.
PointSet generate(const InstanceSpec& spec);

// All (n - 1)!! perfect matchings of {0..n-1}: the lowest free vertex is
// paired with each later free vertex in increasing order.
void for_each_perfect_matching(int n, const std::function<void(const Matching&)>& visit);
std::vector<Matching> enumerate_perfect_matchings(int n);

enum class Objective { kMinimaxH, kMaxQ };
enum class Structure { kMatching, kRedBlueMatching, kCycle };

struct BruteForceResult {
  std::vector<Edge> edges;
  std::vector<int> order;  // cycles only
  double value = 0.0;
};

// Exhaustive optimum (minimum of min-H, maximum of Q = sum of squared edge
// lengths); the first candidate in enumeration order wins ties.
BruteForceResult brute_force_best(const PointSet& points, Objective objective,
                                  Structure structure);

// Factorial enumeration in lexicographic order; ties keep the earliest.
Assignment brute_force_assignment(const CostMatrix& costs);

bool two_ball_intersect(const Ball& b1, const Ball& b2, BallMode mode);

struct GridMinimum {
  Point x;
  double value = 0.0;
};

// Minimizes H for d <= 2 by a dense grid over the midpoint bounding box
// followed by nested ternary searches with `rounds` iterations per level.
GridMinimum grid_minimize_h(const PointSet& points, const std::vector<Edge>& edges,
                            int grid = 201, int rounds = 100);

// k Gaussian points followed by minus a positive combination of them, so
// the k + 1 points are dependent.
std::vector<Point> dependent_set(Rng& rng, int k, int dim);

}  // namespace tverberg

#endif  // TVERBERG_ORACLE_H_
