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

#ifndef TVERBERG_ASSIGNMENT_H_
#define TVERBERG_ASSIGNMENT_H_

#include <vector>

#include <Eigen/Core>

#include "tverberg/geometry.h"
#include "tverberg/types.h"

namespace tverberg {

// Entry (i, j) is |red_i - blue_j|^2.
struct CostMatrix {
  Eigen::MatrixXd entries;

  int size() const { return static_cast<int>(entries.rows()); }
  double operator()(int i, int j) const { return entries(i, j); }
};

CostMatrix cost_matrix(const std::vector<Point>& red, const std::vector<Point>& blue);

struct Assignment {
  std::vector<int> permutation;  // row i -> column permutation[i]
  double value = 0.0;            // sum of costs(i, permutation[i]) in row order
};

// Exact maximizer of sum_i costs(i, sigma(i)) by the Hungarian method on
// negated costs. Among maximizers (reduced cost zero within 1e-9 relative)
// the lexicographically smallest permutation is returned.
Assignment max_weight_assignment(const CostMatrix& costs);

// Q(M): sum of squared red-blue edge lengths.
double q_value(const PointSet& points, const Matching& matching);

// True when no exchange of partners between two edges increases Q by more
// than rel_tol * (1 + Q).
bool two_swap_optimal(const PointSet& points, const Matching& matching,
                      double rel_tol = 1e-12);

struct RedBlueMatchingResult {
  Matching matching;  // edges (red index, blue index) into the point set
  Witness witness;
  double q = 0.0;
  int exchanges = 0;  // backstop swaps applied after the exact assignment
};

// Q-maximal perfect red-blue matching and its power center.
RedBlueMatchingResult redblue_tverberg_matching(const PointSet& points);

}  // namespace tverberg

#endif  // TVERBERG_ASSIGNMENT_H_
