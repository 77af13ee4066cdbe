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

#include "tverberg/assignment.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace tverberg {
namespace {

// Kuhn's augmenting-path matching on the tight subgraph, honoring rows
// already fixed in `col_of_row` (-1 = free).
class TightMatcher {
 public:
  explicit TightMatcher(const std::vector<std::vector<int>>& tight) : tight_(tight) {}

  bool completes(const std::vector<int>& col_of_row) {
    const int n = static_cast<int>(tight_.size());
    row_of_col_.assign(n, -1);
    std::vector<char> fixed_col(n, 0);
    for (int i = 0; i < n; ++i) {
      if (col_of_row[i] >= 0) fixed_col[col_of_row[i]] = 1;
    }
    fixed_col_ = fixed_col;
    for (int i = 0; i < n; ++i) {
      if (col_of_row[i] >= 0) continue;
      seen_.assign(n, 0);
      if (!augment(i)) return false;
    }
    return true;
  }

 private:
  bool augment(int row) {
    for (int j : tight_[row]) {
      if (fixed_col_[j] || seen_[j]) continue;
      seen_[j] = 1;
      if (row_of_col_[j] < 0 || augment(row_of_col_[j])) {
        row_of_col_[j] = row;
        return true;
      }
    }
    return false;
  }

  const std::vector<std::vector<int>>& tight_;
  std::vector<int> row_of_col_;
  std::vector<char> fixed_col_;
  std::vector<char> seen_;
};

}  // namespace

CostMatrix cost_matrix(const std::vector<Point>& red, const std::vector<Point>& blue) {
  if (red.size() != blue.size()) throw InvalidInput("red and blue counts differ");
  const int n = static_cast<int>(red.size());
  CostMatrix out{Eigen::MatrixXd(n, n)};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (red[i].size() != blue[j].size()) throw InvalidInput("dimension mismatch");
      out.entries(i, j) = (red[i] - blue[j]).squaredNorm();
    }
  }
  return out;
}

Assignment max_weight_assignment(const CostMatrix& costs) {
  const int n = costs.size();
  if (costs.entries.cols() != n) throw InvalidInput("cost matrix must be square");
  if (!costs.entries.allFinite()) throw InvalidInput("cost matrix has non-finite entries");
  Assignment out;
  if (n == 0) return out;

  // Hungarian method (potentials form) minimizing a = -costs, 1-based.
  const double inf = std::numeric_limits<double>::infinity();
  auto a = [&](int i, int j) { return -costs(i - 1, j - 1); };
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      const int i0 = p[j0];
      double delta = inf;
      int j1 = 0;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = a(i0, j) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  // Every maximizer is a perfect matching on zero reduced-cost entries of
  // this dual, so the lexicographically smallest one is found greedily.
  const double rc_tol = 1e-9 * (1.0 + costs.entries.cwiseAbs().maxCoeff());
  std::vector<std::vector<int>> tight(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (a(i, j) - u[i] - v[j] <= rc_tol) tight[i - 1].push_back(j - 1);
    }
  }
  TightMatcher matcher(tight);
  std::vector<int> col_of_row(n, -1);
  std::vector<char> col_used(n, 0);
  for (int i = 0; i < n; ++i) {
    bool placed = false;
    for (int j : tight[i]) {
      if (col_used[j]) continue;
      col_of_row[i] = j;
      if (matcher.completes(col_of_row)) {
        col_used[j] = 1;
        placed = true;
        break;
      }
      col_of_row[i] = -1;
    }
    if (!placed) throw InvariantViolation("max_weight_assignment: tight graph lost its matching");
  }
  out.permutation = std::move(col_of_row);
  for (int i = 0; i < n; ++i) out.value += costs(i, out.permutation[i]);
  return out;
}

double q_value(const PointSet& points, const Matching& matching) {
  double q = 0.0;
  for (const Edge& e : matching) q += (points[e.i] - points[e.j]).squaredNorm();
  return q;
}

bool two_swap_optimal(const PointSet& points, const Matching& matching, double rel_tol) {
  const double band = rel_tol * (1.0 + q_value(points, matching));
  const int m = static_cast<int>(matching.size());
  for (int s = 0; s < m; ++s) {
    for (int t = s + 1; t < m; ++t) {
      const Point& r1 = points[matching[s].i];
      const Point& b1 = points[matching[s].j];
      const Point& r2 = points[matching[t].i];
      const Point& b2 = points[matching[t].j];
      const double gain = (r1 - b2).squaredNorm() + (r2 - b1).squaredNorm() -
                          (r1 - b1).squaredNorm() - (r2 - b2).squaredNorm();
      if (gain > band) return false;
    }
  }
  return true;
}

RedBlueMatchingResult redblue_tverberg_matching(const PointSet& points) {
  points.validate();
  points.require_balanced_colors();
  const auto red_idx = points.indices_of(Color::kRed);
  const auto blue_idx = points.indices_of(Color::kBlue);
  const int n = static_cast<int>(red_idx.size());
  if (n < 1) throw InvalidInput("need at least one red and one blue point");

  std::vector<Point> red, blue;
  for (int i : red_idx) red.push_back(points[i]);
  for (int i : blue_idx) blue.push_back(points[i]);
  const Assignment best = max_weight_assignment(cost_matrix(red, blue));

  RedBlueMatchingResult out;
  for (int i = 0; i < n; ++i) out.matching.push_back({red_idx[i], blue_idx[best.permutation[i]]});
  out.witness = power_center(points, out.matching);

  // Backstop mirroring the existence proof: while the power center lies
  // outside some disk, some pair of tight edges gains by exchanging
  // partners, and the exchange strictly increases Q.
  while (out.witness.value > kEpsEval) {
    if (out.exchanges >= n * n) {
      throw InvariantViolation("redblue_tverberg_matching: exchange loop exceeded n^2 steps");
    }
    const Point& x = out.witness.x;
    auto term = [&](int r, int b) { return (points[r] - x).dot(points[b] - x); };
    bool swapped = false;
    const auto& tight = out.witness.tight;
    for (size_t s = 0; s < tight.size() && !swapped; ++s) {
      for (size_t t = s + 1; t < tight.size() && !swapped; ++t) {
        Edge& e = out.matching[tight[s]];
        Edge& f = out.matching[tight[t]];
        if (term(e.i, f.j) + term(f.i, e.j) < term(e.i, e.j) + term(f.i, f.j)) {
          std::swap(e.j, f.j);
          swapped = true;
        }
      }
    }
    if (!swapped) {
      throw InvariantViolation("redblue_tverberg_matching: no improving exchange");
    }
    ++out.exchanges;
    out.witness = power_center(points, out.matching);
  }
  out.q = q_value(points, out.matching);
  return out;
}

}  // namespace tverberg
