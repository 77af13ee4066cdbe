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

#include "tverberg/types.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace tverberg {

std::vector<int> PointSet::indices_of(Color c) const {
  std::vector<int> out;
  if (!colors) return out;
  for (int i = 0; i < size(); ++i) {
    if ((*colors)[i] == c) out.push_back(i);
  }
  return out;
}

void PointSet::validate() const {
  if (dim < 1) throw InvalidInput("dimension must be positive");
  for (int i = 0; i < size(); ++i) {
    if (points[i].size() != dim) {
      throw InvalidInput("point " + std::to_string(i) + " has " +
                         std::to_string(points[i].size()) +
                         " coordinates, expected " + std::to_string(dim));
    }
    if (!points[i].allFinite()) {
      throw InvalidInput("point " + std::to_string(i) +
                         " has a non-finite coordinate");
    }
  }
  if (colors && static_cast<int>(colors->size()) != size()) {
    throw InvalidInput("color list length does not match point count");
  }
}

void PointSet::require_distinct() const {
  std::vector<int> order(size());
  std::iota(order.begin(), order.end(), 0);
  auto less = [&](int a, int b) {
    return std::lexicographical_compare(
        points[a].data(), points[a].data() + dim, points[b].data(),
        points[b].data() + dim);
  };
  std::sort(order.begin(), order.end(), less);
  for (int k = 1; k < size(); ++k) {
    if (points[order[k - 1]] == points[order[k]]) {
      throw InvalidInput("points must be distinct");
    }
  }
}

void PointSet::require_balanced_colors() const {
  if (!colors) throw InvalidInput("input must be colored red/blue");
  auto red = std::count(colors->begin(), colors->end(), Color::kRed);
  if (2 * red != static_cast<long>(colors->size())) {
    throw InvalidInput("red and blue counts must be equal");
  }
}

PointSet make_point_set(const std::vector<std::vector<double>>& coords,
                        std::optional<std::vector<Color>> colors) {
  PointSet out;
  out.dim = coords.empty() ? 0 : static_cast<int>(coords.front().size());
  out.points.reserve(coords.size());
  for (const auto& c : coords) {
    out.points.push_back(Eigen::Map<const Eigen::VectorXd>(
        c.data(), static_cast<Eigen::Index>(c.size())));
  }
  out.colors = std::move(colors);
  out.validate();
  return out;
}

std::vector<Edge> Cycle::edges() const {
  std::vector<Edge> out;
  const int n = static_cast<int>(order.size());
  out.reserve(order.size());
  for (int k = 0; k < n; ++k) out.push_back({order[k], order[(k + 1) % n]});
  return out;
}

void check_edges(const PointSet& points, const std::vector<Edge>& edges) {
  if (edges.empty()) throw InvalidInput("edge list is empty");
  for (const Edge& e : edges) {
    if (e.i < 0 || e.j < 0 || e.i >= points.size() || e.j >= points.size()) {
      throw InvalidInput("edge index out of range");
    }
    if (e.i == e.j) throw InvalidInput("edge endpoints must differ");
  }
}

void check_perfect_matching(const PointSet& points, const Matching& edges) {
  check_edges(points, edges);
  std::vector<char> seen(points.size(), 0);
  for (const Edge& e : edges) {
    if (seen[e.i] || seen[e.j]) {
      throw InvalidInput("matching edges share an endpoint");
    }
    seen[e.i] = seen[e.j] = 1;
  }
  if (2 * static_cast<int>(edges.size()) != points.size()) {
    throw InvalidInput("matching does not cover every point");
  }
}

}  // namespace tverberg
