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

#include "tverberg/oracle.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace tverberg {
namespace {

constexpr int kMaxMatchingPoints = 8;
constexpr int kMaxCyclePoints = 8;
constexpr int kMaxColorCount = 8;
constexpr int kMaxEnumerate = 12;

void enumerate_from(std::vector<int>& partner, Matching& current,
                    const std::function<void(const Matching&)>& visit) {
  const int n = static_cast<int>(partner.size());
  int first = -1;
  for (int v = 0; v < n; ++v) {
    if (partner[v] < 0) {
      first = v;
      break;
    }
  }
  if (first < 0) {
    visit(current);
    return;
  }
  for (int w = first + 1; w < n; ++w) {
    if (partner[w] >= 0) continue;
    partner[first] = w;
    partner[w] = first;
    current.push_back({first, w});
    enumerate_from(partner, current, visit);
    current.pop_back();
    partner[first] = partner[w] = -1;
  }
}

double score(const PointSet& points, const std::vector<Edge>& edges, Objective objective) {
  if (objective == Objective::kMinimaxH) return power_center(points, edges).value;
  double q = 0.0;
  for (const Edge& e : edges) q += (points[e.i] - points[e.j]).squaredNorm();
  return q;
}

bool better(double candidate, double incumbent, Objective objective) {
  return objective == Objective::kMinimaxH ? candidate < incumbent : candidate > incumbent;
}

}  // namespace

Distribution parse_distribution(const std::string& name) {
  if (name == "cube" || name == "unit-cube") return Distribution::kUnitCube;
  if (name == "sphere" || name == "unit-sphere") return Distribution::kUnitSphere;
  if (name == "collinear") return Distribution::kCollinear;
  throw InvalidInput("unknown distribution '" + name + "'");
}

PointSet generate(const InstanceSpec& spec) {
  if (spec.dim < 1) throw InvalidInput("dimension must be positive");
  if (spec.n < 1) throw InvalidInput("point count must be positive");
  if (spec.colors == ColorMode::kRedBlue && spec.n % 2 != 0) {
    throw InvalidInput("red-blue instances need an even point count");
  }
  Rng rng(spec.seed);
  PointSet out;
  out.dim = spec.dim;
  for (int k = 0; k < spec.n; ++k) {
    Point p(spec.dim);
    switch (spec.distribution) {
      case Distribution::kUnitCube:
        for (int c = 0; c < spec.dim; ++c) p(c) = uniform01(rng);
        break;
      case Distribution::kUnitSphere: {
        double norm = 0.0;
        while (norm == 0.0) {
          for (int c = 0; c < spec.dim; ++c) p(c) = standard_normal(rng);
          norm = p.norm();
        }
        p /= norm;
        break;
      }
      case Distribution::kCollinear: {
        // Direction (1, 1/2, 1/4, ...) keeps t * direction exact.
        const double t = uniform01(rng);
        for (int c = 0; c < spec.dim; ++c) p(c) = std::ldexp(t, -c);
        if (spec.noise != 0.0) {
          for (int c = 0; c < spec.dim; ++c) p(c) += uniform(rng, -spec.noise, spec.noise);
        }
        break;
      }
    }
    out.points.push_back(std::move(p));
  }
  if (spec.colors == ColorMode::kRedBlue) {
    std::vector<Color> colors(spec.n);
    for (int k = 0; k < spec.n; ++k) colors[k] = k % 2 == 0 ? Color::kRed : Color::kBlue;
    out.colors = std::move(colors);
  }
  return out;
}

void for_each_perfect_matching(int n, const std::function<void(const Matching&)>& visit) {
  if (n < 0 || n % 2 != 0) throw InvalidInput("perfect matchings need an even vertex count");
  if (n > kMaxEnumerate) throw InvalidInput("too many vertices to enumerate matchings");
  std::vector<int> partner(n, -1);
  Matching current;
  enumerate_from(partner, current, visit);
}

std::vector<Matching> enumerate_perfect_matchings(int n) {
  std::vector<Matching> out;
  for_each_perfect_matching(n, [&](const Matching& m) { out.push_back(m); });
  return out;
}

BruteForceResult brute_force_best(const PointSet& points, Objective objective,
                                  Structure structure) {
  points.validate();
  const int n = points.size();
  BruteForceResult best;
  bool have = false;
  auto consider = [&](const std::vector<Edge>& edges, const std::vector<int>* order) {
    const double v = score(points, edges, objective);
    if (!have || better(v, best.value, objective)) {
      have = true;
      best.value = v;
      best.edges = edges;
      best.order = order ? *order : std::vector<int>{};
    }
  };

  switch (structure) {
    case Structure::kMatching: {
      if (n > kMaxMatchingPoints) throw InvalidInput("brute force: too many points");
      for_each_perfect_matching(n, [&](const Matching& m) { consider(m, nullptr); });
      break;
    }
    case Structure::kRedBlueMatching: {
      points.require_balanced_colors();
      const auto red = points.indices_of(Color::kRed);
      const auto blue = points.indices_of(Color::kBlue);
      const int k = static_cast<int>(red.size());
      if (k > kMaxColorCount) throw InvalidInput("brute force: too many points");
      std::vector<int> perm(k);
      std::iota(perm.begin(), perm.end(), 0);
      do {
        Matching m;
        for (int i = 0; i < k; ++i) m.push_back({red[i], blue[perm[i]]});
        consider(m, nullptr);
      } while (std::next_permutation(perm.begin(), perm.end()));
      break;
    }
    case Structure::kCycle: {
      if (n < 3) throw InvalidInput("cycles need at least 3 points");
      if (n > kMaxCyclePoints) throw InvalidInput("brute force: too many points");
      std::vector<int> rest(n - 1);
      std::iota(rest.begin(), rest.end(), 1);
      do {
        if (rest.front() > rest.back()) continue;  // skip reversed tours
        std::vector<int> order{0};
        order.insert(order.end(), rest.begin(), rest.end());
        consider(Cycle{order}.edges(), &order);
      } while (std::next_permutation(rest.begin(), rest.end()));
      break;
    }
  }
  return best;
}

Assignment brute_force_assignment(const CostMatrix& costs) {
  const int n = costs.size();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Assignment best;
  best.value = -std::numeric_limits<double>::infinity();
  do {
    double v = 0.0;
    for (int i = 0; i < n; ++i) v += costs(i, perm[i]);
    if (v > best.value) {
      best.value = v;
      best.permutation = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool two_ball_intersect(const Ball& b1, const Ball& b2, BallMode mode) {
  if (b1.center.size() != b2.center.size()) throw InvalidInput("dimension mismatch");
  const double gap = (b1.center - b2.center).norm();
  if (mode == BallMode::kClosed) return gap <= b1.radius + b2.radius;
  return gap < b1.radius + b2.radius && b1.radius > 0 && b2.radius > 0;
}

GridMinimum grid_minimize_h(const PointSet& points, const std::vector<Edge>& edges,
                            int grid, int rounds) {
  check_edges(points, edges);
  const int d = points.dim;
  if (d > 2) throw InvalidInput("grid_minimize_h supports d <= 2");
  Point lo = 0.5 * (points[edges[0].i] + points[edges[0].j]);
  Point hi = lo;
  for (const Edge& e : edges) {
    const Point m = 0.5 * (points[e.i] + points[e.j]);
    lo = lo.cwiseMin(m);
    hi = hi.cwiseMax(m);
  }
  auto h = [&](const Point& x) {
    double top = -std::numeric_limits<double>::infinity();
    for (const Edge& e : edges) top = std::max(top, (points[e.i] - x).dot(points[e.j] - x));
    return top;
  };
  const double pad = 1e-3 * (1.0 + (hi - lo).norm());
  lo.array() -= pad;
  hi.array() += pad;

  GridMinimum best{lo, h(lo)};
  const Point step = (hi - lo) / (grid - 1);
  Point x(d);
  const int outer = d == 2 ? grid : 1;
  for (int a = 0; a < grid; ++a) {
    for (int b = 0; b < outer; ++b) {
      x(0) = lo(0) + a * step(0);
      if (d == 2) x(1) = lo(1) + b * step(1);
      const double v = h(x);
      if (v < best.value) best = {x, v};
    }
  }

  // Nested ternary search; the partial minimum over the second coordinate
  // is convex in the first.
  auto ternary = [rounds](double a, double b, const auto& f) {
    for (int it = 0; it < rounds; ++it) {
      const double m1 = a + (b - a) / 3, m2 = b - (b - a) / 3;
      if (f(m1) <= f(m2)) {
        b = m2;
      } else {
        a = m1;
      }
    }
    return 0.5 * (a + b);
  };
  auto inner = [&](double x0) {
    Point y(d);
    y(0) = x0;
    if (d == 2) {
      y(1) = ternary(lo(1), hi(1), [&](double t) {
        Point z(2);
        z << x0, t;
        return h(z);
      });
    }
    return y;
  };
  const double x0 = ternary(lo(0), hi(0), [&](double t) { return h(inner(t)); });
  const Point refined = inner(x0);
  const double v = h(refined);
  if (v < best.value) best = {refined, v};
  return best;
}

std::vector<Point> dependent_set(Rng& rng, int k, int dim) {
  std::vector<Point> out;
  Point tail = Point::Zero(dim);
  for (int i = 0; i < k; ++i) {
    Point p(dim);
    for (int c = 0; c < dim; ++c) p(c) = standard_normal(rng);
    tail -= uniform(rng, 0.1, 1.0) * p;
    out.push_back(std::move(p));
  }
  out.push_back(std::move(tail));
  return out;
}

}  // namespace tverberg
