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

#include "tverberg/obtuse_descent.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>
#include <unordered_map>

#include "tverberg/random.h"

namespace tverberg {
namespace {

// Expansion cap for the alternating-path search; supports have at most
// d + 1 pairs so real searches stay far below it.
constexpr long kSearchBudget = 20'000'000;

Matching canonical_sorted(Matching m) {
  for (Edge& e : m) e = canonical(e);
  std::sort(m.begin(), m.end(), [](const Edge& a, const Edge& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  });
  return m;
}

class AlternatingSearch {
 public:
  AlternatingSearch(const Matching& blue, const std::vector<Edge>& red) {
    for (const Edge& e : blue) {
      if (mate_.count(e.i) || mate_.count(e.j) || e.i == e.j) {
        throw InvalidInput("alternating_cycle: blue edges must form a matching");
      }
      mate_[e.i] = e.j;
      mate_[e.j] = e.i;
    }
    for (const Edge& e : red) {
      if (!mate_.count(e.i) || !mate_.count(e.j)) {
        throw InvalidInput("alternating_cycle: red edge leaves the vertex set");
      }
      if (mate_.at(e.i) == e.j) {
        throw InvalidInput("alternating_cycle: red and blue edges must be disjoint");
      }
      adj_[e.i].push_back(e.j);
      adj_[e.j].push_back(e.i);
    }
    for (auto& [v, list] : adj_) {
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
    }
  }

  bool run(std::vector<int>& walk) {
    std::vector<int> starts;
    for (const auto& [v, m] : mate_) starts.push_back(v);
    std::sort(starts.begin(), starts.end());
    for (int s : starts) {
      start_ = s;
      walk_ = {s, mate_[s]};
      visited_ = {s, mate_[s]};
      if (extend(mate_[s])) {
        walk = walk_;
        return true;
      }
    }
    return false;
  }

 private:
  bool extend(int cur) {
    if (++expansions_ > kSearchBudget) {
      throw InvariantViolation("alternating_cycle: search budget exhausted");
    }
    auto it = adj_.find(cur);
    if (it == adj_.end()) return false;
    for (int w : it->second) {
      if (w == start_ && walk_.size() >= 4) return true;
      if (std::find(visited_.begin(), visited_.end(), w) != visited_.end()) continue;
      const int m = mate_[w];
      walk_.push_back(w);
      walk_.push_back(m);
      visited_.push_back(w);
      visited_.push_back(m);
      if (extend(m)) return true;
      walk_.resize(walk_.size() - 2);
      visited_.resize(visited_.size() - 2);
    }
    return false;
  }

  std::map<int, int> mate_;
  std::map<int, std::vector<int>> adj_;
  std::vector<int> walk_;
  std::vector<int> visited_;
  int start_ = 0;
  long expansions_ = 0;
};

}  // namespace

std::vector<int> ObtuseGraph::isolated() const {
  std::vector<int> degree(vertices.size(), 0);
  for (const Edge& e : adjacency) {
    ++degree[e.i];
    ++degree[e.j];
  }
  std::vector<int> out;
  for (int v = 0; v < static_cast<int>(degree.size()); ++v) {
    if (degree[v] == 0) out.push_back(v);
  }
  return out;
}

ObtuseGraph build_obtuse_graph(std::vector<Point> translated_points, double eps_neg) {
  ObtuseGraph g;
  g.vertices = std::move(translated_points);
  const int n = static_cast<int>(g.vertices.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (int u = 0; u < n; ++u) {
    for (int w = u + 1; w < n; ++w) {
      if (g.vertices[u].dot(g.vertices[w]) < -eps_neg) {
        g.adjacency.push_back({u, w});
        parent[find(u)] = find(w);
      }
    }
  }
  // Components numbered by their lowest vertex.
  g.component.assign(n, -1);
  std::unordered_map<int, int> id_of_root;
  for (int v = 0; v < n; ++v) {
    const int root = find(v);
    auto [it, inserted] = id_of_root.emplace(root, static_cast<int>(g.components.size()));
    if (inserted) g.components.emplace_back();
    g.component[v] = it->second;
    g.components[it->second].push_back(v);
  }
  return g;
}

std::vector<Edge> star_edges(const ObtuseGraph& graph, const Matching& blue,
                             double eps_neg) {
  if (graph.num_components() <= 1) return {};
  int hub = 0;
  for (int v = 0; v < static_cast<int>(graph.vertices.size()); ++v) {
    if (graph.vertices[v].norm() <= eps_neg) {
      hub = v;
      break;
    }
  }
  auto in_blue = [&](int a, int b) {
    const Edge e = canonical({a, b});
    return std::any_of(blue.begin(), blue.end(),
                       [&](const Edge& f) { return canonical(f) == e; });
  };
  std::vector<Edge> out;
  for (int c = 0; c < graph.num_components(); ++c) {
    if (c == graph.component[hub]) continue;
    int pick = -1;
    for (int v : graph.components[c]) {
      if (!in_blue(hub, v)) {
        pick = v;
        break;
      }
    }
    if (pick < 0) {
      throw InvariantViolation("star_edges: component has no admissible vertex");
    }
    const double dot = graph.vertices[hub].dot(graph.vertices[pick]);
    if (std::abs(dot) > eps_neg) {
      throw InvariantViolation("star_edges: components are not orthogonal (dot " +
                               std::to_string(dot) + ")");
    }
    out.push_back({hub, pick});
  }
  return out;
}

AlternatingCycle alternating_cycle(const Matching& blue, const std::vector<Edge>& red) {
  AlternatingSearch search(blue, red);
  AlternatingCycle out;
  if (!search.run(out.walk)) {
    std::string dump = "alternating_cycle: no alternating cycle; blue=";
    for (const Edge& e : blue) dump += "(" + std::to_string(e.i) + "," + std::to_string(e.j) + ")";
    dump += " red=";
    for (const Edge& e : red) dump += "(" + std::to_string(e.i) + "," + std::to_string(e.j) + ")";
    throw InvariantViolation(dump);
  }
  const int len = static_cast<int>(out.walk.size());
  for (int k = 0; k < len; k += 2) {
    out.blue.push_back({out.walk[k], out.walk[k + 1]});
    out.red.push_back({out.walk[k + 1], out.walk[(k + 2) % len]});
  }
  return out;
}

DescentState make_descent_state(const PointSet& points, Matching matching) {
  DescentState s;
  s.matching = std::move(matching);
  s.witness = power_center(points, s.matching);
  s.tight_count = static_cast<int>(s.witness.tight.size());
  return s;
}

DescentState descent_step(const PointSet& points, const DescentState& state,
                          double tol, DescentStep* record) {
  const double value = state.witness.value;
  if (value < -tol) {
    throw InvalidInput("descent_step: matching is already an open Tverberg matching");
  }
  const Point& x = state.witness.x;

  std::vector<Point> mids;
  for (int k : state.witness.tight) {
    const Edge& e = state.matching[k];
    mids.push_back(0.5 * (points[e.i] + points[e.j]));
  }
  const auto support = support_coefficients(mids, x);
  if (support.size() < 2) {
    throw InvariantViolation("descent_step: convex certificate uses a single pair");
  }

  // Local vertex 2k and 2k + 1 are the translated endpoints of support pair k.
  Matching support_pairs;
  std::vector<int> global;
  std::vector<Point> verts;
  Matching blue_local;
  for (const SupportTerm& term : support) {
    const Edge& e = state.matching[state.witness.tight[term.index]];
    support_pairs.push_back(e);
    const int base = static_cast<int>(verts.size());
    verts.push_back(points[e.i] - x);
    verts.push_back(points[e.j] - x);
    global.push_back(e.i);
    global.push_back(e.j);
    blue_local.push_back({base, base + 1});
  }

  const ObtuseGraph graph = build_obtuse_graph(verts);
  const auto iso = graph.isolated();
  if (iso.size() > 1) {
    throw InvariantViolation("descent_step: obtuse graph has several isolated vertices");
  }
  if (iso.size() == 1 && graph.vertices[iso.front()].norm() > kEpsNeg) {
    throw InvariantViolation("descent_step: isolated vertex away from the origin");
  }
  std::vector<Edge> red_local = graph.adjacency;
  for (const Edge& e : star_edges(graph, blue_local)) red_local.push_back(e);
  const double band = kEpsTight * (1.0 + std::abs(value));
  for (const Edge& e : blue_local) {
    if (verts[e.i].dot(verts[e.j]) < value - band) {
      throw InvariantViolation("descent_step: support pair is not tight");
    }
  }
  for (const Edge& e : red_local) {
    if (verts[e.i].dot(verts[e.j]) > kEpsNeg) {
      throw InvariantViolation("descent_step: red pair with positive dot product");
    }
  }
  const AlternatingCycle cyc = alternating_cycle(blue_local, red_local);

  auto to_global = [&](const Edge& e) { return canonical({global[e.i], global[e.j]}); };
  std::vector<Edge> red, blue;
  for (const Edge& e : cyc.red) red.push_back(to_global(e));
  for (const Edge& e : cyc.blue) blue.push_back(to_global(e));

  Matching next;
  for (const Edge& e : state.matching) {
    if (std::find(blue.begin(), blue.end(), canonical(e)) == blue.end()) next.push_back(e);
  }
  for (const Edge& e : red) next.push_back(e);
  DescentState out = make_descent_state(points, canonical_sorted(std::move(next)));

  const double new_value = out.witness.value;
  const bool lower = new_value < value - kEpsProg;
  const bool fewer = std::abs(new_value - value) <= kEpsProg && out.tight_count < state.tight_count;
  if (!lower && !fewer) {
    throw InvariantViolation("descent_step: no lexicographic progress (P " +
                             std::to_string(value) + " -> " + std::to_string(new_value) +
                             ", tight " + std::to_string(state.tight_count) + " -> " +
                             std::to_string(out.tight_count) + ")");
  }
  if (record) {
    record->value_before = value;
    record->tight_before = state.tight_count;
    record->next = out;
    record->support = std::move(support_pairs);
    record->red = std::move(red);
    record->blue = std::move(blue);
    record->components = graph.num_components();
  }
  return out;
}

Matching greedy_matching(const PointSet& points, std::uint64_t seed) {
  const int n = points.size();
  Rng rng(seed);
  struct Candidate {
    double length2;
    std::uint64_t tie;
    Edge edge;
  };
  std::vector<Candidate> pairs;
  pairs.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      pairs.push_back({(points[i] - points[j]).squaredNorm(), rng(), {i, j}});
    }
  }
  std::sort(pairs.begin(), pairs.end(), [](const Candidate& a, const Candidate& b) {
    return a.length2 != b.length2 ? a.length2 < b.length2 : a.tie < b.tie;
  });
  std::vector<char> used(n, 0);
  Matching out;
  for (const Candidate& c : pairs) {
    if (used[c.edge.i] || used[c.edge.j]) continue;
    used[c.edge.i] = used[c.edge.j] = 1;
    out.push_back(c.edge);
  }
  return canonical_sorted(std::move(out));
}

OpenMatchingResult open_tverberg_matching(const PointSet& points, std::uint64_t seed,
                                          double tol, const TraceSink& trace) {
  points.validate();
  const int n = points.size();
  if (n < 2 || n % 2 != 0) throw InvalidInput("need an even number of points, at least 2");
  points.require_distinct();

  Point lo = points[0], hi = points[0];
  for (const Point& p : points.points) {
    lo = lo.cwiseMin(p);
    hi = hi.cwiseMax(p);
  }
  const double scale = (hi - lo).maxCoeff();
  PointSet unit = points;
  unit.colors.reset();
  for (Point& p : unit.points) p = (p - lo) / scale;

  DescentState state = make_descent_state(unit, greedy_matching(unit, seed));
  const long cap = static_cast<long>(n) * n + 64;
  OpenMatchingResult out;
  while (state.witness.value >= -tol) {
    if (out.iterations >= cap) {
      throw BudgetExhausted("open_tverberg_matching: iteration cap exceeded");
    }
    DescentStep rec;
    try {
      state = descent_step(unit, state, tol, &rec);
    } catch (const InvariantViolation&) {
      if (state.witness.value <= tol) {
        out.boundary = true;
        break;
      }
      throw;
    }
    ++out.iterations;
    if (trace) {
      rec.step = out.iterations;
      rec.value_before *= scale * scale;
      rec.next.witness.value *= scale * scale;
      rec.next.witness.x = lo + scale * rec.next.witness.x;
      trace(rec);
    }
  }
  out.matching = state.matching;
  out.witness = evaluate_witness(points, out.matching, lo + scale * state.witness.x);
  if (!(out.witness.value < -tol)) out.boundary = true;
  return out;
}

}  // namespace tverberg
