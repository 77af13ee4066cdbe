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

// Acceptance suite: runs every criterion and prints one PASS/FAIL line each.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "tverberg/assignment.h"
#include "tverberg/geometry.h"
#include "tverberg/obtuse_descent.h"
#include "tverberg/oracle.h"
#include "tverberg/planar.h"
#include "tverberg/random.h"

namespace tverberg {
namespace {

struct Tally {
  int total = 0;
  int passed = 0;
  std::string first_failure;

  void record(bool ok, const std::string& what) {
    ++total;
    if (ok) {
      ++passed;
    } else if (first_failure.empty()) {
      first_failure = what;
    }
  }
  bool all() const { return total > 0 && passed == total; }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool report(int id, const std::string& name, const Tally& t, double secs,
            bool extra = true, const std::string& note = "") {
  const bool ok = t.all() && extra;
  std::printf("%s  criterion %d  %-34s %d/%d  %.1f s%s%s\n", ok ? "PASS" : "FAIL", id,
              name.c_str(), t.passed, t.total, secs, note.empty() ? "" : "  ",
              note.c_str());
  if (!t.first_failure.empty()) std::printf("      first failure: %s\n", t.first_failure.c_str());
  std::fflush(stdout);
  return ok;
}

std::string tag(const char* what, int i) { return std::string(what) + " #" + std::to_string(i); }

template <typename F>
void guarded(Tally& t, const std::string& what, F&& body) {
  try {
    t.record(body(), what);
  } catch (const std::exception& e) {
    t.record(false, what + ": " + e.what());
  }
}

bool hamiltonian(const Cycle& c, int n) {
  std::set<int> seen(c.order.begin(), c.order.end());
  return static_cast<int>(c.order.size()) == n && static_cast<int>(seen.size()) == n &&
         *seen.begin() == 0 && *seen.rbegin() == n - 1;
}

bool cycle_suite() {
  Tally t;
  auto t0 = Clock::now();
  for (int i = 0; i < 1000; ++i) {
    guarded(t, tag("cycle instance", i), [&] {
      const int n = 3 + i % 48;
      PointSet ps = generate({2, n, ColorMode::kNone, static_cast<std::uint64_t>(10000 + i),
                              Distribution::kUnitCube, 0.0});
      CycleResult r = build_tverberg_cycle(ps, i);
      const auto edges = r.cycle.edges();
      return hamiltonian(r.cycle, n) && h_value(ps, edges, r.witness.x) <= kEpsEval &&
             verify_tverberg(ps, edges, BallMode::kClosed, 1e-9).intersects;
    });
  }
  const double secs = seconds_since(t0);
  return report(1, "planar Tverberg cycles", t, secs, secs < 60.0);
}

bool redblue_planar_suite() {
  Tally t;
  auto t0 = Clock::now();
  for (int i = 0; i < 1000; ++i) {
    guarded(t, tag("red-blue planar instance", i), [&] {
      const int n = 1 + i % 50;
      PointSet ps = generate({2, 2 * n, ColorMode::kRedBlue,
                              static_cast<std::uint64_t>(20000 + i), Distribution::kUnitCube,
                              0.0});
      RedBlueResult r = build_redblue_matching_2d(ps, i);
      check_perfect_matching(ps, r.matching);
      bool ok = static_cast<int>(r.matching.size()) == n &&
                h_value(ps, r.matching, r.witness.x) <= kEpsEval &&
                verify_tverberg(ps, r.matching, BallMode::kClosed, 1e-9).intersects;
      for (const Edge& e : r.matching) {
        ok = ok && (*ps.colors)[e.i] == Color::kRed && (*ps.colors)[e.j] == Color::kBlue;
      }

      const auto samples = sweep_F(ps);
      const size_t q = samples.size() / 4;
      bool zero = false;
      ok = ok && samples.size() % 4 == 0;
      for (size_t k = 0; k < q; ++k) {
        int sum = 0;
        for (int s = 0; s < 4; ++s) sum += samples[k + s * q].f;
        ok = ok && sum == 0;
      }
      for (size_t k = 0; k < samples.size(); ++k) {
        zero = zero || samples[k].f == 0;
        ok = ok && std::abs(samples[(k + 1) % samples.size()].f - samples[k].f) <= 1;
      }
      return ok && zero;
    });
  }
  return report(2, "planar red-blue matchings", t, seconds_since(t0));
}

bool open_descent_suite() {
  Tally t;
  auto t0 = Clock::now();
  long steps = 0;
  for (int d = 2; d <= 5; ++d) {
    for (int i = 0; i < 500; ++i) {
      guarded(t, "open matching d=" + std::to_string(d) + tag("", i), [&] {
        const int pairs = 1 + i % 20;
        PointSet ps = generate({d, 2 * pairs, ColorMode::kNone,
                                static_cast<std::uint64_t>(30000 + 1000 * d + i),
                                i % 5 == 4 ? Distribution::kUnitSphere : Distribution::kUnitCube,
                                0.0});
        bool progress = true;
        OpenMatchingResult r = open_tverberg_matching(
            ps, i, 1e-12, [&](const DescentStep& s) {
              ++steps;
              const double before = s.value_before, after = s.next.witness.value;
              const bool lower = after < before;
              const bool fewer = std::abs(after - before) <= kEpsProg &&
                                 s.next.tight_count < s.tight_before;
              progress = progress && (lower || fewer);
            });
        check_perfect_matching(ps, r.matching);
        const long cap = 4L * pairs * pairs + 64;
        return progress && !r.boundary && r.iterations <= cap &&
               h_value(ps, r.matching, r.witness.x) < -1e-12 &&
               verify_tverberg(ps, r.matching, BallMode::kOpen, 1e-12).intersects;
      });
    }
  }
  return report(3, "open matchings by descent", t, seconds_since(t0), true,
                std::to_string(steps) + " steps");
}

bool redblue_dd_suite() {
  Tally t;
  auto t0 = Clock::now();
  for (int d = 2; d <= 6; ++d) {
    for (int i = 0; i < 500; ++i) {
      guarded(t, "red-blue d=" + std::to_string(d) + tag("", i), [&] {
        const int n = 1 + i % 30;
        PointSet ps = generate({d, 2 * n, ColorMode::kRedBlue,
                                static_cast<std::uint64_t>(40000 + 1000 * d + i),
                                i % 3 == 2 ? Distribution::kUnitSphere : Distribution::kUnitCube,
                                0.0});
        RedBlueMatchingResult r = redblue_tverberg_matching(ps);
        check_perfect_matching(ps, r.matching);
        return r.witness.value <= 1e-9 && two_swap_optimal(ps, r.matching) &&
               verify_tverberg(ps, r.matching, BallMode::kClosed, 1e-9).intersects;
      });
    }
  }
  return report(4, "red-blue matchings by max Q", t, seconds_since(t0));
}

bool tight_square_suite() {
  Tally t;
  auto t0 = Clock::now();
  PointSet sq = make_point_set({{0, 0}, {1, 0}, {1, 1}, {0, 1}},
                               std::vector<Color>{Color::kRed, Color::kBlue, Color::kRed,
                                                  Color::kBlue});
  guarded(t, "planar sweep on the square", [&] {
    RedBlueResult r = build_redblue_matching_2d(sq, 0);
    Verification closed = verify_tverberg(sq, r.matching, BallMode::kClosed);
    Verification open = verify_tverberg(sq, r.matching, BallMode::kOpen);
    return closed.intersects && std::abs(closed.witness.value) <= 1e-9 && !open.intersects;
  });
  guarded(t, "max-Q matching on the square", [&] {
    RedBlueMatchingResult r = redblue_tverberg_matching(sq);
    Verification open = verify_tverberg(sq, r.matching, BallMode::kOpen);
    return std::abs(r.witness.value) <= 1e-9 && !open.intersects;
  });
  return report(5, "tight alternately colored square", t, seconds_since(t0));
}

Matching random_matching(Rng& rng, int n) {
  std::vector<int> perm(n);
  for (int k = 0; k < n; ++k) perm[k] = k;
  for (int k = n - 1; k > 0; --k) {
    int j = static_cast<int>(uniform01(rng) * (k + 1));
    std::swap(perm[k], perm[std::min(j, k)]);
  }
  Matching m;
  for (int k = 0; k < n; k += 2) m.push_back({perm[k], perm[k + 1]});
  return m;
}

bool oracle_suite() {
  Tally t;
  auto t0 = Clock::now();
  Rng rng(6006);
  for (int i = 0; i < 200; ++i) {
    guarded(t, tag("power center vs grid", i), [&] {
      const int n = 2 * (1 + i % 3);
      PointSet ps = generate({1 + i % 2, n, ColorMode::kNone,
                              static_cast<std::uint64_t>(60000 + i), Distribution::kUnitCube,
                              0.0});
      Matching m = random_matching(rng, n);
      return std::abs(power_center(ps, m).value - grid_minimize_h(ps, m).value) <= 1e-5;
    });
    guarded(t, tag("assignment vs enumeration", i), [&] {
      const int n = 1 + i % 7;
      PointSet ps = generate({2 + i % 3, 2 * n, ColorMode::kRedBlue,
                              static_cast<std::uint64_t>(61000 + i), Distribution::kUnitCube,
                              0.0});
      std::vector<Point> red, blue;
      for (int k : ps.indices_of(Color::kRed)) red.push_back(ps[k]);
      for (int k : ps.indices_of(Color::kBlue)) blue.push_back(ps[k]);
      CostMatrix c = cost_matrix(red, blue);
      Assignment fast = max_weight_assignment(c);
      Assignment slow = brute_force_assignment(c);
      return fast.value == slow.value && fast.permutation == slow.permutation;
    });
    guarded(t, tag("descent vs exhaustive matchings", i), [&] {
      const int n = 2 * (1 + i % 3);
      PointSet ps = generate({2 + i % 4, n, ColorMode::kNone,
                              static_cast<std::uint64_t>(62000 + i), Distribution::kUnitCube,
                              0.0});
      OpenMatchingResult r = open_tverberg_matching(ps, i);
      BruteForceResult best = brute_force_best(ps, Objective::kMinimaxH, Structure::kMatching);
      return r.witness.value >= best.value - 1e-7 && r.witness.value < 0 && best.value < 0;
    });
  }
  return report(6, "oracle equivalence", t, seconds_since(t0));
}

bool lemma_suite() {
  Tally t;
  auto t0 = Clock::now();
  Rng rng(7007);
  for (int i = 0; i < 500; ++i) {
    const int variant = i % 3;
    guarded(t, tag("dependent set", i), [&] {
      const int dim = 2 + i % 5;
      std::vector<Point> pts = dependent_set(rng, 2 + i % 8, dim);
      if (variant == 1) pts.push_back(Point::Zero(dim));
      if (variant == 2) {
        // Direct sum of two dependent sets in complementary coordinates.
        const int dim2 = 1 + i % 3;
        std::vector<Point> other = dependent_set(rng, 1 + i % 4, dim2);
        for (Point& p : pts) {
          Point q = Point::Zero(dim + dim2);
          q.head(dim) = p;
          p = q;
        }
        for (const Point& p : other) {
          Point q = Point::Zero(dim + dim2);
          q.tail(dim2) = p;
          pts.push_back(q);
        }
      }
      ObtuseGraph g = build_obtuse_graph(pts);
      const auto iso = g.isolated();
      bool ok = iso.size() <= 1;
      for (int v : iso) ok = ok && g.vertices[v].norm() <= 1e-9;
      for (size_t a = 0; a < pts.size(); ++a) {
        for (size_t b = a + 1; b < pts.size(); ++b) {
          if (g.component[a] != g.component[b]) ok = ok && std::abs(pts[a].dot(pts[b])) <= 1e-9;
        }
      }
      if (variant == 2) ok = ok && g.num_components() >= 2;
      return ok;
    });
  }
  return report(7, "obtuse graph structure", t, seconds_since(t0));
}

}  // namespace
}  // namespace tverberg

int main() {
  using namespace tverberg;
  Tally certificates;
  ScopedPowerCenterObserver watch(
      [&](const PointSet& points, const std::vector<Edge>& edges, const Witness& w) {
        std::vector<Point> mids;
        for (int k : w.tight) mids.push_back(0.5 * (points[edges[k].i] + points[edges[k].j]));
        bool ok = false;
        try {
          ok = !support_coefficients(mids, w.x).empty();
        } catch (const std::exception&) {
          ok = false;
        }
        certificates.record(ok, "support extraction at value " + std::to_string(w.value));
      });

  auto t0 = Clock::now();
  bool ok = true;
  ok &= cycle_suite();
  ok &= redblue_planar_suite();
  ok &= open_descent_suite();
  ok &= redblue_dd_suite();
  ok &= tight_square_suite();
  ok &= oracle_suite();
  ok &= lemma_suite();
  ok &= report(8, "power center certificates", certificates, seconds_since(t0));
  return ok ? 0 : 1;
}
