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

#include <cmath>
#include <set>

#include "doctest.h"
#include "test_util.h"
#include "tverberg/geometry.h"
#include "tverberg/io.h"
#include "tverberg/oracle.h"

namespace tverberg {
namespace {

using testing::pt;

TEST_CASE("perfect matching counts") {
  CHECK(enumerate_perfect_matchings(2).size() == 1);
  CHECK(enumerate_perfect_matchings(4).size() == 3);
  CHECK(enumerate_perfect_matchings(6).size() == 15);
  CHECK(enumerate_perfect_matchings(8).size() == 105);
  CHECK_THROWS_AS(enumerate_perfect_matchings(5), InvalidInput);
  CHECK_THROWS_AS(enumerate_perfect_matchings(14), InvalidInput);

  std::set<std::vector<std::pair<int, int>>> seen;
  for (const Matching& m : enumerate_perfect_matchings(6)) {
    std::vector<std::pair<int, int>> key;
    for (const Edge& e : m) key.emplace_back(canonical(e).i, canonical(e).j);
    std::sort(key.begin(), key.end());
    seen.insert(key);
  }
  CHECK(seen.size() == 15);
}

TEST_CASE("brute force optima") {
  BruteForceResult r =
      brute_force_best(testing::collinear4(), Objective::kMinimaxH, Structure::kMatching);
  CHECK(r.value == doctest::Approx(-0.75));
  std::vector<std::pair<int, int>> got;
  for (const Edge& e : r.edges) got.emplace_back(canonical(e).i, canonical(e).j);
  std::sort(got.begin(), got.end());
  CHECK(got == std::vector<std::pair<int, int>>{{0, 2}, {1, 3}});

  PointSet two = make_point_set({{0, 0}, {1, 0}});
  r = brute_force_best(two, Objective::kMinimaxH, Structure::kMatching);
  CHECK(r.edges.size() == 1);
  CHECK(r.value == doctest::Approx(-0.25));

  PointSet tri = make_point_set({{0, 0}, {4, 0}, {2, 3}, {2, 1}});
  r = brute_force_best(tri, Objective::kMinimaxH, Structure::kCycle);
  CHECK(r.order.size() == 4);
  CHECK(r.value <= 0);

  CHECK_THROWS_AS(brute_force_best(generate({2, 10, ColorMode::kNone, 1,
                                             Distribution::kUnitCube, 0.0}),
                                   Objective::kMinimaxH, Structure::kMatching),
                  InvalidInput);
}

TEST_CASE("two ball intersection") {
  Ball a{pt({0, 0}), 1.0}, b{pt({2, 0}), 1.0}, c{pt({3, 0}), 1.0};
  CHECK(two_ball_intersect(a, b, BallMode::kClosed));
  CHECK_FALSE(two_ball_intersect(a, b, BallMode::kOpen));
  CHECK_FALSE(two_ball_intersect(a, c, BallMode::kClosed));
  CHECK_FALSE(two_ball_intersect(a, c, BallMode::kOpen));
}

TEST_CASE("two ball test agrees with the verifier") {
  for (int seed = 0; seed < 200; ++seed) {
    PointSet ps = generate({1 + seed % 3, 4, ColorMode::kNone, static_cast<std::uint64_t>(seed),
                            Distribution::kUnitCube, 0.0});
    Matching m{{0, 1}, {2, 3}};
    bool analytic = two_ball_intersect(edge_ball(ps[0], ps[1]), edge_ball(ps[2], ps[3]),
                                       BallMode::kClosed);
    double value = power_center(ps, m).value;
    if (std::abs(value) > 1e-9) CHECK(analytic == (value <= 0));
  }
}

TEST_CASE("generator") {
  InstanceSpec spec{2, 4, ColorMode::kNone, 7, Distribution::kUnitCube, 0.0};
  CHECK(format_point_text(generate(spec)) == format_point_text(generate(spec)));
  PointSet cube = generate({3, 50, ColorMode::kNone, 3, Distribution::kUnitCube, 0.0});
  for (const Point& p : cube.points) {
    CHECK(p.minCoeff() >= 0.0);
    CHECK(p.maxCoeff() <= 1.0);
  }
  PointSet sphere = generate({4, 20, ColorMode::kNone, 3, Distribution::kUnitSphere, 0.0});
  for (const Point& p : sphere.points) CHECK(p.norm() == doctest::Approx(1.0));

  PointSet line = generate({3, 10, ColorMode::kNone, 2, Distribution::kCollinear, 0.0});
  for (const Point& p : line.points)
    for (int c = 1; c < 3; ++c) CHECK(std::ldexp(p[c], c) == p[0]);

  PointSet rb = generate({2, 6, ColorMode::kRedBlue, 1, Distribution::kUnitCube, 0.0});
  REQUIRE(rb.colors);
  for (int i = 0; i < 6; ++i)
    CHECK((*rb.colors)[i] == (i % 2 == 0 ? Color::kRed : Color::kBlue));
  CHECK_THROWS_AS(generate({2, 9, ColorMode::kRedBlue, 1, Distribution::kUnitCube, 0.0}),
                  InvalidInput);
  CHECK(parse_distribution("sphere") == Distribution::kUnitSphere);
  CHECK_THROWS_AS(parse_distribution("torus"), InvalidInput);
}

TEST_CASE("grid oracle on known values") {
  PointSet two = make_point_set({{0, 0}, {2, 0}, {4, 0}, {6, 0}});
  GridMinimum g = grid_minimize_h(two, {{0, 1}, {2, 3}});
  CHECK(g.value == doctest::Approx(3.0).epsilon(1e-6));
  CHECK(g.x[0] == doctest::Approx(3.0).epsilon(1e-6));
}

TEST_CASE("dependent sets") {
  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    auto pts = dependent_set(rng, 3, 4);
    CHECK(pts.size() == 4);
    auto weights = support_coefficients(pts, Point::Zero(4));
    CHECK(weights.size() == pts.size());
  }
}

}  // namespace
}  // namespace tverberg
