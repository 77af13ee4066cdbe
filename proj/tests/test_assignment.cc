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

#include "doctest.h"
#include "test_util.h"
#include "tverberg/assignment.h"
#include "tverberg/geometry.h"
#include "tverberg/oracle.h"
#include "tverberg/random.h"

namespace tverberg {
namespace {

using testing::pt;

TEST_CASE("cost matrix") {
  CostMatrix c = cost_matrix({pt({0, 0})}, {pt({3, 4})});
  CHECK(c(0, 0) == 25.0);

  c = cost_matrix({pt({0, 0}), pt({2, 0})}, {pt({0, 1}), pt({3, 0})});
  CHECK(c(0, 0) == 1.0);
  CHECK(c(0, 1) == 9.0);
  CHECK(c(1, 0) == 5.0);
  CHECK(c(1, 1) == 1.0);

  std::vector<Point> same{pt({0, 1}), pt({2, 3}), pt({-1, 4})};
  c = cost_matrix(same, same);
  for (int i = 0; i < 3; ++i) CHECK(c(i, i) == 0.0);

  CHECK_THROWS_AS(cost_matrix({pt({0, 0})}, {}), InvalidInput);
}

TEST_CASE("max weight assignment") {
  CostMatrix c = cost_matrix({pt({0, 0}), pt({2, 0})}, {pt({0, 1}), pt({3, 0})});
  Assignment a = max_weight_assignment(c);
  CHECK(a.permutation == std::vector<int>{1, 0});
  CHECK(a.value == 14.0);

  CostMatrix diag{Eigen::MatrixXd::Identity(4, 4) * 10.0};
  CHECK(max_weight_assignment(diag).permutation == std::vector<int>{0, 1, 2, 3});

  CostMatrix flat{Eigen::MatrixXd::Ones(3, 3)};
  CHECK(max_weight_assignment(flat).permutation == std::vector<int>{0, 1, 2});
}

TEST_CASE("assignment matches factorial enumeration") {
  Rng rng(31337);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + trial % 7;
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        m(i, j) = trial % 4 == 0 ? std::floor(4 * uniform01(rng)) : uniform01(rng);
    CostMatrix c{m};
    Assignment fast = max_weight_assignment(c);
    Assignment slow = brute_force_assignment(c);
    CHECK(fast.value == slow.value);
    CHECK(fast.permutation == slow.permutation);
  }
}

TEST_CASE("red-blue matching small cases") {
  PointSet one = make_point_set({{0, 0}, {1, 1}}, std::vector<Color>{Color::kRed, Color::kBlue});
  RedBlueMatchingResult r = redblue_tverberg_matching(one);
  CHECK(r.matching.size() == 1);
  CHECK(r.witness.value == doctest::Approx(-0.5));

  PointSet sq = testing::colored_square();
  r = redblue_tverberg_matching(sq);
  CHECK(r.q == doctest::Approx(2.0));
  CHECK(std::abs(r.witness.value) <= kEpsEval);
  CHECK_FALSE(verify_tverberg(sq, r.matching, BallMode::kOpen).intersects);

  PointSet four = make_point_set({{0, 0}, {2, 0}, {0, 1}, {3, 0}},
                                 std::vector<Color>{Color::kRed, Color::kRed,
                                                    Color::kBlue, Color::kBlue});
  r = redblue_tverberg_matching(four);
  CHECK(r.q == 14.0);
  CHECK(r.witness.value <= kEpsEval);
  BruteForceResult best = brute_force_best(four, Objective::kMaxQ, Structure::kRedBlueMatching);
  CHECK(best.value == 14.0);

  CHECK_THROWS_AS(redblue_tverberg_matching(testing::square()), InvalidInput);
}

TEST_CASE("red-blue matching is Q optimal and Tverberg") {
  for (int seed = 0; seed < 100; ++seed) {
    int d = 2 + seed % 5;
    int n = 2 * (1 + seed % 15);
    PointSet ps = generate({d, n, ColorMode::kRedBlue, static_cast<std::uint64_t>(seed + 50),
                            seed % 2 ? Distribution::kUnitSphere : Distribution::kUnitCube,
                            0.0});
    RedBlueMatchingResult r = redblue_tverberg_matching(ps);
    CHECK_NOTHROW(check_perfect_matching(ps, r.matching));
    CHECK(two_swap_optimal(ps, r.matching));
    CHECK(r.witness.value <= kEpsEval);
    CHECK(r.q == doctest::Approx(q_value(ps, r.matching)));
    if (n <= 12) {
      BruteForceResult best = brute_force_best(ps, Objective::kMaxQ, Structure::kRedBlueMatching);
      CHECK(r.q == doctest::Approx(best.value).epsilon(1e-12));
    }
  }
}

TEST_CASE("two swap certificate detects a bad matching") {
  PointSet four = make_point_set({{0, 0}, {2, 0}, {0, 1}, {3, 0}},
                                 std::vector<Color>{Color::kRed, Color::kRed,
                                                    Color::kBlue, Color::kBlue});
  CHECK_FALSE(two_swap_optimal(four, {{0, 2}, {1, 3}}));
  CHECK(two_swap_optimal(four, {{0, 3}, {1, 2}}));
}

}  // namespace
}  // namespace tverberg
