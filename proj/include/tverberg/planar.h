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

#ifndef TVERBERG_PLANAR_H_
#define TVERBERG_PLANAR_H_

#include <array>
#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "tverberg/types.h"

namespace tverberg {

// Unit vector at angle `alpha`, counterclockwise from the x axis.
Eigen::Vector2d unit_vector(double alpha);

// Angle reduced to [0, 2 pi).
double normalize_angle(double alpha);

// The line {p : <p, v_angle> = offset}. (angle, c) and (angle + pi, -c)
// describe the same line.
struct DirectedLine {
  double angle = 0.0;
  double offset = 0.0;

  Eigen::Vector2d normal() const { return unit_vector(angle); }
  double signed_distance(const Point& p) const;
  bool same_line(const DirectedLine& other, double tol = 1e-12) const;
};

// Midline of the plank of bisecting lines with normal v_alpha. For even n
// the offset is the mean of the n/2-th and (n/2 + 1)-th smallest
// projections; for odd n it is the median projection.
DirectedLine plank_midline(const PointSet& points, double alpha);

// True iff each open half-plane of `line` holds at most floor(n/2) points.
// Points within `tol` of the line count as on it.
bool bisecting_check(const PointSet& points, const DirectedLine& line,
                     double tol = 1e-12);

struct PairLine {
  DirectedLine line;
  int i = 0;
  int j = 0;
};

// For even n: a bisecting line through exactly the two points i and j. The
// first is the lexicographically smallest point; the second is found by
// ranking the others radially around it.
PairLine pair_bisecting_line(const PointSet& points);

// For even n: a bisecting line orthogonal to `ell` through no input point.
// Throws GeneralPositionError when the two middle projections coincide.
DirectedLine orthogonal_clear_bisecting_line(const PointSet& points,
                                             const DirectedLine& ell);

// Placement of one point relative to a pair of orthogonal lines meeting at o.
// Quadrant q (1..4, counterclockwise from the one bounded by rays v_alpha
// and v_{alpha + pi/2}) sets bit (q - 1) when the point lies in the closed
// quadrant.
struct Placement {
  std::uint8_t closed = 0;
  bool on_ell = false;       // on the line with normal v_alpha
  bool on_ell_perp = false;  // on the line with normal v_{alpha + pi/2}
  double along = 0.0;        // <p - o, v_alpha>
  double across = 0.0;       // <p - o, v_{alpha + pi/2}>

  // 1..4, or 0 when the point lies on a line.
  int open_quadrant() const;
  bool in_closed(int quadrant) const { return closed >> (quadrant - 1) & 1; }
};

struct SweepState {
  double alpha = 0.0;
  DirectedLine ell;       // normal v_alpha
  DirectedLine ell_perp;  // normal v_{alpha + pi/2}
  Eigen::Vector2d o = Eigen::Vector2d::Zero();
  // Open-quadrant counts by color (points on a line are not counted here).
  std::array<int, 4> red{};
  std::array<int, 4> blue{};
  // Closed-quadrant counts over all points.
  std::array<int, 4> closed{};
  // Per-point detail; left empty by sweep_F to keep samples small.
  std::vector<Placement> placement;
  std::vector<int> on_lines;  // indices of points lying on either line

  int f_value() const { return red[0] - blue[2]; }
};

// SweepState with ell/ell_perp already set; o is recomputed as their
// intersection.
SweepState make_sweep_state(double alpha, const DirectedLine& ell,
                            const DirectedLine& ell_perp);

// Fills placements and counts. `tol` is the on-line band.
SweepState classify_quadrants(const PointSet& points, SweepState state,
                              double tol = 1e-12);

struct CycleResult {
  Cycle cycle;
  Witness witness;
  int attempts = 0;
  int construction_case = 0;  // 11, 12 or 2
};

// Hamiltonian cycle whose closed diameter disks share the returned witness.
CycleResult build_tverberg_cycle(const PointSet& points, std::uint64_t seed);

// Angles in [0, 2 pi) where some pair of points ties in projection onto
// v_alpha or v_{alpha + pi/2}; the set is closed under quarter turns.
std::vector<double> critical_angles(const PointSet& points);

struct FSample {
  double alpha = 0.0;
  int f = 0;
  SweepState state;
};

// F(alpha) = r_1 - b_3 sampled midway between consecutive critical angles,
// in increasing alpha. Sample k + N/4 is sample k turned by pi/2 exactly.
std::vector<FSample> sweep_F(const PointSet& points);

struct RedBlueResult {
  Matching matching;
  Witness witness;
  double alpha = 0.0;
  int attempts = 0;
};

// Perfect red-blue matching in the plane whose closed diameter disks share
// the returned witness.
RedBlueResult build_redblue_matching_2d(const PointSet& points,
                                        std::uint64_t seed);

}  // namespace tverberg

#endif  // TVERBERG_PLANAR_H_
