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

#ifndef TVERBERG_GEOMETRY_H_
#define TVERBERG_GEOMETRY_H_

#include <functional>
#include <vector>

#include "tverberg/types.h"

namespace tverberg {

Ball edge_ball(const Point& a, const Point& b);

// <a - x, b - x> for every edge ab, in edge order. This equals
// |m - x|^2 - s^2 for the edge midpoint m and half-length s, so the term is
// nonpositive exactly when x lies in the closed diameter ball.
std::vector<double> edge_terms(const PointSet& points,
                               const std::vector<Edge>& edges, const Point& x);

// The minimax function H(x) = max over edges of <a - x, b - x>.
double h_value(const PointSet& points, const std::vector<Edge>& edges,
               const Point& x);

// Indices of edges whose term is within kEpsTight * (1 + |max|) of the max.
std::vector<int> tight_edges(const std::vector<double>& terms);

// Witness at an arbitrary point: value is H(x), tight the attaining edges.
Witness evaluate_witness(const PointSet& points, const std::vector<Edge>& edges,
                         const Point& x);

// Unique minimizer of H over R^d.
//
// H is strictly convex (each term is |x|^2 plus an affine function), so the
// problem is the QP
//
//   minimize   t + |x|^2
//   subject to <a_e, b_e> - 2 <m_e, x> <= t   for every edge e,
//
// solved here with a primal active-set method. The working set is kept
// affinely independent in the midpoints, so it never exceeds d + 1 edges and
// each equality subproblem has a nonsingular KKT matrix.
Witness power_center(const PointSet& points, const std::vector<Edge>& edges,
                     double tol = kSolverTol);

// Instrumentation: while one of these is alive, every power_center result
// computed on the constructing thread is also passed to `fn`. Scopes nest.
using PowerCenterObserver = std::function<void(
    const PointSet&, const std::vector<Edge>&, const Witness&)>;

class ScopedPowerCenterObserver {
 public:
  explicit ScopedPowerCenterObserver(PowerCenterObserver fn);
  ~ScopedPowerCenterObserver();
  ScopedPowerCenterObserver(const ScopedPowerCenterObserver&) = delete;
  ScopedPowerCenterObserver& operator=(const ScopedPowerCenterObserver&) = delete;

 private:
  PowerCenterObserver previous_;
};

struct SupportTerm {
  int index = 0;
  double weight = 0.0;
};

// Convex weights expressing `x_star` as a combination of `midpoints`,
// restricted to weights above kEpsSupport and renormalized. Computed with
// Wolfe's minimum-norm-point algorithm on the translated midpoints, so the
// support is affinely independent. Throws InvariantViolation when x_star is
// farther than tol * (1 + spread) from the convex hull.
std::vector<SupportTerm> support_coefficients(const std::vector<Point>& midpoints,
                                              const Point& x_star,
                                              double tol = kEpsEval);

struct Verification {
  bool intersects = false;
  BallMode mode = BallMode::kClosed;
  Witness witness;  // power center; certificate of emptiness on failure
};

// Closed mode succeeds iff min H <= tol; open mode iff min H < -tol.
Verification verify_tverberg(const PointSet& points,
                             const std::vector<Edge>& edges, BallMode mode,
                             double tol = kEpsEval);

}  // namespace tverberg

#endif  // TVERBERG_GEOMETRY_H_
