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

#include "tverberg/planar.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <optional>
#include <string>
#include <utility>

#include <Eigen/Dense>

#include "tverberg/geometry.h"
#include "tverberg/random.h"

namespace tverberg {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kQuarter = std::numbers::pi / 2;
constexpr int kRetryBudget = 32;
constexpr double kSideTol = 1e-12;
constexpr double kAngleDedup = 1e-12;

Eigen::Vector2d rot90(const Eigen::Vector2d& v) { return {-v.y(), v.x()}; }

void require_planar(const PointSet& points, int min_n) {
  points.validate();
  if (points.dim != 2) throw InvalidInput("input must be two-dimensional");
  if (points.size() < min_n) {
    throw InvalidInput("need at least " + std::to_string(min_n) + " points");
  }
}

double diameter_of_box(const PointSet& points) {
  Eigen::Vector2d lo = points[0], hi = points[0];
  for (const Point& p : points.points) {
    lo = lo.cwiseMin(Eigen::Vector2d(p));
    hi = hi.cwiseMax(Eigen::Vector2d(p));
  }
  return (hi - lo).norm();
}

std::vector<double> projections(const PointSet& points, const Eigen::Vector2d& v) {
  std::vector<double> out(points.size());
  for (int i = 0; i < points.size(); ++i) out[i] = v.x() * points[i](0) + v.y() * points[i](1);
  return out;
}

// Offset of the plank midline for projections `proj`; `gap` receives the
// distance between the two middle order statistics (even count) or between
// the median and its nearest neighbor in order (odd count).
double midline_offset(std::vector<double> proj, double* gap) {
  const int n = static_cast<int>(proj.size());
  const int m = n / 2;
  if (n % 2 == 0) {
    std::nth_element(proj.begin(), proj.begin() + (m - 1), proj.end());
    const double lower = proj[m - 1];
    const double upper = *std::min_element(proj.begin() + m, proj.end());
    if (gap) *gap = upper - lower;
    return 0.5 * (lower + upper);
  }
  std::nth_element(proj.begin(), proj.begin() + m, proj.end());
  const double median = proj[m];
  if (gap) {
    double g = std::numeric_limits<double>::infinity();
    if (m > 0) g = median - *std::max_element(proj.begin(), proj.begin() + m);
    if (m + 1 < n) g = std::min(g, *std::min_element(proj.begin() + m + 1, proj.end()) - median);
    *gap = g;
  }
  return median;
}

std::uint8_t closed_mask(double along, double across, double tol) {
  std::uint8_t mask = 0;
  if (along >= -tol && across >= -tol) mask |= 1;
  if (along <= tol && across >= -tol) mask |= 2;
  if (along <= tol && across <= tol) mask |= 4;
  if (along >= -tol && across <= tol) mask |= 8;
  return mask;
}

int quadrant_of(double along, double across) {
  if (along > 0) return across > 0 ? 1 : 4;
  return across > 0 ? 2 : 3;
}

// Classifies every point in the frame (v, w) centered where <p,v> = c1 and
// <p,w> = c2. Callers guarantee w is v turned by a quarter.
void fill_counts(const PointSet& points, const Eigen::Vector2d& v,
                 const Eigen::Vector2d& w, double c1, double c2, double tol,
                 bool keep_placement, SweepState& state) {
  state.red.fill(0);
  state.blue.fill(0);
  state.closed.fill(0);
  state.placement.clear();
  state.on_lines.clear();
  for (int i = 0; i < points.size(); ++i) {
    const Point& p = points[i];
    Placement pl;
    pl.along = v.x() * p(0) + v.y() * p(1) - c1;
    pl.across = w.x() * p(0) + w.y() * p(1) - c2;
    pl.on_ell = std::abs(pl.along) <= tol;
    pl.on_ell_perp = std::abs(pl.across) <= tol;
    pl.closed = closed_mask(pl.along, pl.across, tol);
    for (int q = 0; q < 4; ++q) {
      if (pl.closed >> q & 1) ++state.closed[q];
    }
    if (pl.on_ell || pl.on_ell_perp) {
      state.on_lines.push_back(i);
    } else if (points.colors) {
      const int q = quadrant_of(pl.along, pl.across) - 1;
      if ((*points.colors)[i] == Color::kRed) {
        ++state.red[q];
      } else {
        ++state.blue[q];
      }
    }
    if (keep_placement) state.placement.push_back(pl);
  }
}

// Quarter-turn reduced critical angles in [0, pi/2), sorted and deduplicated.
std::vector<double> reduced_critical_angles(const PointSet& points) {
  std::vector<double> out;
  const int n = points.size();
  out.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const Point d = points[b] - points[a];
      double r = std::fmod(std::atan2(d(1), d(0)), kQuarter);
      if (r < 0) r += kQuarter;
      if (r >= kQuarter) r -= kQuarter;
      out.push_back(r);
    }
  }
  std::sort(out.begin(), out.end());
  std::vector<double> dedup;
  for (double r : out) {
    if (dedup.empty() || r - dedup.back() > kAngleDedup) dedup.push_back(r);
  }
  if (dedup.size() > 1 && dedup.front() + kQuarter - dedup.back() <= kAngleDedup) {
    dedup.pop_back();
  }
  return dedup;
}

// Sample angles in [0, pi/2), one strictly between each pair of
// consecutive reduced critical angles (cyclically).
std::vector<double> quarter_samples(const std::vector<double>& crit) {
  std::vector<double> out;
  if (crit.empty()) return {kQuarter / 2};
  for (size_t k = 0; k + 1 < crit.size(); ++k) out.push_back(0.5 * (crit[k] + crit[k + 1]));
  double wrap = 0.5 * (crit.back() + crit.front() + kQuarter);
  if (wrap >= kQuarter) wrap -= kQuarter;
  out.push_back(wrap);
  std::sort(out.begin(), out.end());
  return out;
}

Eigen::Vector2d turn(Eigen::Vector2d v, int quarters) {
  for (int k = 0; k < quarters; ++k) v = rot90(v);
  return v;
}

// Sweep state at base angle `base` turned by `quarters`. Throws
// GeneralPositionError when either midline meets a point.
SweepState sample_state(const PointSet& points, double base, int quarters,
                        double tol, bool keep_placement) {
  const Eigen::Vector2d v = turn(unit_vector(base), quarters);
  const Eigen::Vector2d w = rot90(v);
  double gap1 = 0, gap2 = 0;
  const double c1 = midline_offset(projections(points, v), &gap1);
  const double c2 = midline_offset(projections(points, w), &gap2);
  if (gap1 <= tol || gap2 <= tol) {
    throw GeneralPositionError("sample angle lies on a critical angle");
  }
  SweepState state;
  state.alpha = normalize_angle(base + quarters * kQuarter);
  state.ell = {state.alpha, c1};
  state.ell_perp = {normalize_angle(state.alpha + kQuarter), c2};
  state.o = c1 * v + c2 * w;
  fill_counts(points, v, w, c1, c2, tol, keep_placement, state);
  if (!state.on_lines.empty()) {
    throw GeneralPositionError("point on a sweep line");
  }
  return state;
}

// Copy of the input rotated about its box center, optionally jittered.
struct Perturbed {
  PointSet points;
  Eigen::Matrix2d rotation;
  Eigen::Vector2d center;

  Point to_original(const Eigen::Vector2d& q) const {
    return rotation.transpose() * q + center;
  }
};

Perturbed perturb(const PointSet& points, Rng& rng, bool jitter) {
  Perturbed out;
  const double angle = uniform(rng, 0.0, 2.0 * kPi);
  out.rotation << std::cos(angle), -std::sin(angle), std::sin(angle), std::cos(angle);
  Eigen::Vector2d lo = points[0], hi = points[0];
  for (const Point& p : points.points) {
    lo = lo.cwiseMin(Eigen::Vector2d(p));
    hi = hi.cwiseMax(Eigen::Vector2d(p));
  }
  out.center = 0.5 * (lo + hi);
  const double delta = 1e-9 * (hi - lo).norm();
  out.points = points;
  for (Point& p : out.points.points) {
    Eigen::Vector2d q = out.rotation * (Eigen::Vector2d(p) - out.center);
    if (jitter) {
      q.x() += uniform(rng, -delta, delta);
      q.y() += uniform(rng, -delta, delta);
    }
    p = q;
  }
  return out;
}

struct Construction {
  std::vector<int> order;
  Eigen::Vector2d o;
  int which = 0;
};

std::vector<int> interleave(const std::vector<int>& first, const std::vector<int>& second) {
  std::vector<int> out;
  for (size_t k = 0; k < std::max(first.size(), second.size()); ++k) {
    if (k < first.size()) out.push_back(first[k]);
    if (k < second.size()) out.push_back(second[k]);
  }
  return out;
}

// Lines ell: <p, n1> = c1 (through x) and ell_perp: <p, n2> = c2 with n2 a
// quarter turn of n1. Along/across are taken relative to ell: along is the
// coordinate on ell, across the signed distance from it.
struct Frame {
  std::vector<double> along;
  std::vector<double> across;
  std::array<std::vector<int>, 4> open;  // open quadrant members, ascending index
};

Frame frame_for(const PointSet& pts, const Eigen::Vector2d& n1, double c1,
                const Eigen::Vector2d& n2, double c2,
                const std::vector<int>& on_line, double eps) {
  Frame f;
  const int n = pts.size();
  f.along.resize(n);
  f.across.resize(n);
  for (int i = 0; i < n; ++i) {
    f.along[i] = n2.dot(Eigen::Vector2d(pts[i])) - c2;
    f.across[i] = n1.dot(Eigen::Vector2d(pts[i])) - c1;
  }
  for (int i = 0; i < n; ++i) {
    if (std::find(on_line.begin(), on_line.end(), i) != on_line.end()) continue;
    if (std::abs(f.along[i]) <= eps || std::abs(f.across[i]) <= eps) {
      throw GeneralPositionError("point on a construction line");
    }
  }
  return f;
}

void bucket(Frame& f, const std::vector<int>& skip) {
  for (auto& q : f.open) q.clear();
  for (int i = 0; i < static_cast<int>(f.along.size()); ++i) {
    if (std::find(skip.begin(), skip.end(), i) != skip.end()) continue;
    f.open[quadrant_of(f.along[i], f.across[i]) - 1].push_back(i);
  }
}

Construction construct_even(const PointSet& pts, double eps) {
  const PairLine pl = pair_bisecting_line(pts);
  const DirectedLine perp = orthogonal_clear_bisecting_line(pts, pl.line);
  const Eigen::Vector2d n1 = pl.line.normal();
  const Eigen::Vector2d n2 = perp.normal();
  int x = pl.i, y = pl.j;
  Frame f = frame_for(pts, n1, pl.line.offset, n2, perp.offset, {x, y}, eps);
  f.across[x] = f.across[y] = 0.0;
  if (std::abs(f.along[x]) <= eps || std::abs(f.along[y]) <= eps) {
    throw GeneralPositionError("line intersection coincides with a point");
  }
  Construction out;
  out.o = make_sweep_state(pl.line.angle, pl.line, perp).o;
  if ((f.along[x] < 0) != (f.along[y] < 0)) {
    // o separates x and y on ell.
    if (f.along[x] > 0) std::swap(x, y);
    bucket(f, {x, y});
    const auto& q = f.open;
    if (q[0].size() != q[2].size() || q[1].size() != q[3].size()) {
      throw GeneralPositionError("quadrant counts do not balance");
    }
    out.order.push_back(x);
    for (int i : interleave(q[0], q[2])) out.order.push_back(i);
    out.order.push_back(y);
    for (int i : interleave(q[1], q[3])) out.order.push_back(i);
    out.which = 11;
    return out;
  }
  // x and y on the same side of o; mirror so that both have along > 0.
  if (f.along[x] < 0) {
    for (double& a : f.along) a = -a;
  }
  bucket(f, {x, y});
  const auto& q = f.open;
  if (q[2].size() != q[0].size() + 1 || q[1].size() != q[3].size() + 1) {
    throw GeneralPositionError("quadrant counts do not balance");
  }
  out.order.push_back(x);
  for (int i : interleave(q[2], q[0])) out.order.push_back(i);
  out.order.push_back(y);
  for (int i : interleave(q[1], q[3])) out.order.push_back(i);
  out.which = 12;
  return out;
}

// Median indices along v and along its quarter turn, or nullopt when
// projections are not distinct or both medians are the same point.
std::optional<std::pair<int, int>> distinct_medians(const PointSet& pts,
                                                    const Eigen::Vector2d& v,
                                                    double eps) {
  const int n = pts.size();
  auto median_of = [&](const Eigen::Vector2d& dir) -> int {
    std::vector<double> proj = projections(pts, dir);
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return proj[a] < proj[b]; });
    for (int k = 1; k < n; ++k) {
      if (proj[idx[k]] - proj[idx[k - 1]] <= eps) return -1;
    }
    return idx[n / 2];
  };
  const int x = median_of(v);
  const int y = median_of(rot90(v));
  if (x < 0 || y < 0 || x == y) return std::nullopt;
  return std::make_pair(x, y);
}

Construction construct_odd(const PointSet& pts, double eps) {
  // Scan base directions until the two median lines pass through different
  // points: first the frame axes, then one direction per cell of the
  // critical-angle arrangement.
  std::optional<std::pair<int, int>> medians;
  Eigen::Vector2d v(1.0, 0.0);
  medians = distinct_medians(pts, v, eps);
  if (!medians) {
    for (double s : quarter_samples(reduced_critical_angles(pts))) {
      v = unit_vector(s);
      medians = distinct_medians(pts, v, eps);
      if (medians) break;
    }
  }
  if (!medians) throw GeneralPositionError("median lines always share a point");
  const auto [x, y] = *medians;
  const Eigen::Vector2d w = rot90(v);
  const double c1 = v.dot(Eigen::Vector2d(pts[x]));
  const double c2 = w.dot(Eigen::Vector2d(pts[y]));
  Frame f = frame_for(pts, v, c1, w, c2, {x, y}, eps);
  f.across[x] = 0.0;
  f.along[y] = 0.0;
  if (std::abs(f.along[x]) <= eps || std::abs(f.across[y]) <= eps) {
    throw GeneralPositionError("median point on both lines");
  }
  // Mirror so that x lies in closed Q2 and Q3, y in closed Q1 and Q2.
  if (f.along[x] > 0) {
    for (double& a : f.along) a = -a;
  }
  if (f.across[y] < 0) {
    for (double& a : f.across) a = -a;
  }
  bucket(f, {x, y});
  const auto& q = f.open;
  if (q[0].size() != q[2].size() || q[3].size() != q[1].size() + 1) {
    throw GeneralPositionError("quadrant counts do not balance");
  }
  Construction out;
  out.order.push_back(x);
  for (int i : interleave(q[0], q[2])) out.order.push_back(i);
  out.order.push_back(y);
  for (int i : interleave(q[3], q[1])) out.order.push_back(i);
  out.o = c1 * v + c2 * w;
  out.which = 2;
  return out;
}

bool lex_less(const Point& a, const Point& b) {
  return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(),
                                      b.data() + b.size());
}

}  // namespace

Eigen::Vector2d unit_vector(double alpha) { return {std::cos(alpha), std::sin(alpha)}; }

double normalize_angle(double alpha) {
  double r = std::fmod(alpha, 2.0 * kPi);
  if (r < 0) r += 2.0 * kPi;
  if (r >= 2.0 * kPi) r -= 2.0 * kPi;
  return r;
}

double DirectedLine::signed_distance(const Point& p) const {
  return normal().dot(Eigen::Vector2d(p)) - offset;
}

bool DirectedLine::same_line(const DirectedLine& other, double tol) const {
  const Eigen::Vector2d a = normal(), b = other.normal();
  if ((a - b).norm() <= tol) return std::abs(offset - other.offset) <= tol;
  if ((a + b).norm() <= tol) return std::abs(offset + other.offset) <= tol;
  return false;
}

int Placement::open_quadrant() const {
  if (on_ell || on_ell_perp) return 0;
  return quadrant_of(along, across);
}

DirectedLine plank_midline(const PointSet& points, double alpha) {
  require_planar(points, 2);
  return {normalize_angle(alpha),
          midline_offset(projections(points, unit_vector(alpha)), nullptr)};
}

bool bisecting_check(const PointSet& points, const DirectedLine& line, double tol) {
  int pos = 0, neg = 0;
  for (const Point& p : points.points) {
    const double s = line.signed_distance(p);
    if (s > tol) ++pos;
    if (s < -tol) ++neg;
  }
  const int half = points.size() / 2;
  return pos <= half && neg <= half;
}

PairLine pair_bisecting_line(const PointSet& points) {
  require_planar(points, 2);
  const int n = points.size();
  if (n % 2 != 0) throw InvalidInput("pair_bisecting_line needs an even point count");
  int p = 0;
  for (int i = 1; i < n; ++i) {
    if (lex_less(points[i], points[p])) p = i;
  }
  std::vector<int> others;
  for (int i = 0; i < n; ++i) {
    if (i != p) others.push_back(i);
  }
  const Eigen::Vector2d base = points[p];
  auto rel = [&](int i) { return Eigen::Vector2d(Eigen::Vector2d(points[i]) - base); };
  // Every other point lies in the half-plane x > 0 (or on the ray x = 0,
  // y > 0) relative to p, so the cross product orders them by angle.
  std::sort(others.begin(), others.end(), [&](int a, int b) {
    const Eigen::Vector2d u = rel(a), v = rel(b);
    return u.x() * v.y() - u.y() * v.x() > 0;
  });
  const int q = others[(n - 2) / 2];
  const Eigen::Vector2d dir = rel(q).normalized();
  const Eigen::Vector2d normal = rot90(dir);
  PairLine out;
  out.line = {normalize_angle(std::atan2(normal.y(), normal.x())), normal.dot(base)};
  out.i = p;
  out.j = q;
  const double eps = kSideTol * (1.0 + diameter_of_box(points));
  int pos = 0, neg = 0;
  for (int i : others) {
    if (i == q) continue;
    const double s = out.line.signed_distance(points[i]);
    if (std::abs(s) <= eps) throw GeneralPositionError("three collinear points");
    (s > 0 ? pos : neg)++;
  }
  if (pos != neg) throw GeneralPositionError("radial split is unbalanced");
  return out;
}

DirectedLine orthogonal_clear_bisecting_line(const PointSet& points,
                                             const DirectedLine& ell) {
  require_planar(points, 2);
  const int n = points.size();
  if (n % 2 != 0) throw InvalidInput("orthogonal_clear_bisecting_line needs an even point count");
  const double angle = normalize_angle(ell.angle + kQuarter);
  std::vector<double> proj = projections(points, unit_vector(angle));
  std::sort(proj.begin(), proj.end());
  const double lower = proj[n / 2 - 1], upper = proj[n / 2];
  const double eps = kSideTol * (1.0 + std::abs(lower) + std::abs(upper));
  if (upper - lower <= eps) {
    throw GeneralPositionError("middle projections coincide");
  }
  return {angle, 0.5 * (lower + upper)};
}

SweepState make_sweep_state(double alpha, const DirectedLine& ell,
                            const DirectedLine& ell_perp) {
  SweepState s;
  s.alpha = normalize_angle(alpha);
  s.ell = ell;
  s.ell_perp = ell_perp;
  Eigen::Matrix2d a;
  a.row(0) = ell.normal().transpose();
  a.row(1) = ell_perp.normal().transpose();
  s.o = a.partialPivLu().solve(Eigen::Vector2d(ell.offset, ell_perp.offset));
  return s;
}

SweepState classify_quadrants(const PointSet& points, SweepState state, double tol) {
  require_planar(points, 0);
  const Eigen::Vector2d v = unit_vector(state.alpha);
  const Eigen::Vector2d w = rot90(v);
  fill_counts(points, v, w, v.dot(state.o), w.dot(state.o), tol, true, state);
  return state;
}

CycleResult build_tverberg_cycle(const PointSet& points, std::uint64_t seed) {
  require_planar(points, 3);
  points.require_distinct();
  Rng rng(seed);
  const double eps = kSideTol * (1.0 + diameter_of_box(points));
  for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
    const Perturbed pert = perturb(points, rng, attempt > 0);
    Construction c;
    try {
      c = points.size() % 2 == 0 ? construct_even(pert.points, eps)
                                 : construct_odd(pert.points, eps);
    } catch (const GeneralPositionError&) {
      continue;
    }
    CycleResult out;
    out.cycle.order = std::move(c.order);
    out.attempts = attempt + 1;
    out.construction_case = c.which;
    const auto edges = out.cycle.edges();
    out.witness = evaluate_witness(points, edges, pert.to_original(c.o));
    if (out.witness.value <= kEpsEval) return out;
    // Jitter can leave o marginally outside a disk on the originals; the
    // power center of the same cycle is the best possible witness.
    Witness best = power_center(points, edges);
    if (best.value <= kEpsEval) {
      out.witness = std::move(best);
      return out;
    }
  }
  throw BudgetExhausted("build_tverberg_cycle: perturbation retry budget exhausted");
}

std::vector<double> critical_angles(const PointSet& points) {
  require_planar(points, 2);
  const auto reduced = reduced_critical_angles(points);
  std::vector<double> out;
  for (int k = 0; k < 4; ++k) {
    for (double r : reduced) out.push_back(r + k * kQuarter);
  }
  return out;
}

std::vector<FSample> sweep_F(const PointSet& points) {
  require_planar(points, 2);
  points.require_balanced_colors();
  const double tol = kSideTol * (1.0 + diameter_of_box(points));
  const auto bases = quarter_samples(reduced_critical_angles(points));
  std::vector<FSample> out;
  out.reserve(4 * bases.size());
  for (int k = 0; k < 4; ++k) {
    for (double s : bases) {
      FSample sample;
      sample.state = sample_state(points, s, k, tol, false);
      sample.alpha = sample.state.alpha;
      sample.f = sample.state.f_value();
      out.push_back(std::move(sample));
    }
  }
  return out;
}

RedBlueResult build_redblue_matching_2d(const PointSet& points, std::uint64_t seed) {
  require_planar(points, 2);
  points.require_balanced_colors();
  points.require_distinct();
  Rng rng(seed);
  const double tol = kSideTol * (1.0 + diameter_of_box(points));
  const auto& colors = *points.colors;
  bool found_zero = false;
  for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
    const Perturbed pert = perturb(points, rng, attempt > 0);
    const auto bases = quarter_samples(reduced_critical_angles(pert.points));
    std::optional<SweepState> zero;
    try {
      for (int k = 0; k < 4 && !zero; ++k) {
        for (double s : bases) {
          SweepState st = sample_state(pert.points, s, k, tol, true);
          if (st.f_value() == 0) {
            zero = std::move(st);
            break;
          }
        }
      }
    } catch (const GeneralPositionError&) {
      continue;
    }
    if (!zero) continue;
    found_zero = true;
    const SweepState& st = *zero;
    for (int q = 0; q < 4; ++q) {
      if (st.red[q] != st.blue[(q + 2) % 4]) {
        throw InvariantViolation("F vanishes but opposite quadrant counts differ");
      }
    }
    std::array<std::vector<int>, 4> reds, blues;
    for (int i = 0; i < points.size(); ++i) {
      const int q = st.placement[i].open_quadrant() - 1;
      (colors[i] == Color::kRed ? reds : blues)[q].push_back(i);
    }
    auto by_coords = [&](int a, int b) {
      if (points[a] == points[b]) return a < b;
      return lex_less(points[a], points[b]);
    };
    RedBlueResult out;
    for (int q = 0; q < 4; ++q) {
      auto r = reds[q];
      auto b = blues[(q + 2) % 4];
      std::sort(r.begin(), r.end(), by_coords);
      std::sort(b.begin(), b.end(), by_coords);
      for (size_t k = 0; k < r.size(); ++k) out.matching.push_back({r[k], b[k]});
    }
    out.alpha = st.alpha;
    out.attempts = attempt + 1;
    out.witness = evaluate_witness(points, out.matching, pert.to_original(st.o));
    if (out.witness.value <= kEpsEval) return out;
    Witness best = power_center(points, out.matching);
    if (best.value <= kEpsEval) {
      out.witness = std::move(best);
      return out;
    }
  }
  if (!found_zero) {
    throw InvariantViolation("build_redblue_matching_2d: F has no zero sample");
  }
  throw BudgetExhausted("build_redblue_matching_2d: perturbation retry budget exhausted");
}

}  // namespace tverberg
