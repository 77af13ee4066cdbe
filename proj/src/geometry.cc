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

#include "tverberg/geometry.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include <Eigen/Dense>

namespace tverberg {

namespace {
thread_local PowerCenterObserver observer;
}  // namespace

Ball edge_ball(const Point& a, const Point& b) {
  if (a.size() != b.size()) throw InvalidInput("dimension mismatch");
  return {0.5 * (a + b), 0.5 * (a - b).norm()};
}

std::vector<double> edge_terms(const PointSet& points,
                               const std::vector<Edge>& edges, const Point& x) {
  if (x.size() != points.dim) throw InvalidInput("dimension mismatch");
  std::vector<double> out;
  out.reserve(edges.size());
  for (const Edge& e : edges) {
    out.push_back((points[e.i] - x).dot(points[e.j] - x));
  }
  return out;
}

double h_value(const PointSet& points, const std::vector<Edge>& edges,
               const Point& x) {
  check_edges(points, edges);
  const auto terms = edge_terms(points, edges, x);
  return *std::max_element(terms.begin(), terms.end());
}

std::vector<int> tight_edges(const std::vector<double>& terms) {
  std::vector<int> out;
  if (terms.empty()) return out;
  const double top = *std::max_element(terms.begin(), terms.end());
  const double band = kEpsTight * (1.0 + std::abs(top));
  for (int k = 0; k < static_cast<int>(terms.size()); ++k) {
    if (terms[k] >= top - band) out.push_back(k);
  }
  return out;
}

Witness evaluate_witness(const PointSet& points, const std::vector<Edge>& edges,
                         const Point& x) {
  check_edges(points, edges);
  const auto terms = edge_terms(points, edges, x);
  Witness w;
  w.x = x;
  w.value = *std::max_element(terms.begin(), terms.end());
  w.tight = tight_edges(terms);
  return w;
}

Witness power_center(const PointSet& points, const std::vector<Edge>& edges,
                     double tol) {
  check_edges(points, edges);
  if (!(tol > 0.0)) throw InvalidInput("solver tolerance must be positive");
  const int n = static_cast<int>(edges.size());
  const int d = points.dim;

  for (const Edge& e : edges) {
    const Point& a = points[e.i];
    const Point& b = points[e.j];
    if (a.size() != d || b.size() != d) throw InvalidInput("dimension mismatch");
    if (!a.allFinite() || !b.allFinite()) throw InvalidInput("non-finite input");
  }
  // Solve in a frame centered on the midpoints and scaled to unit size;
  // H shifts with the frame and scales by its square.
  Point origin = Point::Zero(d);
  for (const Edge& e : edges) origin += 0.5 * (points[e.i] + points[e.j]);
  origin /= n;
  double unit = 0.0;
  for (const Edge& e : edges) {
    unit = std::max(unit, (points[e.i] - origin).cwiseAbs().maxCoeff());
    unit = std::max(unit, (points[e.j] - origin).cwiseAbs().maxCoeff());
  }
  if (!(unit > 0.0)) unit = 1.0;

  // Constraint k reads f_k(x) = c_k - 2 <m_k, x> <= t.
  Eigen::MatrixXd mid(d, n);
  Eigen::VectorXd c(n);
  for (int k = 0; k < n; ++k) {
    const Point a = (points[edges[k].i] - origin) / unit;
    const Point b = (points[edges[k].j] - origin) / unit;
    mid.col(k) = 0.5 * (a + b);
    c(k) = a.dot(b);
  }
  const Eigen::MatrixXd gram = mid.transpose() * mid;
  const double scale =
      1.0 + c.cwiseAbs().maxCoeff() + mid.colwise().squaredNorm().maxCoeff();
  const double feas_tol = tol * scale;
  const double slope_tol = 1e-14 * scale;

  auto f = [&](int k, const Eigen::VectorXd& x) {
    return c(k) - 2.0 * mid.col(k).dot(x);
  };

  Eigen::VectorXd x = mid.rowwise().mean();
  int first = 0;
  for (int k = 1; k < n; ++k) {
    if (f(k, x) > f(first, x)) first = k;
  }
  double t = f(first, x);
  std::vector<int> work{first};
  std::vector<char> in_work(n, 0);
  in_work[first] = 1;

  const int max_iter = 100 * (n + d + 1);
  bool converged = false;
  for (int iter = 0; iter < max_iter && !converged; ++iter) {
    const int w = static_cast<int>(work.size());
    Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(w + 1, w + 1);
    Eigen::VectorXd rhs(w + 1);
    for (int a = 0; a < w; ++a) {
      for (int b = 0; b < w; ++b) kkt(a, b) = 2.0 * gram(work[a], work[b]);
      kkt(a, w) = kkt(w, a) = 1.0;
      rhs(a) = c(work[a]);
    }
    rhs(w) = 1.0;
    Eigen::FullPivLU<Eigen::MatrixXd> lu(kkt);
    if (!lu.isInvertible()) {
      throw InvariantViolation("power_center: degenerate working set");
    }
    const Eigen::VectorXd sol = lu.solve(rhs);
    Eigen::VectorXd x_hat = Eigen::VectorXd::Zero(d);
    for (int a = 0; a < w; ++a) x_hat += sol(a) * mid.col(work[a]);
    const double t_hat = sol(w);
    const Eigen::VectorXd p_x = x_hat - x;
    const double p_t = t_hat - t;

    if (p_x.norm() <= tol * (1.0 + x.norm()) &&
        std::abs(p_t) <= feas_tol) {
      x = x_hat;
      t = t_hat;
      int worst = 0;
      for (int a = 1; a < w; ++a) {
        if (sol(a) < sol(worst)) worst = a;
      }
      if (sol(worst) >= -tol) {
        converged = true;
      } else {
        in_work[work[worst]] = 0;
        work.erase(work.begin() + worst);
      }
      continue;
    }

    double step = 1.0;
    int blocking = -1;
    for (int k = 0; k < n; ++k) {
      if (in_work[k]) continue;
      const double slope = -2.0 * mid.col(k).dot(p_x) - p_t;
      if (slope <= slope_tol) continue;
      const double gap = std::max(0.0, t - f(k, x));
      const double ratio = gap / slope;
      if (ratio < step) {
        step = ratio;
        blocking = k;
      }
    }
    x += step * p_x;
    t += step * p_t;
    if (blocking >= 0) {
      work.push_back(blocking);
      in_work[blocking] = 1;
    }
  }
  if (!converged) {
    throw InvariantViolation("power_center: active-set iteration cap reached");
  }
  // Stragglers violating the final working set beyond tolerance mean the
  // solve stalled on a degenerate step.
  for (int k = 0; k < n; ++k) {
    if (f(k, x) > t + 10.0 * feas_tol) {
      throw InvariantViolation("power_center: infeasible final iterate");
    }
  }
  Witness out = evaluate_witness(points, edges, origin + unit * x);
  if (observer) {
    PowerCenterObserver fn = observer;
    fn(points, edges, out);
  }
  return out;
}

ScopedPowerCenterObserver::ScopedPowerCenterObserver(PowerCenterObserver fn)
    : previous_(std::move(observer)) {
  observer = std::move(fn);
}

ScopedPowerCenterObserver::~ScopedPowerCenterObserver() {
  observer = std::move(previous_);
}

std::vector<SupportTerm> support_coefficients(const std::vector<Point>& midpoints,
                                              const Point& x_star, double tol) {
  const int n = static_cast<int>(midpoints.size());
  if (n == 0) throw InvalidInput("support_coefficients: no midpoints");
  const int d = static_cast<int>(x_star.size());
  Eigen::MatrixXd p(d, n);
  for (int i = 0; i < n; ++i) {
    if (midpoints[i].size() != d) throw InvalidInput("dimension mismatch");
    p.col(i) = midpoints[i] - x_star;
  }
  const Eigen::VectorXd norms2 = p.colwise().squaredNorm();
  const double spread = std::sqrt(norms2.maxCoeff());
  const double weight_eps = 1e-14;

  // Wolfe's minimum-norm-point algorithm over conv{p_i}.
  int start = 0;
  for (int i = 1; i < n; ++i) {
    if (norms2(i) < norms2(start)) start = i;
  }
  std::vector<int> corral{start};
  std::vector<double> lambda{1.0};
  Eigen::VectorXd x = p.col(start);

  auto combine = [&]() {
    Eigen::VectorXd out = Eigen::VectorXd::Zero(d);
    for (size_t a = 0; a < corral.size(); ++a) out += lambda[a] * p.col(corral[a]);
    return out;
  };

  const int max_major = 10 * (n + d + 1);
  for (int major = 0; major < max_major; ++major) {
    if (x.norm() <= 1e-15 * (1.0 + spread)) break;
    int best = 0;
    for (int i = 1; i < n; ++i) {
      if (x.dot(p.col(i)) < x.dot(p.col(best))) best = i;
    }
    if (x.dot(p.col(best)) >= x.squaredNorm() - 1e-13 * (1.0 + spread * spread)) {
      break;
    }
    if (std::find(corral.begin(), corral.end(), best) != corral.end()) break;
    corral.push_back(best);
    lambda.push_back(0.0);

    for (int minor = 0; minor <= n + d + 1; ++minor) {
      const int w = static_cast<int>(corral.size());
      Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(w + 1, w + 1);
      Eigen::VectorXd rhs = Eigen::VectorXd::Zero(w + 1);
      for (int a = 0; a < w; ++a) {
        for (int b = 0; b < w; ++b) kkt(a, b) = p.col(corral[a]).dot(p.col(corral[b]));
        kkt(a, w) = kkt(w, a) = 1.0;
      }
      rhs(w) = 1.0;
      const Eigen::VectorXd mu =
          kkt.completeOrthogonalDecomposition().solve(rhs).head(w);
      if (mu.minCoeff() > weight_eps) {
        for (int a = 0; a < w; ++a) lambda[a] = mu(a);
        break;
      }
      double theta = 1.0;
      int hit = -1;
      for (int a = 0; a < w; ++a) {
        if (mu(a) <= weight_eps && lambda[a] > mu(a)) {
          const double r = lambda[a] / (lambda[a] - mu(a));
          if (r < theta) {
            theta = r;
            hit = a;
          }
        }
      }
      for (int a = 0; a < w; ++a) lambda[a] = (1.0 - theta) * lambda[a] + theta * mu(a);
      if (hit >= 0) lambda[hit] = 0.0;
      std::vector<int> keep_idx;
      std::vector<double> keep_w;
      for (int a = 0; a < w; ++a) {
        if (lambda[a] > weight_eps) {
          keep_idx.push_back(corral[a]);
          keep_w.push_back(lambda[a]);
        }
      }
      corral = std::move(keep_idx);
      lambda = std::move(keep_w);
      if (corral.empty()) {
        throw InvariantViolation("support_coefficients: empty corral");
      }
    }
    x = combine();
  }

  const double residual = x.norm();
  if (!(residual <= tol * (1.0 + spread))) {
    throw InvariantViolation(
        "support_coefficients: point is not in the convex hull of the tight "
        "midpoints (residual " + std::to_string(residual) + ")");
  }

  std::vector<SupportTerm> out;
  double total = 0.0;
  for (size_t a = 0; a < corral.size(); ++a) {
    if (lambda[a] > kEpsSupport) {
      out.push_back({corral[a], lambda[a]});
      total += lambda[a];
    }
  }
  if (out.empty()) throw InvariantViolation("support_coefficients: empty support");
  for (auto& term : out) term.weight /= total;
  std::sort(out.begin(), out.end(),
            [](const SupportTerm& a, const SupportTerm& b) { return a.index < b.index; });
  return out;
}

Verification verify_tverberg(const PointSet& points,
                             const std::vector<Edge>& edges, BallMode mode,
                             double tol) {
  Verification out;
  out.mode = mode;
  out.witness = power_center(points, edges);
  out.intersects = mode == BallMode::kClosed ? out.witness.value <= tol
                                             : out.witness.value < -tol;
  return out;
}

}  // namespace tverberg
