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

#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tverberg/assignment.h"
#include "tverberg/geometry.h"
#include "tverberg/io.h"
#include "tverberg/obtuse_descent.h"
#include "tverberg/oracle.h"
#include "tverberg/planar.h"

namespace py = pybind11;

namespace tverberg {
namespace {

using RowPoints = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using EdgeList = std::vector<std::pair<int, int>>;

PointSet to_points(const RowPoints& coords,
                   const std::optional<std::vector<std::string>>& colors) {
  PointSet ps;
  ps.dim = static_cast<int>(coords.cols());
  for (Eigen::Index i = 0; i < coords.rows(); ++i) ps.points.push_back(coords.row(i).transpose());
  if (colors) {
    std::vector<Color> c;
    for (const std::string& s : *colors) {
      if (s == "r" || s == "red") {
        c.push_back(Color::kRed);
      } else if (s == "b" || s == "blue") {
        c.push_back(Color::kBlue);
      } else {
        throw InvalidInput("color must be 'r' or 'b'");
      }
    }
    ps.colors = std::move(c);
  }
  ps.validate();
  return ps;
}

RowPoints to_array(const PointSet& ps) {
  RowPoints out(ps.size(), ps.dim);
  for (int i = 0; i < ps.size(); ++i) out.row(i) = ps[i].transpose();
  return out;
}

std::optional<std::vector<std::string>> color_names(const PointSet& ps) {
  if (!ps.colors) return std::nullopt;
  std::vector<std::string> out;
  for (Color c : *ps.colors) out.push_back(c == Color::kRed ? "r" : "b");
  return out;
}

std::vector<Edge> to_edges(const EdgeList& edges) {
  std::vector<Edge> out;
  for (auto [i, j] : edges) out.push_back({i, j});
  return out;
}

EdgeList from_edges(const std::vector<Edge>& edges) {
  EdgeList out;
  for (const Edge& e : edges) out.emplace_back(e.i, e.j);
  return out;
}

BallMode to_mode(const std::string& mode) {
  if (mode == "closed") return BallMode::kClosed;
  if (mode == "open") return BallMode::kOpen;
  throw InvalidInput("mode must be 'closed' or 'open'");
}

py::dict witness_dict(const Witness& w) {
  py::dict d;
  d["x"] = Eigen::VectorXd(w.x);
  d["value"] = w.value;
  d["tight"] = w.tight;
  return d;
}

}  // namespace
}  // namespace tverberg

PYBIND11_MODULE(_core, m) {
  using namespace tverberg;
  m.doc() = "Tverberg cycles and matchings with verified witnesses";

  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);
  py::register_exception<GeneralPositionError>(m, "GeneralPositionError", PyExc_RuntimeError);
  py::register_exception<BudgetExhausted>(m, "BudgetExhausted", PyExc_RuntimeError);

  m.def(
      "h_value",
      [](const RowPoints& pts, const EdgeList& edges, const Eigen::VectorXd& x) {
        return h_value(to_points(pts, std::nullopt), to_edges(edges), x);
      },
      py::arg("points"), py::arg("edges"), py::arg("x"));

  m.def(
      "power_center",
      [](const RowPoints& pts, const EdgeList& edges, double tol) {
        return witness_dict(power_center(to_points(pts, std::nullopt), to_edges(edges), tol));
      },
      py::arg("points"), py::arg("edges"), py::arg("tol") = kSolverTol);

  m.def(
      "support_coefficients",
      [](const RowPoints& mids, const Eigen::VectorXd& x, double tol) {
        std::vector<Point> k;
        for (Eigen::Index i = 0; i < mids.rows(); ++i) k.push_back(mids.row(i).transpose());
        std::vector<std::pair<int, double>> out;
        for (const SupportTerm& t : support_coefficients(k, x, tol)) out.emplace_back(t.index, t.weight);
        return out;
      },
      py::arg("midpoints"), py::arg("x"), py::arg("tol") = kEpsEval);

  m.def(
      "verify",
      [](const RowPoints& pts, const EdgeList& edges, const std::string& mode, double tol) {
        Verification v = verify_tverberg(to_points(pts, std::nullopt), to_edges(edges),
                                         to_mode(mode), tol);
        py::dict d = witness_dict(v.witness);
        d["intersects"] = v.intersects;
        return d;
      },
      py::arg("points"), py::arg("edges"), py::arg("mode") = "closed",
      py::arg("tol") = kEpsEval);

  m.def(
      "tverberg_cycle",
      [](const RowPoints& pts, std::uint64_t seed) {
        CycleResult r = build_tverberg_cycle(to_points(pts, std::nullopt), seed);
        py::dict d;
        d["cycle"] = r.cycle.order;
        d["edges"] = from_edges(r.cycle.edges());
        d["witness"] = witness_dict(r.witness);
        d["attempts"] = r.attempts;
        d["case"] = r.construction_case;
        return d;
      },
      py::arg("points"), py::arg("seed") = 0);

  m.def(
      "redblue_matching_2d",
      [](const RowPoints& pts, const std::vector<std::string>& colors, std::uint64_t seed) {
        RedBlueResult r = build_redblue_matching_2d(to_points(pts, colors), seed);
        py::dict d;
        d["edges"] = from_edges(r.matching);
        d["witness"] = witness_dict(r.witness);
        d["alpha"] = r.alpha;
        d["attempts"] = r.attempts;
        return d;
      },
      py::arg("points"), py::arg("colors"), py::arg("seed") = 0);

  m.def(
      "sweep_F",
      [](const RowPoints& pts, const std::vector<std::string>& colors) {
        std::vector<std::pair<double, int>> out;
        for (const FSample& s : sweep_F(to_points(pts, colors))) out.emplace_back(s.alpha, s.f);
        return out;
      },
      py::arg("points"), py::arg("colors"));

  m.def(
      "open_matching",
      [](const RowPoints& pts, std::uint64_t seed, double tol,
         const std::optional<std::function<void(py::dict)>>& trace) {
        TraceSink sink;
        if (trace) {
          sink = [&trace](const DescentStep& s) {
            py::dict d;
            d["step"] = s.step;
            d["value_before"] = s.value_before;
            d["value_after"] = s.next.witness.value;
            d["tight_before"] = s.tight_before;
            d["tight_after"] = s.next.tight_count;
            d["red"] = from_edges(s.red);
            d["blue"] = from_edges(s.blue);
            (*trace)(d);
          };
        }
        OpenMatchingResult r = open_tverberg_matching(to_points(pts, std::nullopt), seed, tol, sink);
        py::dict d;
        d["edges"] = from_edges(r.matching);
        d["witness"] = witness_dict(r.witness);
        d["iterations"] = r.iterations;
        d["boundary"] = r.boundary;
        return d;
      },
      py::arg("points"), py::arg("seed") = 0, py::arg("tol") = 1e-12,
      py::arg("trace") = std::nullopt);

  m.def(
      "redblue_matching",
      [](const RowPoints& pts, const std::vector<std::string>& colors) {
        RedBlueMatchingResult r = redblue_tverberg_matching(to_points(pts, colors));
        py::dict d;
        d["edges"] = from_edges(r.matching);
        d["witness"] = witness_dict(r.witness);
        d["q"] = r.q;
        d["exchanges"] = r.exchanges;
        return d;
      },
      py::arg("points"), py::arg("colors"));

  m.def(
      "max_weight_assignment",
      [](const Eigen::MatrixXd& costs) {
        Assignment a = max_weight_assignment(CostMatrix{costs});
        return std::make_pair(a.permutation, a.value);
      },
      py::arg("costs"));

  m.def(
      "generate",
      [](int dim, int n, std::uint64_t seed, const std::string& dist, bool colors,
         double noise) {
        PointSet ps = generate({dim, n, colors ? ColorMode::kRedBlue : ColorMode::kNone, seed,
                                parse_distribution(dist), noise});
        return py::make_tuple(to_array(ps), color_names(ps));
      },
      py::arg("dim"), py::arg("n"), py::arg("seed") = 0, py::arg("dist") = "cube",
      py::arg("colors") = false, py::arg("noise") = 0.0);

  m.def(
      "instance_digest",
      [](const RowPoints& pts, const std::optional<std::vector<std::string>>& colors) {
        return instance_digest(to_points(pts, colors));
      },
      py::arg("points"), py::arg("colors") = std::nullopt);
}
