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

#include "tverberg/svg.h"

#include <algorithm>
#include <cstdio>
#include <fstream>

#include "tverberg/geometry.h"

namespace tverberg {
namespace {

constexpr double kSize = 800.0;
constexpr double kMargin = 0.05 * kSize;

struct Frame {
  double x0 = 0, y0 = 0, scale = 1;

  double sx(double x) const { return kMargin + (x - x0) * scale; }
  double sy(double y) const { return kSize - kMargin - (y - y0) * scale; }
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

std::string render_svg(const PointSet& points, const std::vector<Edge>& edges,
                       const Witness& witness) {
  if (points.dim != 2) throw InvalidInput("svg output needs planar input");
  Frame f;
  double x1 = 0, y1 = 0;
  if (points.size() > 0) {
    f.x0 = x1 = points[0][0];
    f.y0 = y1 = points[0][1];
  }
  for (const Point& p : points.points) {
    f.x0 = std::min(f.x0, p[0]);
    f.y0 = std::min(f.y0, p[1]);
    x1 = std::max(x1, p[0]);
    y1 = std::max(y1, p[1]);
  }
  double extent = std::max(x1 - f.x0, y1 - f.y0);
  f.scale = extent > 0 ? (kSize - 2 * kMargin) / extent : 1.0;

  std::string out =
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
      "viewBox=\"0 0 800 800\">\n"
      "<rect width=\"800\" height=\"800\" fill=\"white\"/>\n<g "
      "fill=\"#8fb8de\" fill-opacity=\"0.3\" stroke=\"none\">\n";
  for (const Edge& e : edges) {
    Ball b = edge_ball(points[e.i], points[e.j]);
    out += "<circle cx=\"" + num(f.sx(b.center[0])) + "\" cy=\"" +
           num(f.sy(b.center[1])) + "\" r=\"" + num(b.radius * f.scale) +
           "\"/>\n";
  }
  out += "</g>\n<g stroke=\"#333\" stroke-width=\"1.5\">\n";
  for (const Edge& e : edges) {
    const Point& a = points[e.i];
    const Point& b = points[e.j];
    out += "<line x1=\"" + num(f.sx(a[0])) + "\" y1=\"" + num(f.sy(a[1])) +
           "\" x2=\"" + num(f.sx(b[0])) + "\" y2=\"" + num(f.sy(b[1])) +
           "\"/>\n";
  }
  out += "</g>\n<g>\n";
  for (int i = 0; i < points.size(); ++i) {
    const char* fill = "black";
    if (points.colors) {
      fill = (*points.colors)[i] == Color::kRed ? "#d62728" : "#1f77b4";
    }
    out += "<circle cx=\"" + num(f.sx(points[i][0])) + "\" cy=\"" +
           num(f.sy(points[i][1])) + "\" r=\"4\" fill=\"" + fill + "\"/>\n";
  }
  out += "</g>\n";
  if (witness.x.size() == 2) {
    double cx = f.sx(witness.x[0]), cy = f.sy(witness.x[1]);
    out += "<g stroke=\"#2ca02c\" stroke-width=\"2.5\">\n";
    out += "<line x1=\"" + num(cx - 8) + "\" y1=\"" + num(cy - 8) +
           "\" x2=\"" + num(cx + 8) + "\" y2=\"" + num(cy + 8) + "\"/>\n";
    out += "<line x1=\"" + num(cx - 8) + "\" y1=\"" + num(cy + 8) +
           "\" x2=\"" + num(cx + 8) + "\" y2=\"" + num(cy - 8) + "\"/>\n";
    out += "</g>\n";
  }
  out += "</svg>\n";
  return out;
}

void write_svg(const std::string& path, const PointSet& points,
               const std::vector<Edge>& edges, const Witness& witness) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path);
  out << render_svg(points, edges, witness);
}

}  // namespace tverberg
