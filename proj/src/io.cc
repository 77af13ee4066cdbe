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

#include "tverberg/io.h"

#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace tverberg {
namespace {

using nlohmann::json;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool has_json_extension(const std::string& path) {
  return path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
}

bool skip_line(const std::string& line) {
  auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

Color parse_color(const std::string& token, int line_no) {
  if (token == "r" || token == "R" || token == "red") return Color::kRed;
  if (token == "b" || token == "B" || token == "blue") return Color::kBlue;
  throw InvalidInput("line " + std::to_string(line_no) + ": bad color '" +
                     token + "'");
}

double parse_number(const std::string& token, int line_no) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != token.size()) {
    throw InvalidInput("line " + std::to_string(line_no) + ": bad number '" +
                       token + "'");
  }
  return v;
}

int parse_index(const json& v) {
  if (!v.is_number_integer()) throw InvalidInput("edge index must be integer");
  return v.get<int>();
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

PointSet parse_point_text(std::istream& in) {
  std::string line;
  int line_no = 0;
  int dim = -1, n = -1;
  while (std::getline(in, line)) {
    ++line_no;
    if (skip_line(line)) continue;
    std::istringstream ls(line);
    std::string extra;
    if (!(ls >> dim >> n) || (ls >> extra)) {
      throw InvalidInput("line " + std::to_string(line_no) +
                         ": expected header 'dim n'");
    }
    break;
  }
  if (dim < 1 || n < 0) throw InvalidInput("missing or invalid header");

  PointSet ps;
  ps.dim = dim;
  std::vector<Color> colors;
  int colored = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (skip_line(line)) continue;
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    for (std::string t; ls >> t;) tokens.push_back(t);
    int nt = static_cast<int>(tokens.size());
    bool has_color = nt == dim + 1;
    if (nt != dim && !has_color) {
      throw InvalidInput("line " + std::to_string(line_no) + ": expected " +
                         std::to_string(dim) + " coordinates");
    }
    Point p(dim);
    for (int k = 0; k < dim; ++k) p[k] = parse_number(tokens[k], line_no);
    ps.points.push_back(p);
    if (has_color) {
      colors.push_back(parse_color(tokens[dim], line_no));
      ++colored;
    }
  }
  if (ps.size() != n) {
    throw InvalidInput("header announces " + std::to_string(n) +
                       " points, file has " + std::to_string(ps.size()));
  }
  if (colored != 0 && colored != n) {
    throw InvalidInput("colors must be given for all points or none");
  }
  if (colored > 0) ps.colors = std::move(colors);
  ps.validate();
  return ps;
}

PointSet parse_point_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("json: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("points") || !doc["points"].is_array())
    throw InvalidInput("json: expected an object with a 'points' array");
  PointSet ps;
  const json& pts = doc["points"];
  if (doc.contains("dim")) {
    if (!doc["dim"].is_number_integer()) throw InvalidInput("json: bad dim");
    ps.dim = doc["dim"].get<int>();
  } else if (!pts.empty() && pts[0].is_array()) {
    ps.dim = static_cast<int>(pts[0].size());
  }
  if (ps.dim < 1) throw InvalidInput("json: dimension must be positive");
  for (const json& row : pts) {
    if (!row.is_array() || static_cast<int>(row.size()) != ps.dim)
      throw InvalidInput("json: point with wrong dimension");
    Point p(ps.dim);
    for (int k = 0; k < ps.dim; ++k) {
      if (!row[k].is_number()) throw InvalidInput("json: non-numeric coordinate");
      p[k] = row[k].get<double>();
    }
    ps.points.push_back(p);
  }
  if (doc.contains("colors") && !doc["colors"].is_null()) {
    const json& cs = doc["colors"];
    if (!cs.is_array() || cs.size() != pts.size())
      throw InvalidInput("json: colors must match points");
    std::vector<Color> colors;
    for (const json& c : cs) {
      if (!c.is_string()) throw InvalidInput("json: color must be a string");
      colors.push_back(parse_color(c.get<std::string>(), 0));
    }
    ps.colors = std::move(colors);
  }
  ps.validate();
  return ps;
}

PointSet read_point_set(const std::string& path) {
  std::string text = slurp(path);
  if (has_json_extension(path)) return parse_point_json(text);
  std::istringstream in(text);
  return parse_point_text(in);
}

std::string format_point_text(const PointSet& points) {
  std::string out = std::to_string(points.dim) + " " +
                    std::to_string(points.size()) + "\n";
  for (int i = 0; i < points.size(); ++i) {
    for (int k = 0; k < points.dim; ++k) {
      if (k) out += ' ';
      out += format_double(points[i][k]);
    }
    if (points.colors) {
      out += (*points.colors)[i] == Color::kRed ? " r" : " b";
    }
    out += '\n';
  }
  return out;
}

std::string format_point_json(const PointSet& points) {
  std::string out = "{\"dim\": " + std::to_string(points.dim) + ", \"points\": [";
  for (int i = 0; i < points.size(); ++i) {
    out += i ? ", [" : "[";
    for (int k = 0; k < points.dim; ++k) {
      if (k) out += ", ";
      out += format_double(points[i][k]);
    }
    out += "]";
  }
  out += "]";
  if (points.colors) {
    out += ", \"colors\": [";
    for (int i = 0; i < points.size(); ++i) {
      if (i) out += ", ";
      out += (*points.colors)[i] == Color::kRed ? "\"r\"" : "\"b\"";
    }
    out += "]";
  }
  return out + "}\n";
}

std::string instance_digest(const PointSet& points) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : format_point_text(points)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

GraphFile parse_graph_text(std::istream& in) {
  GraphFile g;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (skip_line(line)) continue;
    std::istringstream ls(line);
    long long i = 0, j = 0;
    std::string extra;
    if (!(ls >> i >> j) || (ls >> extra) || i < 0 || j < 0 ||
        i > std::numeric_limits<int>::max() ||
        j > std::numeric_limits<int>::max()) {
      throw InvalidInput("line " + std::to_string(line_no) +
                         ": expected edge 'i j'");
    }
    g.edges.push_back({static_cast<int>(i), static_cast<int>(j)});
  }
  if (g.edges.empty()) throw InvalidInput("graph file has no edges");
  return g;
}

GraphFile read_graph(const std::string& path) {
  std::string text = slurp(path);
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw InvalidInput("graph file is empty");
  if (text[first] != '{') {
    std::istringstream in(text);
    return parse_graph_text(in);
  }
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("json: ") + e.what());
  }
  GraphFile g;
  if (doc.contains("cycle") && doc["cycle"].is_array()) {
    for (const json& v : doc["cycle"]) g.cycle.push_back(parse_index(v));
  }
  if (doc.contains("edges") && doc["edges"].is_array()) {
    for (const json& e : doc["edges"]) {
      if (!e.is_array() || e.size() != 2)
        throw InvalidInput("json: edge must be a pair");
      g.edges.push_back({parse_index(e[0]), parse_index(e[1])});
    }
  } else if (!g.cycle.empty()) {
    g.edges = Cycle{g.cycle}.edges();
  }
  if (g.edges.empty()) throw InvalidInput("graph file has no edges");
  return g;
}

std::string format_report(const RunReport& r, bool with_time) {
  std::string out = "{\n";
  auto field = [&](const std::string& key, const std::string& value) {
    out += "  \"" + key + "\": " + value + ",\n";
  };
  auto vec = [](const Point& x) {
    std::string s = "[";
    for (int k = 0; k < x.size(); ++k) {
      if (k) s += ", ";
      s += format_double(x[k]);
    }
    return s + "]";
  };
  field("command", json(r.command).dump());
  field("instance_digest", json(r.digest).dump());
  field("mode", r.mode == BallMode::kClosed ? "\"closed\"" : "\"open\"");
  field("success", r.success ? "true" : "false");
  std::string edges = "[";
  for (std::size_t k = 0; k < r.edges.size(); ++k) {
    if (k) edges += ", ";
    edges += "[" + std::to_string(r.edges[k].i) + ", " +
             std::to_string(r.edges[k].j) + "]";
  }
  field("edges", edges + "]");
  if (r.cycle) {
    std::string c = "[";
    for (std::size_t k = 0; k < r.cycle->size(); ++k) {
      if (k) c += ", ";
      c += std::to_string((*r.cycle)[k]);
    }
    field("cycle", c + "]");
  }
  auto witness = [&](const Witness& w) {
    std::string tight = "[";
    for (std::size_t k = 0; k < w.tight.size(); ++k) {
      if (k) tight += ", ";
      tight += std::to_string(w.tight[k]);
    }
    return "{\"x\": " + vec(w.x) + ", \"value\": " + format_double(w.value) +
           ", \"tight\": " + tight + "]}";
  };
  field("witness", witness(r.witness));
  if (r.construction_witness)
    field("construction_witness", witness(*r.construction_witness));
  if (r.iterations) field("iterations", std::to_string(*r.iterations));
  if (r.attempts) field("attempts", std::to_string(*r.attempts));
  if (r.alpha) field("alpha", format_double(*r.alpha));
  if (r.construction_case) field("case", std::to_string(*r.construction_case));
  field("boundary", r.boundary ? "true" : "false");
  if (with_time) field("wall_time_ms", format_double(r.wall_time_ms));
  out.erase(out.size() - 2);  // trailing ",\n"
  out += "\n}\n";
  return out;
}

}  // namespace tverberg
