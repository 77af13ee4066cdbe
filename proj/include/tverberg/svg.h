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

#ifndef TVERBERG_SVG_H_
#define TVERBERG_SVG_H_

#include <string>
#include <vector>

#include "tverberg/types.h"

namespace tverberg {

// 800x800 drawing of a planar construction: diameter disks (30% opacity)
// under edges under points under the witness cross. Input is scaled to fit
// with a 5% margin.
std::string render_svg(const PointSet& points, const std::vector<Edge>& edges,
                       const Witness& witness);

void write_svg(const std::string& path, const PointSet& points,
               const std::vector<Edge>& edges, const Witness& witness);

}  // namespace tverberg

#endif  // TVERBERG_SVG_H_
