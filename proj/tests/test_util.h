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

#ifndef TVERBERG_TESTS_TEST_UTIL_H_
#define TVERBERG_TESTS_TEST_UTIL_H_

#include <vector>

#include "tverberg/types.h"

namespace tverberg::testing {

inline Point pt(std::initializer_list<double> c) {
  Point p(static_cast<int>(c.size()));
  int k = 0;
  for (double v : c) p[k++] = v;
  return p;
}

inline PointSet square() {
  return make_point_set({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

// Red (0,0),(1,1); blue (1,0),(0,1).
inline PointSet colored_square() {
  return make_point_set({{0, 0}, {1, 0}, {1, 1}, {0, 1}},
                        std::vector<Color>{Color::kRed, Color::kBlue,
                                           Color::kRed, Color::kBlue});
}

inline PointSet collinear4() {
  return make_point_set({{0, 0}, {1, 0}, {2, 0}, {3, 0}});
}

}  // namespace tverberg::testing

#endif  // TVERBERG_TESTS_TEST_UTIL_H_
