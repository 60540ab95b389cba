// Copyright 2026 The lshape Authors
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

#ifndef LSHAPE_TESTS_FIXTURES_HPP
#define LSHAPE_TESTS_FIXTURES_HPP

#include <vector>

#include "lshape/segmentation.hpp"

namespace lshape::testing {

/// The corner-at-45-degrees cluster worked through by hand in the fitting
/// tests: one arm along y = x, a shorter one along y = -x.
inline std::vector<Point2> l45_points() {
  return {{0.0, 0.0}, {1.0, 1.0}, {2.0, 2.0},
          {3.0, 3.0}, {1.0, -1.0}, {2.0, -2.0}};
}

/// Two dense ten-point blobs around (0, 0) and (10, 0) plus one stray point
/// at (4, 1), index 20. With the default parameters dbscan calls the stray
/// noise while flat-kernel mean shift absorbs it into the first blob: its
/// 6 m window reaches blob A (4.12 m) but not blob B's center (6.08 m), so
/// its trajectory drifts to A's mode.
inline Scan two_blob_outlier() {
  Scan scan;
  const std::vector<Point2> offsets = {
      {0.0, 0.0},  {0.3, 0.0},  {-0.3, 0.0}, {0.0, 0.3},   {0.0, -0.3},
      {0.2, 0.2},  {-0.2, 0.2}, {0.2, -0.2}, {-0.2, -0.2}, {0.1, 0.0}};
  for (const Point2& o : offsets) {
    scan.points.push_back(o);
  }
  for (const Point2& o : offsets) {
    scan.points.push_back(o + Point2{10.0, 0.0});
  }
  scan.points.push_back({4.0, 1.0});
  return scan;
}

}  // namespace lshape::testing

#endif  // LSHAPE_TESTS_FIXTURES_HPP
