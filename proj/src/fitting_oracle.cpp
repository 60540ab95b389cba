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

// Exhaustive corner oracle. Kept apart from locate_corner on purpose: the
// loop, ordering and point-line distance are written from scratch so the two
// routines only agree if the selection logic itself agrees.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "lshape/fitting.hpp"

namespace lshape {

namespace {

// Distance of p from the line through a and b, via the unit normal.
double line_distance(Point2 p, Point2 a, Point2 b) {
  const double ex = b.x - a.x;
  const double ey = b.y - a.y;
  const double len = std::sqrt(ex * ex + ey * ey);
  const double nx = -ey / len;
  const double ny = ex / len;
  return std::abs(nx * (p.x - a.x) + ny * (p.y - a.y));
}

bool coincident(Point2 a, Point2 b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return std::sqrt(dx * dx + dy * dy) <= kCoincidentEps;
}

}  // namespace

std::optional<CornerResult> oracle_corner(std::span<const Point2> points,
                                          const VertexPair& vertexes) {
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     if (points[a].x != points[b].x) {
                       return points[a].x < points[b].x;
                     }
                     return points[a].y < points[b].y;
                   });

  std::optional<CornerResult> best;
  double best_err = std::numeric_limits<double>::infinity();
  for (std::size_t i : order) {
    const Point2 candidate = points[i];
    if (coincident(candidate, vertexes.v_a) ||
        coincident(candidate, vertexes.v_b)) {
      continue;
    }
    double err = 0.0;
    int n1 = 0;
    int n2 = 0;
    for (std::size_t j : order) {
      if (j == i) {
        continue;
      }
      const double d1 = line_distance(points[j], vertexes.v_a, candidate);
      const double d2 = line_distance(points[j], candidate, vertexes.v_b);
      if (d1 <= d2) {
        ++n1;
        err += d1;
      } else {
        ++n2;
        err += d2;
      }
    }
    if (err <= best_err) {
      best_err = err;
      best = CornerResult{candidate, err, n1, n2};
    }
  }
  return best;
}

}  // namespace lshape
