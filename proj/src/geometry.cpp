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

#include "lshape/geometry.hpp"

#include <algorithm>
#include <numbers>
#include <stdexcept>

namespace lshape {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Intersection of two support lines (Cramer's rule). The callers only pass
// near-perpendicular lines, so the determinant is bounded away from zero.
Point2 line_intersection(const LineParams& l1, const LineParams& l2) {
  const double det = l1.a * l2.b - l1.b * l2.a;
  if (std::abs(det) < kCoincidentEps) {
    throw std::invalid_argument("line_intersection: lines are parallel");
  }
  return {(l1.c * l2.b - l2.c * l1.b) / det,
          (l1.a * l2.c - l2.a * l1.c) / det};
}

}  // namespace

double wrap_angle(double radians) {
  double r = std::fmod(radians + std::numbers::pi, kTwoPi);
  if (r < 0.0) {
    r += kTwoPi;
  }
  return r - std::numbers::pi;
}

double dist_point_line(Point2 p, Point2 q1, Point2 q2) {
  const Point2 d = q2 - q1;
  const double len = norm(d);
  if (len <= kCoincidentEps) {
    throw std::invalid_argument("dist_point_line: degenerate line");
  }
  return std::abs(cross(d, p - q1)) / len;
}

double angle_at(Point2 vertex, Point2 p, Point2 q) {
  const Point2 u = p - vertex;
  const Point2 v = q - vertex;
  if (norm(u) <= kCoincidentEps || norm(v) <= kCoincidentEps) {
    throw std::invalid_argument("angle_at: ray endpoint coincides with vertex");
  }
  return std::atan2(std::abs(cross(u, v)), dot(u, v));
}

Extent project_extent(std::span<const Point2> points, double direction) {
  if (points.empty()) {
    throw std::invalid_argument("project_extent: empty point set");
  }
  const Point2 dir = unit_vector(direction);
  Extent e{dot(points.front(), dir), dot(points.front(), dir)};
  for (const Point2& p : points.subspan(1)) {
    const double proj = dot(p, dir);
    e.min = std::min(e.min, proj);
    e.max = std::max(e.max, proj);
  }
  return e;
}

Point2 OrientedRect::center() const {
  Point2 c{0.0, 0.0};
  for (const Point2& p : corners) {
    c = c + p;
  }
  return 0.25 * c;
}

double OrientedRect::extent_along(double direction) const {
  return project_extent(corners, direction).span();
}

bool OrientedRect::contains(Point2 p, double tol) const {
  return signed_offset(edges[0], p) >= -tol &&
         signed_offset(edges[1], p) >= -tol &&
         signed_offset(edges[2], p) <= tol &&
         signed_offset(edges[3], p) <= tol;
}

OrientedRect support_rectangle(std::span<const Point2> points, double theta1,
                               double theta2, double heading) {
  const Point2 n1 = unit_vector(theta1);
  const Point2 n2 = unit_vector(theta2);
  if (std::abs(dot(n1, n2)) > 1e-9) {
    throw std::invalid_argument(
        "support_rectangle: directions are not perpendicular");
  }
  const Extent e1 = project_extent(points, theta1);
  const Extent e2 = project_extent(points, theta2);

  OrientedRect rect;
  rect.edges[0] = {n1.x, n1.y, e1.min};
  rect.edges[1] = {n2.x, n2.y, e2.min};
  rect.edges[2] = {n1.x, n1.y, e1.max};
  rect.edges[3] = {n2.x, n2.y, e2.max};
  rect.heading = wrap_angle(heading);
  rect.corners[0] = line_intersection(rect.edges[0], rect.edges[1]);
  rect.corners[1] = line_intersection(rect.edges[2], rect.edges[1]);
  rect.corners[2] = line_intersection(rect.edges[2], rect.edges[3]);
  rect.corners[3] = line_intersection(rect.edges[0], rect.edges[3]);
  return rect;
}

OrientedRect support_rectangle(std::span<const Point2> points, double theta) {
  return support_rectangle(points, theta, theta + std::numbers::pi / 2.0,
                           theta);
}

}  // namespace lshape
