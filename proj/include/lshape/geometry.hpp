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

#ifndef LSHAPE_GEOMETRY_HPP
#define LSHAPE_GEOMETRY_HPP

#include <array>
#include <cmath>
#include <span>

namespace lshape {

/// A planar point (or displacement) in meters.
struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
inline bool operator==(Point2 a, Point2 b) { return a.x == b.x && a.y == b.y; }

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double squared_norm(Point2 p) { return dot(p, p); }
inline double norm(Point2 p) { return std::sqrt(squared_norm(p)); }
inline double distance(Point2 a, Point2 b) { return norm(a - b); }
inline Point2 midpoint(Point2 a, Point2 b) {
  return {0.5 * (a.x + b.x), 0.5 * (a.y + b.y)};
}
inline bool is_finite(Point2 p) {
  return std::isfinite(p.x) && std::isfinite(p.y);
}
/// Unit vector pointing along `angle` (radians).
inline Point2 unit_vector(double angle) {
  return {std::cos(angle), std::sin(angle)};
}
/// `p` rotated by `angle` around the origin.
inline Point2 rotated(Point2 p, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {c * p.x - s * p.y, s * p.x + c * p.y};
}

/// Separation below which two points are treated as coincident.
inline constexpr double kCoincidentEps = 1e-12;

/// Wraps an angle to [-pi, pi).
double wrap_angle(double radians);

/// Perpendicular distance from p to the infinite line through q1 and q2.
/// Throws std::invalid_argument if q1 and q2 are closer than kCoincidentEps.
double dist_point_line(Point2 p, Point2 q1, Point2 q2);

/// Interior angle in [0, pi] at `vertex` between the rays toward p and q,
/// computed as atan2(|cross|, dot) of the two ray vectors. Throws
/// std::invalid_argument if p or q coincides with the vertex.
double angle_at(Point2 vertex, Point2 p, Point2 q);

/// Minimum / maximum of the projections of a point set onto the unit vector
/// pointing along `direction`.
struct Extent {
  double min = 0.0;
  double max = 0.0;
  double span() const { return max - min; }
};

/// Throws std::invalid_argument when `points` is empty.
Extent project_extent(std::span<const Point2> points, double direction);

/// Line a*x + b*y = c with (a, b) a unit normal.
struct LineParams {
  double a = 1.0;
  double b = 0.0;
  double c = 0.0;
};

/// Signed offset a*x + b*y - c of p from the line (positive on the normal
/// side).
inline double signed_offset(const LineParams& l, Point2 p) {
  return l.a * p.x + l.b * p.y - l.c;
}

/// Oriented rectangle described by four support lines. edges[0] and edges[2]
/// share one unit normal, edges[1] and edges[3] the perpendicular one, with
/// c(edges[0]) <= c(edges[2]) and c(edges[1]) <= c(edges[3]). `corners` holds
/// the edge intersections in cycle order (0&1, 2&1, 2&3, 0&3). `heading` is
/// the direction of the dominant edge, wrapped to [-pi, pi).
struct OrientedRect {
  std::array<LineParams, 4> edges{};
  double heading = 0.0;
  std::array<Point2, 4> corners{};

  Point2 center() const;
  /// Width of the projection of the corner points onto `direction`.
  double extent_along(double direction) const;
  bool contains(Point2 p, double tol = 1e-9) const;
};

/// Smallest rectangle with edge normals along theta1 and theta2 that contains
/// `points`. theta2 must be theta1 +/- pi/2 (up to 1e-9); `heading` is stored
/// wrapped to [-pi, pi). Throws std::invalid_argument on an empty point set
/// or non-perpendicular directions.
OrientedRect support_rectangle(std::span<const Point2> points, double theta1,
                               double theta2, double heading);

/// Convenience overload: theta2 = theta + pi/2, heading = theta.
OrientedRect support_rectangle(std::span<const Point2> points, double theta);

}  // namespace lshape

#endif  // LSHAPE_GEOMETRY_HPP
