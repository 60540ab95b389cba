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

#ifndef LSHAPE_FITTING_HPP
#define LSHAPE_FITTING_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lshape/geometry.hpp"

namespace lshape {

/// Tuning knobs of the L-shape search. Angles in radians, distances in
/// meters.
struct FitConfig {
  /// Half-width of the right-angle window used to prescreen corner
  /// candidates. pi/2 admits every candidate (prescreening disabled).
  double delta_theta0 = 0.39269908169872414;  // pi / 8
  /// Number of extreme points averaged into each side candidate vertex.
  int vertex_k = 3;
  /// Distance below which two candidate vertexes count as superposed.
  double superpose_threshold = 0.3;
  /// Cross-axis spread of the extreme points beyond which the orthogonal
  /// candidate pair is returned directly.
  double spread_threshold = 0.5;
  /// Clusters with fewer points are rejected, not fitted.
  int min_cluster_size = 4;

  /// Throws std::invalid_argument when a field is out of range.
  void validate() const;
};

/// The two far vertexes of an L-shaped cluster (the arm endpoints that are
/// not the corner). v_a and v_b are separated by more than 1e-9 m.
struct VertexPair {
  Point2 v_a;
  Point2 v_b;
  /// True when the pair was selected through the orthogonal-direction
  /// special case instead of the superposed-pair rule.
  bool via_special_case = false;
};

/// A localized corner: the selected cluster point, its accumulated error and
/// the number of points attributed to each edge (n_e1 + n_e2 = n - 1).
struct CornerResult {
  Point2 corner;
  double err = 0.0;
  int n_e1 = 0;
  int n_e2 = 0;
};

/// A fitted cluster. For degenerate fits (collinear clusters or blobs) the
/// rectangle is a support box along a fallback direction; `corner` is empty
/// when no corner was localized and `vertexes` is empty when not even a
/// vertex pair could be formed.
struct LShapeFit {
  std::optional<VertexPair> vertexes;
  std::optional<CornerResult> corner;
  OrientedRect rect;
  bool degenerate = false;
};

/// Selects the vertex pair of a cluster: the points are sorted by x and by y
/// (ties broken by the other coordinate, then input index), the k extreme
/// points of each side are averaged into four candidates, and the two
/// remaining candidates after removing the superposed pair decide v_b via the
/// angle comparison. If the extreme points of one axis spread more than
/// spread_threshold across the other axis, the orthogonal candidate pair is
/// returned directly (x extremes checked first). Returns std::nullopt when
/// all four candidates coincide (degenerate blob) or the chosen pair is
/// closer than 1e-9 m. Throws std::invalid_argument when the cluster has
/// fewer than min_cluster_size points.
std::optional<VertexPair> find_vertexes(std::span<const Point2> points,
                                        const FitConfig& config);

/// Scans every cluster point whose angle against (v_a, v_b) lies within
/// pi/2 +/- delta_theta0 and accumulates, over all other points, the smaller
/// of the distances to line (v_a, candidate) and line (candidate, v_b); ties
/// count toward edge 1. The candidate with the smallest accumulated error
/// wins (on equal error the later candidate in canonical (x, y, index) order).
/// Points coinciding with v_a or v_b are never candidates. Returns
/// std::nullopt when no candidate passes the angle window. Throws
/// std::invalid_argument when the cluster has fewer than min_cluster_size
/// points.
std::optional<CornerResult> locate_corner(std::span<const Point2> points,
                                          const VertexPair& vertexes,
                                          const FitConfig& config);

/// Test oracle: exhaustive corner search without the angle prescreen,
/// implemented independently of locate_corner (naive double loop, separate
/// distance formulation). Matches locate_corner's tie and edge-assignment
/// conventions. Returns std::nullopt when no point is a valid candidate.
std::optional<CornerResult> oracle_corner(std::span<const Point2> points,
                                          const VertexPair& vertexes);

/// Turns a localized corner into the oriented rectangle: the dominant edge
/// direction comes from atan2 of (v_a - corner) when n_e1 > n_e2, otherwise
/// from atan2 of (corner - v_b), and the box is the support rectangle of the
/// cluster along that direction and its perpendicular. Returns std::nullopt
/// when the direction-defining points coincide.
std::optional<OrientedRect> fit_rectangle(std::span<const Point2> points,
                                          const VertexPair& vertexes,
                                          const CornerResult& corner);

/// Full per-cluster chain: find_vertexes, locate_corner, fit_rectangle.
/// Returns std::nullopt for clusters below min_cluster_size (rejection). On
/// degeneracy at any stage the result is a line-fallback fit with
/// degenerate=true: the support box along atan2(v_b - v_a) (or along 0 when
/// no vertex pair exists).
std::optional<LShapeFit> fit_cluster(std::span<const Point2> points,
                                     const FitConfig& config);

/// Which of the two L edges a point is attributed to.
enum class EdgeLabel : std::uint8_t { edge1 = 1, edge2 = 2 };

/// Reconstructs the per-point edge attribution of a localized corner using
/// the same smaller-distance rule as locate_corner; the corner point itself
/// is labeled edge1.
std::vector<EdgeLabel> edge_labels(std::span<const Point2> points,
                                   const VertexPair& vertexes,
                                   const CornerResult& corner);

/// Least-squares L-shape metric: for the partition given by `labels`,
/// sqrt(sum of squared residuals of edge-1 points against the line
/// x cos(theta) + y sin(theta) = c1) plus the same for edge-2 points against
/// -x sin(theta) + y cos(theta) = c2. Evaluation only; never used to select
/// a fit. theta must lie in [0, pi/2] and labels must cover all points.
double ls_objective(std::span<const Point2> points,
                    std::span<const EdgeLabel> labels, double theta, double c1,
                    double c2);

/// Comparison baseline: scans theta over [0, pi/2) on a grid of the given
/// resolution and keeps the support rectangle whose closeness criterion (sum
/// over points of the distance to the nearest support edge) is smallest; the
/// first angle wins ties. Throws std::invalid_argument when the cluster has
/// fewer than 4 points or the resolution is out of (0, pi/2].
OrientedRect baseline_angle_search(std::span<const Point2> points,
                                   double resolution);

}  // namespace lshape

#endif  // LSHAPE_FITTING_HPP
