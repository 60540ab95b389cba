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

#ifndef LSHAPE_SEGMENTATION_HPP
#define LSHAPE_SEGMENTATION_HPP

#include <cstddef>
#include <vector>

#include "lshape/geometry.hpp"

namespace lshape {

/// One laser scan frame. All points are finite and expressed in meters in the
/// sensor frame.
struct Scan {
  std::vector<Point2> points;
  int frame_id = 0;
  Point2 sensor_origin{0.0, 0.0};
};

/// A group of point indices into one scan. `label` is a cluster id >= 0 or
/// kNoiseLabel for the noise group. `indices` is ascending and duplicate
/// free.
struct Cluster {
  static constexpr int kNoiseLabel = -1;

  int scan_frame = 0;
  std::vector<std::size_t> indices;
  int label = kNoiseLabel;

  bool is_noise() const { return label == kNoiseLabel; }
};

struct DbscanParams {
  double epsilon = 0.85;  // neighborhood radius [m]
  int min_pts = 6;        // core threshold; a point counts itself
};

struct MeanShiftParams {
  double bandwidth = 6.0;        // flat-kernel window radius [m]
  double convergence_eps = 1e-4;  // per-point displacement threshold [m]
  int max_iterations = 300;
  double merge_radius = 0.0;  // <= 0 selects bandwidth / 2
};

/// Density-based clustering. Neighborhoods are closed (distance <= epsilon)
/// and a point counts itself toward min_pts. The output is canonical: cluster
/// ids are assigned by lowest contained point index, indices are ascending,
/// border points reachable from several clusters join the cluster of their
/// lowest-index core neighbor, and all noise indices (if any) are collected
/// in one trailing Cluster with label kNoiseLabel. An empty scan yields an
/// empty list. Throws std::invalid_argument on invalid parameters.
std::vector<Cluster> dbscan(const Scan& scan, const DbscanParams& params);

/// Flat-kernel mean shift. Every point is iterated to the mean of the
/// original points within `bandwidth` of its current position until the
/// displacement drops below convergence_eps or max_iterations is reached;
/// converged modes closer than the merge radius are merged. Every point is
/// assigned to a cluster (there is no noise notion); output is canonicalized
/// like dbscan's. Throws std::invalid_argument on an empty scan or invalid
/// parameters.
std::vector<Cluster> mean_shift(const Scan& scan, const MeanShiftParams& params);
std::vector<Cluster> mean_shift(const Scan& scan, double bandwidth);

}  // namespace lshape

#endif  // LSHAPE_SEGMENTATION_HPP
