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

#include "lshape/segmentation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace lshape {

namespace {

// Uniform grid over the points with cell size equal to the query radius, so
// a radius query only has to visit the 3x3 cell block around a position.
class GridIndex {
 public:
  GridIndex(const std::vector<Point2>& points, double cell)
      : points_(points), cell_(cell) {
    cells_.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
      cells_[key(points[i])].push_back(i);
    }
  }

  // Indices of all points with distance(q, point) <= radius, ascending.
  // radius must not exceed the cell size.
  std::vector<std::size_t> query(Point2 q, double radius) const {
    std::vector<std::size_t> out;
    const double r2 = radius * radius;
    const std::int64_t cx = coord(q.x);
    const std::int64_t cy = coord(q.y);
    for (std::int64_t gx = cx - 1; gx <= cx + 1; ++gx) {
      for (std::int64_t gy = cy - 1; gy <= cy + 1; ++gy) {
        const auto it = cells_.find(pack(gx, gy));
        if (it == cells_.end()) {
          continue;
        }
        for (std::size_t idx : it->second) {
          if (squared_norm(points_[idx] - q) <= r2) {
            out.push_back(idx);
          }
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::int64_t coord(double v) const {
    return static_cast<std::int64_t>(std::floor(v / cell_));
  }
  std::int64_t key(Point2 p) const { return pack(coord(p.x), coord(p.y)); }
  static std::int64_t pack(std::int64_t gx, std::int64_t gy) {
    return (gx << 32) ^ (gy & 0xffffffff);
  }

  const std::vector<Point2>& points_;
  double cell_;
  std::unordered_map<std::int64_t, std::vector<std::size_t>> cells_;
};

std::vector<Cluster> canonical_clusters(const Scan& scan,
                                        const std::vector<int>& labels,
                                        bool with_noise_group) {
  int max_label = -1;
  for (int l : labels) {
    max_label = std::max(max_label, l);
  }
  std::vector<Cluster> groups(static_cast<std::size_t>(max_label + 1));
  Cluster noise;
  noise.scan_frame = scan.frame_id;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] < 0) {
      noise.indices.push_back(i);
    } else {
      groups[static_cast<std::size_t>(labels[i])].indices.push_back(i);
    }
  }
  std::erase_if(groups, [](const Cluster& c) { return c.indices.empty(); });
  std::sort(groups.begin(), groups.end(),
            [](const Cluster& a, const Cluster& b) {
              return a.indices.front() < b.indices.front();
            });
  for (std::size_t k = 0; k < groups.size(); ++k) {
    groups[k].label = static_cast<int>(k);
    groups[k].scan_frame = scan.frame_id;
  }
  if (with_noise_group && !noise.indices.empty()) {
    groups.push_back(std::move(noise));
  }
  return groups;
}

}  // namespace

std::vector<Cluster> dbscan(const Scan& scan, const DbscanParams& params) {
  if (!(params.epsilon > 0.0) || !std::isfinite(params.epsilon)) {
    throw std::invalid_argument("dbscan: epsilon must be positive");
  }
  if (params.min_pts < 1) {
    throw std::invalid_argument("dbscan: min_pts must be >= 1");
  }
  const std::size_t n = scan.points.size();
  if (n == 0) {
    return {};
  }

  const GridIndex index(scan.points, params.epsilon);
  std::vector<std::vector<std::size_t>> neighbors(n);
  std::vector<bool> core(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    neighbors[i] = index.query(scan.points[i], params.epsilon);
    core[i] = neighbors[i].size() >= static_cast<std::size_t>(params.min_pts);
  }

  // Connected components of the core points.
  constexpr int kUnset = -2;
  std::vector<int> labels(n, kUnset);
  int next = 0;
  std::vector<std::size_t> stack;
  for (std::size_t seed = 0; seed < n; ++seed) {
    if (!core[seed] || labels[seed] != kUnset) {
      continue;
    }
    labels[seed] = next;
    stack.assign(1, seed);
    while (!stack.empty()) {
      const std::size_t p = stack.back();
      stack.pop_back();
      for (std::size_t q : neighbors[p]) {
        if (core[q] && labels[q] == kUnset) {
          labels[q] = next;
          stack.push_back(q);
        }
      }
    }
    ++next;
  }

  // Border points join the cluster of their lowest-index core neighbor;
  // everything left over is noise.
  for (std::size_t i = 0; i < n; ++i) {
    if (core[i]) {
      continue;
    }
    labels[i] = Cluster::kNoiseLabel;
    for (std::size_t q : neighbors[i]) {  // ascending, so first core wins
      if (core[q]) {
        labels[i] = labels[q];
        break;
      }
    }
  }

  return canonical_clusters(scan, labels, true);
}

std::vector<Cluster> mean_shift(const Scan& scan,
                                const MeanShiftParams& params) {
  if (!(params.bandwidth > 0.0) || !std::isfinite(params.bandwidth)) {
    throw std::invalid_argument("mean_shift: bandwidth must be positive");
  }
  if (!(params.convergence_eps > 0.0) || params.max_iterations < 1) {
    throw std::invalid_argument("mean_shift: invalid convergence parameters");
  }
  const std::size_t n = scan.points.size();
  if (n == 0) {
    throw std::invalid_argument("mean_shift: empty scan");
  }
  const double merge_radius =
      params.merge_radius > 0.0 ? params.merge_radius : params.bandwidth / 2.0;
  const double bw2 = params.bandwidth * params.bandwidth;

  std::vector<Point2> pos(scan.points);
  std::vector<bool> done(n, false);
  for (int iter = 0; iter < params.max_iterations; ++iter) {
    bool moved = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) {
        continue;
      }
      Point2 sum{0.0, 0.0};
      std::size_t count = 0;
      for (const Point2& p : scan.points) {
        if (squared_norm(p - pos[i]) <= bw2) {
          sum = sum + p;
          ++count;
        }
      }
      if (count == 0) {
        done[i] = true;
        continue;
      }
      const Point2 mean = (1.0 / static_cast<double>(count)) * sum;
      if (distance(mean, pos[i]) < params.convergence_eps) {
        done[i] = true;
      } else {
        moved = true;
      }
      pos[i] = mean;
    }
    if (!moved) {
      break;
    }
  }

  // Merge converged positions into modes; the first point reaching a new mode
  // fixes its representative position.
  std::vector<Point2> modes;
  std::vector<int> labels(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t m = 0; m < modes.size(); ++m) {
      if (distance(modes[m], pos[i]) < merge_radius) {
        labels[i] = static_cast<int>(m);
        break;
      }
    }
    if (labels[i] < 0) {
      labels[i] = static_cast<int>(modes.size());
      modes.push_back(pos[i]);
    }
  }

  return canonical_clusters(scan, labels, false);
}

std::vector<Cluster> mean_shift(const Scan& scan, double bandwidth) {
  MeanShiftParams params;
  params.bandwidth = bandwidth;
  return mean_shift(scan, params);
}

}  // namespace lshape
