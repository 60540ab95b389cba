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

// Restated flat-kernel mean shift. The production code sweeps all points in
// lockstep; since the kernel always averages the *original* points, every
// trajectory is independent, so iterating each point to convergence on its
// own must land on the same modes. That equivalence is what the comparison
// test exercises.

#ifndef LSHAPE_TESTS_REFERENCE_MEANSHIFT_HPP
#define LSHAPE_TESTS_REFERENCE_MEANSHIFT_HPP

#include <algorithm>
#include <cstddef>
#include <vector>

#include "lshape/segmentation.hpp"

namespace lshape::testing {

inline std::vector<Cluster> reference_meanshift(const Scan& scan,
                                                const MeanShiftParams& params) {
  const std::size_t n = scan.points.size();
  const double merge_radius =
      params.merge_radius > 0.0 ? params.merge_radius : params.bandwidth / 2.0;
  const double bw2 = params.bandwidth * params.bandwidth;

  std::vector<Point2> modes_of(n);
  for (std::size_t i = 0; i < n; ++i) {
    Point2 x = scan.points[i];
    for (int iter = 0; iter < params.max_iterations; ++iter) {
      Point2 sum{0.0, 0.0};
      std::size_t count = 0;
      for (const Point2& p : scan.points) {
        if (squared_norm(p - x) <= bw2) {
          sum = sum + p;
          ++count;
        }
      }
      if (count == 0) {
        break;
      }
      const Point2 mean = (1.0 / static_cast<double>(count)) * sum;
      const bool converged = distance(mean, x) < params.convergence_eps;
      x = mean;
      if (converged) {
        break;
      }
    }
    modes_of[i] = x;
  }

  std::vector<Point2> reps;
  std::vector<int> label(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t m = 0; m < reps.size(); ++m) {
      if (distance(reps[m], modes_of[i]) < merge_radius) {
        label[i] = static_cast<int>(m);
        break;
      }
    }
    if (label[i] < 0) {
      label[i] = static_cast<int>(reps.size());
      reps.push_back(modes_of[i]);
    }
  }

  std::vector<Cluster> out(reps.size());
  for (std::size_t i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(label[i])].indices.push_back(i);
  }
  std::sort(out.begin(), out.end(), [](const Cluster& a, const Cluster& b) {
    return a.indices.front() < b.indices.front();
  });
  for (std::size_t c = 0; c < out.size(); ++c) {
    out[c].label = static_cast<int>(c);
    out[c].scan_frame = scan.frame_id;
  }
  return out;
}

}  // namespace lshape::testing

#endif  // LSHAPE_TESTS_REFERENCE_MEANSHIFT_HPP
