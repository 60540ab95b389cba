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

#ifndef LSHAPE_PIPELINE_HPP
#define LSHAPE_PIPELINE_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "lshape/config.hpp"
#include "lshape/fitting.hpp"
#include "lshape/segmentation.hpp"

namespace lshape {

/// Nanosecond clock used for stage timing. An empty function selects
/// std::chrono::steady_clock; tests inject fake clocks.
using ClockNs = std::function<std::uint64_t()>;

enum class SegmentMethod { dbscan, meanshift };

/// One fitted cluster inside a frame.
struct ClusterFit {
  int label = 0;
  std::vector<std::size_t> indices;
  LShapeFit fit;
};

/// Wall-clock cost of the two pipeline stages, in microseconds.
struct StageTiming {
  std::uint64_t segment_us = 0;
  std::uint64_t fit_total_us = 0;
  /// Aligned with FrameResult::fits; rejected clusters only contribute to
  /// fit_total_us.
  std::vector<std::uint64_t> per_cluster_us;
};

struct FrameResult {
  int frame_id = 0;
  /// The full segmentation output, noise group included.
  std::vector<Cluster> clusters;
  std::vector<ClusterFit> fits;
  /// Non-noise clusters dropped for having fewer than min_cluster_size
  /// points.
  std::size_t rejected_clusters = 0;
  StageTiming timing;
};

/// Segments one scan, drops the noise group, and runs the L-shape fit on
/// every remaining cluster. Clusters below fit.min_cluster_size are counted
/// in rejected_clusters instead of fitted.
FrameResult run_pipeline(const Scan& scan, const PipelineConfig& config,
                         SegmentMethod method = SegmentMethod::dbscan,
                         const ClockNs& clock = {});

/// One detection line per fitted cluster, space separated:
///   frame cluster cx cy heading length width degenerate
/// length is the box extent along the heading, width the perpendicular one.
/// Numbers are emitted in shortest round-trip form, so equal results always
/// serialize to identical bytes. Timing is deliberately not included.
std::string format_detections(const FrameResult& result);
std::string format_detections(std::span<const FrameResult> results);

enum class FitMethod { search, baseline };

struct BenchOptions {
  int repeats = 5;
  /// When false (default) a frame's time is the fit stage only; segmentation
  /// runs but is not counted.
  bool include_segmentation = false;
  /// Grid step of the baseline method, radians.
  double baseline_resolution = 0.008726646259971648;  // 0.5 deg
  SegmentMethod segment_method = SegmentMethod::dbscan;
  ClockNs clock_ns;
};

struct BenchReport {
  FitMethod method = FitMethod::search;
  double mean_ms = 0.0;
  double stddev_ms = 0.0;  // population standard deviation
  std::size_t n_frames = 0;
  std::string environment;
};

/// Times the chosen fit method over repeats x scans frames. One untimed
/// warm-up pass over all scans precedes measurement. Throws
/// std::invalid_argument on empty input or repeats < 1.
BenchReport bench(std::span<const Scan> scans, const PipelineConfig& config,
                  FitMethod method, const BenchOptions& options = {});

/// Compiler / standard / build-type string stamped into bench reports.
/// Deterministic: contains nothing host- or time-dependent.
std::string describe_environment();

std::string format_report(const BenchReport& report);

}  // namespace lshape

#endif  // LSHAPE_PIPELINE_HPP
