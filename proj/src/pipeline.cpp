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

#include "lshape/pipeline.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "lshape/num_format.hpp"

namespace lshape {

namespace {

std::uint64_t steady_ns() {
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(
          std::chrono::steady_clock::now().time_since_epoch())
          .count());
}

const ClockNs& resolve_clock(const ClockNs& clock) {
  static const ClockNs fallback = steady_ns;
  return clock ? clock : fallback;
}

std::vector<Cluster> segment(const Scan& scan, const PipelineConfig& config,
                             SegmentMethod method) {
  if (method == SegmentMethod::dbscan) {
    return dbscan(scan, config.dbscan);
  }
  if (scan.points.empty()) {
    return {};
  }
  return mean_shift(scan, config.meanshift);
}

std::vector<Point2> gather(const Scan& scan,
                           std::span<const std::size_t> indices) {
  std::vector<Point2> points;
  points.reserve(indices.size());
  for (const std::size_t i : indices) {
    points.push_back(scan.points[i]);
  }
  return points;
}

}  // namespace

FrameResult run_pipeline(const Scan& scan, const PipelineConfig& config,
                         SegmentMethod method, const ClockNs& clock) {
  config.validate();
  const ClockNs& now = resolve_clock(clock);

  FrameResult result;
  result.frame_id = scan.frame_id;

  const std::uint64_t t0 = now();
  std::vector<Cluster> clusters = segment(scan, config, method);
  const std::uint64_t t1 = now();
  result.timing.segment_us = (t1 - t0) / 1000;

  std::uint64_t fit_ns = 0;
  for (const Cluster& cluster : clusters) {
    if (cluster.is_noise()) {
      continue;
    }
    const std::vector<Point2> points = gather(scan, cluster.indices);
    const std::uint64_t f0 = now();
    std::optional<LShapeFit> fit = fit_cluster(points, config.fit);
    const std::uint64_t f1 = now();
    fit_ns += f1 - f0;
    if (!fit) {
      ++result.rejected_clusters;
      continue;
    }
    result.timing.per_cluster_us.push_back((f1 - f0) / 1000);
    result.fits.push_back(
        ClusterFit{cluster.label, cluster.indices, std::move(*fit)});
  }
  result.timing.fit_total_us = fit_ns / 1000;
  result.clusters = std::move(clusters);
  return result;
}

std::string format_detections(const FrameResult& result) {
  std::string out;
  for (const ClusterFit& cf : result.fits) {
    const OrientedRect& rect = cf.fit.rect;
    const Point2 c = rect.center();
    out += std::to_string(result.frame_id);
    out.push_back(' ');
    out += std::to_string(cf.label);
    out.push_back(' ');
    append_double(out, c.x);
    out.push_back(' ');
    append_double(out, c.y);
    out.push_back(' ');
    append_double(out, rect.heading);
    out.push_back(' ');
    append_double(out, rect.extent_along(rect.heading));
    out.push_back(' ');
    append_double(out, rect.extent_along(rect.heading + std::numbers::pi / 2));
    out.push_back(' ');
    out.push_back(cf.fit.degenerate ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

std::string format_detections(std::span<const FrameResult> results) {
  std::string out;
  for (const FrameResult& r : results) {
    out += format_detections(r);
  }
  return out;
}

BenchReport bench(std::span<const Scan> scans, const PipelineConfig& config,
                  FitMethod method, const BenchOptions& options) {
  if (scans.empty()) {
    throw std::invalid_argument("bench: no scans");
  }
  if (options.repeats < 1) {
    throw std::invalid_argument("bench: repeats must be >= 1");
  }
  config.validate();
  const ClockNs& now = resolve_clock(options.clock_ns);

  // Segmentation is identical across repeats and methods, so it is done once
  // per scan up front; its cost is measured here and added to each frame when
  // include_segmentation is set.
  std::vector<std::vector<std::vector<Point2>>> frames(scans.size());
  std::vector<std::uint64_t> segment_ns(scans.size(), 0);
  for (std::size_t s = 0; s < scans.size(); ++s) {
    const std::uint64_t t0 = now();
    const std::vector<Cluster> clusters =
        segment(scans[s], config, options.segment_method);
    segment_ns[s] = now() - t0;
    for (const Cluster& cluster : clusters) {
      if (cluster.is_noise() ||
          cluster.indices.size() <
              static_cast<std::size_t>(config.fit.min_cluster_size) ||
          cluster.indices.size() < 4) {
        continue;
      }
      frames[s].push_back(gather(scans[s], cluster.indices));
    }
  }

  // The checksum keeps the optimizer from discarding the timed work.
  volatile double sink = 0.0;
  const auto fit_frame = [&](const std::vector<std::vector<Point2>>& frame) {
    double acc = 0.0;
    for (const std::vector<Point2>& points : frame) {
      if (method == FitMethod::search) {
        const auto fit = fit_cluster(points, config.fit);
        acc += fit ? fit->rect.heading : 0.0;
      } else {
        acc +=
            baseline_angle_search(points, options.baseline_resolution).heading;
      }
    }
    sink = sink + acc;
  };

  // Untimed warm-up pass.
  for (const auto& frame : frames) {
    fit_frame(frame);
  }

  std::vector<double> frame_ms;
  frame_ms.reserve(scans.size() * static_cast<std::size_t>(options.repeats));
  for (int rep = 0; rep < options.repeats; ++rep) {
    for (std::size_t s = 0; s < scans.size(); ++s) {
      const std::uint64_t t0 = now();
      fit_frame(frames[s]);
      std::uint64_t elapsed = now() - t0;
      if (options.include_segmentation) {
        elapsed += segment_ns[s];
      }
      frame_ms.push_back(static_cast<double>(elapsed) * 1e-6);
    }
  }

  BenchReport report;
  report.method = method;
  report.n_frames = frame_ms.size();
  report.environment = describe_environment();
  double sum = 0.0;
  for (const double v : frame_ms) {
    sum += v;
  }
  report.mean_ms = sum / static_cast<double>(frame_ms.size());
  double sq = 0.0;
  for (const double v : frame_ms) {
    sq += (v - report.mean_ms) * (v - report.mean_ms);
  }
  report.stddev_ms = std::sqrt(sq / static_cast<double>(frame_ms.size()));
  return report;
}

std::string describe_environment() {
  std::string env;
#if defined(__clang__)
  env += "clang ";
  env += __clang_version__;
#elif defined(__GNUC__)
  env += "gcc " + std::to_string(__GNUC__) + "." +
         std::to_string(__GNUC_MINOR__) + "." +
         std::to_string(__GNUC_PATCHLEVEL__);
#else
  env += "unknown compiler";
#endif
  env += ", C++" + std::to_string(__cplusplus / 100 % 100);
#if defined(NDEBUG)
  env += ", optimized";
#else
  env += ", debug";
#endif
  return env;
}

std::string format_report(const BenchReport& report) {
  std::string out = "method=";
  out += report.method == FitMethod::search ? "search" : "baseline";
  out += " mean_ms=";
  append_double(out, report.mean_ms);
  out += " stddev_ms=";
  append_double(out, report.stddev_ms);
  out += " n_frames=" + std::to_string(report.n_frames);
  out += " env=\"" + report.environment + "\"\n";
  return out;
}

}  // namespace lshape
