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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "lshape/pipeline.hpp"
#include "lshape/scan_sim.hpp"
#include "support/fixtures.hpp"

namespace {

constexpr double kPi = std::numbers::pi;

/// Angle difference modulo a quarter turn (box headings are 4-fold symmetric).
double quarter_diff(double a, double b) {
  double r = std::fmod(std::abs(lshape::wrap_angle(a - b)), kPi / 2.0);
  return std::min(r, kPi / 2.0 - r);
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    lines.push_back(line);
  }
  return lines;
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) {
    tokens.push_back(tok);
  }
  return tokens;
}

lshape::ClockNs fake_clock(std::uint64_t* state, std::uint64_t step) {
  return [state, step]() {
    *state += step;
    return *state;
  };
}

}  // namespace

TEST_SUITE_BEGIN("pipeline");

TEST_CASE("single vehicle end to end") {
  const lshape::sim::Scene scene =
      lshape::sim::make_scene(lshape::sim::ScenePreset::single_l, 3);
  const auto labeled = lshape::sim::raycast(scene.sensor, scene.vehicles);
  const lshape::FrameResult result =
      lshape::run_pipeline(labeled.scan, lshape::PipelineConfig{});

  REQUIRE(result.fits.size() == 1);
  CHECK(result.rejected_clusters == 0);
  CHECK(result.timing.per_cluster_us.size() == 1);
  const lshape::OrientedRect& rect = result.fits[0].fit.rect;
  CHECK(quarter_diff(rect.heading, scene.vehicles[0].heading) <
        2.0 * kPi / 180.0);
  CHECK(lshape::distance(rect.center(), scene.vehicles[0].center) < 0.3);
  CHECK_FALSE(result.fits[0].fit.degenerate);
  REQUIRE(result.fits[0].fit.corner.has_value());
  // The fitted corner sits near the true near corner of the vehicle.
  double best = 1e9;
  for (const lshape::Point2 c : lshape::sim::rect_corners(scene.vehicles[0])) {
    best = std::min(best, lshape::distance(c, result.fits[0].fit.corner->corner));
  }
  CHECK(best < 0.2);
}

TEST_CASE("broadside view collapses to a line-like box") {
  const lshape::sim::Scene scene =
      lshape::sim::make_scene(lshape::sim::ScenePreset::broadside_line, 2);
  const auto labeled = lshape::sim::raycast(scene.sensor, scene.vehicles);
  const lshape::FrameResult result =
      lshape::run_pipeline(labeled.scan, lshape::PipelineConfig{});

  REQUIRE(result.fits.size() == 1);
  const lshape::OrientedRect& rect = result.fits[0].fit.rect;
  CHECK(quarter_diff(rect.heading, scene.vehicles[0].heading) <
        2.0 * kPi / 180.0);
  CHECK(rect.extent_along(scene.vehicles[0].heading) ==
        doctest::Approx(4.5).epsilon(0.08));
  // Only one face is visible, so the box is thin regardless of which code
  // path produced it.
  CHECK(rect.extent_along(scene.vehicles[0].heading + kPi / 2.0) < 0.3);
}

TEST_CASE("occluded pair: each cluster maps to its own vehicle") {
  const lshape::sim::Scene scene = lshape::sim::make_scene(
      lshape::sim::ScenePreset::two_vehicles_occluding, 5);
  const auto labeled = lshape::sim::raycast(scene.sensor, scene.vehicles);
  const lshape::FrameResult result =
      lshape::run_pipeline(labeled.scan, lshape::PipelineConfig{});

  REQUIRE(result.fits.size() == 2);
  std::vector<int> majority;
  for (const lshape::ClusterFit& cf : result.fits) {
    std::map<int, std::size_t> votes;
    for (const std::size_t i : cf.indices) {
      ++votes[labeled.vehicle_ids[i]];
    }
    int winner = -1;
    std::size_t count = 0;
    for (const auto& [id, n] : votes) {
      if (n > count) {
        winner = id;
        count = n;
      }
    }
    // Clusters are pure: every point of the cluster comes from one vehicle.
    CHECK(count == cf.indices.size());
    majority.push_back(winner);
  }
  std::sort(majority.begin(), majority.end());
  CHECK(majority == std::vector<int>{0, 1});
}

TEST_CASE("small clusters are rejected, not fitted") {
  const lshape::Scan scan = lshape::testing::two_blob_outlier();
  lshape::PipelineConfig config;
  config.fit.min_cluster_size = 50;
  const lshape::FrameResult result = lshape::run_pipeline(scan, config);
  CHECK(result.fits.empty());
  CHECK(result.rejected_clusters == 2);
  CHECK(result.timing.per_cluster_us.empty());
}

TEST_CASE("segmentation method changes what reaches the fitter") {
  const lshape::Scan scan = lshape::testing::two_blob_outlier();
  const lshape::PipelineConfig config;

  const lshape::FrameResult by_dbscan =
      lshape::run_pipeline(scan, config, lshape::SegmentMethod::dbscan);
  CHECK(by_dbscan.fits.size() == 2);
  REQUIRE(by_dbscan.clusters.size() == 3);  // two clusters + noise group
  CHECK(by_dbscan.clusters.back().is_noise());
  CHECK(by_dbscan.clusters.back().indices ==
        std::vector<std::size_t>{20});

  const lshape::FrameResult by_meanshift =
      lshape::run_pipeline(scan, config, lshape::SegmentMethod::meanshift);
  CHECK(by_meanshift.fits.size() == 2);
  REQUIRE(by_meanshift.clusters.size() == 2);  // the stray point is absorbed
  CHECK(by_meanshift.clusters[0].indices.size() == 11);
}

TEST_CASE("empty scan") {
  const lshape::FrameResult result =
      lshape::run_pipeline(lshape::Scan{}, lshape::PipelineConfig{});
  CHECK(result.clusters.empty());
  CHECK(result.fits.empty());
  CHECK(result.rejected_clusters == 0);
  CHECK(lshape::format_detections(result).empty());

  const lshape::FrameResult ms = lshape::run_pipeline(
      lshape::Scan{}, lshape::PipelineConfig{}, lshape::SegmentMethod::meanshift);
  CHECK(ms.fits.empty());
}

TEST_CASE("invalid config is rejected up front") {
  lshape::PipelineConfig config;
  config.dbscan.epsilon = 0.0;
  CHECK_THROWS_AS(lshape::run_pipeline(lshape::Scan{}, config),
                  std::invalid_argument);
}

TEST_CASE("fake clock makes stage timing exact") {
  const lshape::Scan scan = lshape::testing::two_blob_outlier();
  std::uint64_t state = 0;
  const lshape::FrameResult result = lshape::run_pipeline(
      scan, lshape::PipelineConfig{}, lshape::SegmentMethod::dbscan,
      fake_clock(&state, 2'000'000));
  CHECK(result.timing.segment_us == 2000);
  REQUIRE(result.timing.per_cluster_us.size() == 2);
  CHECK(result.timing.per_cluster_us[0] == 2000);
  CHECK(result.timing.per_cluster_us[1] == 2000);
  CHECK(result.timing.fit_total_us == 4000);
}

TEST_CASE("detection lines have the documented shape") {
  const lshape::sim::Scene scene = lshape::sim::make_scene(
      lshape::sim::ScenePreset::two_vehicles_occluding, 9);
  auto labeled = lshape::sim::raycast(scene.sensor, scene.vehicles);
  labeled.scan.frame_id = 17;
  const lshape::FrameResult result =
      lshape::run_pipeline(labeled.scan, lshape::PipelineConfig{});

  const std::string text = lshape::format_detections(result);
  const auto lines = lines_of(text);
  REQUIRE(lines.size() == result.fits.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto tok = tokens_of(lines[i]);
    REQUIRE(tok.size() == 8);
    CHECK(tok[0] == "17");
    CHECK(std::stoi(tok[1]) == result.fits[i].label);
    for (int f = 2; f < 7; ++f) {
      CHECK(std::isfinite(std::stod(tok[static_cast<std::size_t>(f)])));
    }
    CHECK((tok[7] == "0" || tok[7] == "1"));
    // Shortest round-trip output parses back to the exact double.
    const lshape::OrientedRect& rect = result.fits[i].fit.rect;
    CHECK(std::stod(tok[5]) ==
          doctest::Approx(rect.extent_along(rect.heading)).epsilon(1e-12));
  }

  const std::vector<lshape::FrameResult> both = {result, result};
  CHECK(lshape::format_detections(both) == text + text);
}

TEST_CASE("pipeline output is reproducible byte for byte") {
  const lshape::sim::Scene scene = lshape::sim::make_scene(
      lshape::sim::ScenePreset::two_vehicles_occluding, 11);
  const auto labeled = lshape::sim::raycast(scene.sensor, scene.vehicles);
  const lshape::FrameResult a =
      lshape::run_pipeline(labeled.scan, lshape::PipelineConfig{});
  const lshape::FrameResult b =
      lshape::run_pipeline(labeled.scan, lshape::PipelineConfig{});
  CHECK(lshape::format_detections(a) == lshape::format_detections(b));
  REQUIRE(a.fits.size() == b.fits.size());
  for (std::size_t i = 0; i < a.fits.size(); ++i) {
    for (int c = 0; c < 4; ++c) {
      CHECK(a.fits[i].fit.rect.corners[static_cast<std::size_t>(c)] ==
            b.fits[i].fit.rect.corners[static_cast<std::size_t>(c)]);
    }
  }
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("bench");

TEST_CASE("fake clock yields exact statistics") {
  const lshape::sim::Scene scene =
      lshape::sim::make_scene(lshape::sim::ScenePreset::single_l, 1);
  const auto labeled = lshape::sim::raycast(scene.sensor, scene.vehicles);
  const std::vector<lshape::Scan> scans = {labeled.scan, labeled.scan,
                                           labeled.scan};

  std::uint64_t state = 0;
  lshape::BenchOptions options;
  options.repeats = 2;
  options.clock_ns = fake_clock(&state, 1'000'000);  // 1 ms per tick
  const lshape::BenchReport report =
      lshape::bench(scans, lshape::PipelineConfig{}, lshape::FitMethod::search,
                    options);
  CHECK(report.n_frames == 6);
  CHECK(report.mean_ms == 1.0);
  CHECK(report.stddev_ms == 0.0);
  CHECK(report.method == lshape::FitMethod::search);
}

TEST_CASE("real clock, both methods") {
  const lshape::sim::Scene scene =
      lshape::sim::make_scene(lshape::sim::ScenePreset::single_l, 4);
  const auto labeled = lshape::sim::raycast(scene.sensor, scene.vehicles);
  const std::vector<lshape::Scan> scans = {labeled.scan};

  lshape::BenchOptions options;
  options.repeats = 2;
  for (const lshape::FitMethod method :
       {lshape::FitMethod::search, lshape::FitMethod::baseline}) {
    const lshape::BenchReport report =
        lshape::bench(scans, lshape::PipelineConfig{}, method, options);
    CHECK(report.n_frames == 2);
    CHECK(report.mean_ms >= 0.0);
    CHECK(report.stddev_ms >= 0.0);
    CHECK(std::isfinite(report.mean_ms));
    CHECK(report.environment == lshape::describe_environment());
  }
}

TEST_CASE("bench input validation") {
  const std::vector<lshape::Scan> none;
  CHECK_THROWS_AS(lshape::bench(none, lshape::PipelineConfig{},
                                lshape::FitMethod::search),
                  std::invalid_argument);
  const lshape::Scan scan = lshape::testing::two_blob_outlier();
  const std::vector<lshape::Scan> one = {scan};
  lshape::BenchOptions options;
  options.repeats = 0;
  CHECK_THROWS_AS(lshape::bench(one, lshape::PipelineConfig{},
                                lshape::FitMethod::search, options),
                  std::invalid_argument);
}

TEST_CASE("report format") {
  lshape::BenchReport report;
  report.method = lshape::FitMethod::baseline;
  report.mean_ms = 1.5;
  report.stddev_ms = 0.25;
  report.n_frames = 42;
  report.environment = "gcc 11.4.0, C++20, optimized";
  CHECK(lshape::format_report(report) ==
        "method=baseline mean_ms=1.5 stddev_ms=0.25 n_frames=42 "
        "env=\"gcc 11.4.0, C++20, optimized\"\n");
  const std::string env = lshape::describe_environment();
  CHECK(env.find("C++20") != std::string::npos);
}

TEST_SUITE_END();
