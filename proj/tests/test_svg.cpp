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

#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "lshape/pipeline.hpp"
#include "lshape/scan_io.hpp"
#include "lshape/scan_sim.hpp"
#include "lshape/svg_plot.hpp"
#include "support/fixtures.hpp"

namespace {

std::size_t count_occurrences(const std::string& text,
                              const std::string& needle) {
  std::size_t count = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + needle.size())) {
    ++count;
  }
  return count;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(static_cast<bool>(in), "missing fixture ", path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

lshape::FrameResult demo_result(lshape::Scan* scan) {
  *scan = lshape::testing::two_blob_outlier();
  return lshape::run_pipeline(*scan, lshape::PipelineConfig{});
}

}  // namespace

TEST_SUITE_BEGIN("svg_plot");

TEST_CASE("document structure matches the frame") {
  lshape::Scan scan;
  const lshape::FrameResult result = demo_result(&scan);
  REQUIRE(result.fits.size() == 2);

  const std::string svg =
      lshape::render_svg(scan, result.clusters, result.fits);
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(count_occurrences(svg, "<circle") == scan.points.size());
  CHECK(count_occurrences(svg, "<polygon") == result.fits.size());
  // Two axis lines are always present.
  CHECK(count_occurrences(svg, "<line") == 2);
  // The stray point keeps the noise color.
  CHECK(svg.find("#9e9e9e") != std::string::npos);
  // No timestamps or generator stamps sneak in.
  CHECK(svg.find("date") == std::string::npos);
  CHECK(svg.find("Generated") == std::string::npos);
}

TEST_CASE("markers toggle with draw_markers") {
  lshape::Scan scan;
  const lshape::FrameResult result = demo_result(&scan);

  lshape::PlotOptions with;
  const std::string marked =
      lshape::render_svg(scan, result.clusters, result.fits, with);
  // A star per vertex pair member and a diamond per localized corner.
  CHECK(count_occurrences(marked, "<path") > 0);
  CHECK(marked.find("#1565c0") != std::string::npos);

  lshape::PlotOptions without;
  without.draw_markers = false;
  const std::string plain =
      lshape::render_svg(scan, result.clusters, result.fits, without);
  CHECK(count_occurrences(plain, "<path") == 0);
  CHECK(plain.find("#1565c0") == std::string::npos);
  CHECK(plain.find("#c62828") == std::string::npos);
}

TEST_CASE("empty frame renders as axes only") {
  const lshape::Scan scan;
  const std::string svg = lshape::render_svg(scan, {}, {});
  CHECK(count_occurrences(svg, "<line") == 2);
  CHECK(count_occurrences(svg, "<circle") == 0);
  CHECK(count_occurrences(svg, "<polygon") == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
}

TEST_CASE("rendering is byte deterministic") {
  const lshape::sim::Scene scene =
      lshape::sim::make_scene(lshape::sim::ScenePreset::two_vehicles_occluding,
                              8);
  const auto labeled = lshape::sim::raycast(scene.sensor, scene.vehicles);
  const lshape::FrameResult r1 =
      lshape::run_pipeline(labeled.scan, lshape::PipelineConfig{});
  const lshape::FrameResult r2 =
      lshape::run_pipeline(labeled.scan, lshape::PipelineConfig{});
  const std::string a = lshape::render_svg(labeled.scan, r1.clusters, r1.fits);
  const std::string b = lshape::render_svg(labeled.scan, r2.clusters, r2.fits);
  CHECK(a == b);
}

TEST_CASE("golden plot stays stable") {
  const lshape::sim::Scene scene =
      lshape::sim::make_scene(lshape::sim::ScenePreset::single_l, 1);
  const auto labeled = lshape::sim::raycast(scene.sensor, scene.vehicles);
  const lshape::FrameResult result =
      lshape::run_pipeline(labeled.scan, lshape::PipelineConfig{});
  const std::string svg =
      lshape::render_svg(labeled.scan, result.clusters, result.fits);
  CHECK(svg == slurp(std::string(LSHAPE_TEST_DATA_DIR) + "/golden_plot.svg"));
}

TEST_CASE("write_svg reports io failures") {
  const lshape::Scan scan;
  CHECK_THROWS_AS(lshape::write_svg("/no/such/dir/plot.svg", scan, {}, {}),
                  lshape::IoError);
}

TEST_SUITE_END();
