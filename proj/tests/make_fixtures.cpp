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

// Writes the golden files consumed by the test suite into the directory given
// as the only argument. The tests recompute the same artifacts and compare
// byte for byte, so regenerate these only for intended behavior changes.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "lshape/num_format.hpp"
#include "lshape/pipeline.hpp"
#include "lshape/scan_io.hpp"
#include "lshape/scan_sim.hpp"
#include "lshape/svg_plot.hpp"

namespace {

void write(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write " + path.string());
  }
  out << content;
  std::cout << "wrote " << path.string() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: lshape_make_fixtures <data-dir>\n";
    return 2;
  }
  const std::filesystem::path dir = argv[1];
  std::filesystem::create_directories(dir);

  const lshape::sim::Scene scene =
      lshape::sim::make_scene(lshape::sim::ScenePreset::single_l, 1);
  const auto labeled = lshape::sim::raycast(scene.sensor, scene.vehicles);
  write(dir / "golden_single_L.csv", lshape::scan_to_csv(labeled.scan));

  const lshape::FrameResult result =
      lshape::run_pipeline(labeled.scan, lshape::PipelineConfig{});
  write(dir / "golden_plot.svg",
        lshape::render_svg(labeled.scan, result.clusters, result.fits));

  const lshape::sim::Scene random_scene =
      lshape::sim::make_scene(lshape::sim::ScenePreset::random_field, 7);
  std::string snapshot = std::to_string(random_scene.vehicles.size()) + "\n";
  for (const lshape::sim::VehicleSpec& v : random_scene.vehicles) {
    snapshot += lshape::format_double(v.center.x) + " " +
                lshape::format_double(v.center.y) + " " +
                lshape::format_double(v.heading) + "\n";
  }
  write(dir / "random_scene_seed7.txt", snapshot);
  return 0;
}
