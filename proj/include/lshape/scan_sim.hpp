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

#ifndef LSHAPE_SCAN_SIM_HPP
#define LSHAPE_SCAN_SIM_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "lshape/segmentation.hpp"

namespace lshape::sim {

/// A rectangular target. `heading` points along the length axis.
struct VehicleSpec {
  Point2 center{0.0, 0.0};
  double heading = 0.0;
  double length = 4.5;
  double width = 1.8;
};

/// A 2D scanning laser. Bearings run from fov_start to fov_end (inclusive
/// when the resolution divides the span) in steps of angular_resolution.
/// Range noise is Gaussian along the ray; `seed` makes scans reproducible.
struct SensorSpec {
  Point2 origin{0.0, 0.0};
  double fov_start = -1.4;
  double fov_end = 1.4;
  double angular_resolution = 0.004363323129985824;  // 0.25 deg
  double max_range = 80.0;
  double range_noise_sigma = 0.02;
  std::uint64_t seed = 1;
};

/// A scan plus the ground-truth vehicle index of every point.
struct LabeledScan {
  Scan scan;
  std::vector<int> vehicle_ids;
};

/// The four corner points, counterclockwise starting at the front-left one.
std::array<Point2, 4> rect_corners(const VehicleSpec& vehicle);

/// True when the two rectangles, each inflated by `inflate` on every side,
/// intersect (separating-axis test).
bool rects_overlap(const VehicleSpec& a, const VehicleSpec& b,
                   double inflate = 0.0);

/// Casts one ray per bearing and keeps the nearest perimeter intersection
/// within max_range; rays that hit nothing produce no point. Gaussian range
/// noise (sigma = range_noise_sigma) is applied along the ray. Throws
/// std::invalid_argument on invalid sensor parameters.
LabeledScan raycast(const SensorSpec& sensor,
                    std::span<const VehicleSpec> vehicles);

/// Exact contour sampling of a single vehicle: the faces visible from
/// `origin` are sampled at fixed arc spacing starting at the corner shared by
/// the two visible faces (the corner itself is included exactly once), so the
/// corner is a sample point. No noise, no ray quantization, no occlusion
/// handling. `corner` is empty when fewer than two faces are visible (the
/// single visible face is then sampled from its first corner); `points` is
/// empty when the origin lies inside the rectangle.
struct ContourSample {
  std::vector<Point2> points;
  std::optional<Point2> corner;
  int visible_faces = 0;
};

ContourSample sample_contour(const VehicleSpec& vehicle, Point2 origin,
                             double spacing);

enum class ScenePreset {
  single_l,               // one vehicle at 45 deg, 12 m ahead, both sides visible
  broadside_line,         // one vehicle showing exactly one side
  two_vehicles_occluding, // second vehicle partially shadowed by the first
  parking_row,            // four vehicles side by side
  random_field,           // seeded random poses in a 40 m x 40 m field
};

struct Scene {
  SensorSpec sensor;
  std::vector<VehicleSpec> vehicles;
};

/// Builds a preset scene. `seed` picks the vehicle poses of random_field and
/// the sensor noise seed of every preset.
Scene make_scene(ScenePreset preset, std::uint64_t seed = 0);

/// Preset from its CLI name (single_L, broadside_line,
/// two_vehicles_occluding, parking_row, random).
std::optional<ScenePreset> parse_preset(std::string_view name);
std::string_view preset_name(ScenePreset preset);

}  // namespace lshape::sim

#endif  // LSHAPE_SCAN_SIM_HPP
