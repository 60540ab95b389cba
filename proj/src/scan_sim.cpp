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

#include "lshape/scan_sim.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "lshape/rng.hpp"

namespace lshape::sim {

namespace {

constexpr double kPi = std::numbers::pi;

struct Segment {
  Point2 a;
  Point2 b;
};

std::array<Segment, 4> perimeter(const VehicleSpec& v) {
  const std::array<Point2, 4> c = rect_corners(v);
  return {Segment{c[0], c[1]}, Segment{c[1], c[2]}, Segment{c[2], c[3]},
          Segment{c[3], c[0]}};
}

// Ray parameter t of the intersection of origin + t*dir with the segment, or
// infinity when they miss each other.
double ray_segment(Point2 origin, Point2 dir, const Segment& seg) {
  const Point2 e = seg.b - seg.a;
  const double denom = cross(dir, e);
  if (std::abs(denom) < 1e-15) {
    return std::numeric_limits<double>::infinity();
  }
  const Point2 ao = seg.a - origin;
  const double t = cross(ao, e) / denom;
  const double s = cross(ao, dir) / denom;
  if (t <= 1e-9 || s < 0.0 || s > 1.0) {
    return std::numeric_limits<double>::infinity();
  }
  return t;
}

}  // namespace

std::array<Point2, 4> rect_corners(const VehicleSpec& vehicle) {
  const Point2 fwd = 0.5 * vehicle.length * unit_vector(vehicle.heading);
  const Point2 left =
      0.5 * vehicle.width * unit_vector(vehicle.heading + kPi / 2.0);
  return {vehicle.center + fwd + left, vehicle.center - fwd + left,
          vehicle.center - fwd - left, vehicle.center + fwd - left};
}

bool rects_overlap(const VehicleSpec& a, const VehicleSpec& b,
                   double inflate) {
  const VehicleSpec ia{a.center, a.heading, a.length + 2.0 * inflate,
                       a.width + 2.0 * inflate};
  const VehicleSpec ib{b.center, b.heading, b.length + 2.0 * inflate,
                       b.width + 2.0 * inflate};
  const std::array<Point2, 4> ca = rect_corners(ia);
  const std::array<Point2, 4> cb = rect_corners(ib);
  const std::array<double, 4> axes = {ia.heading, ia.heading + kPi / 2.0,
                                      ib.heading, ib.heading + kPi / 2.0};
  for (double axis : axes) {
    const Point2 dir = unit_vector(axis);
    double amin = std::numeric_limits<double>::infinity();
    double amax = -amin;
    double bmin = amin;
    double bmax = -amin;
    for (int i = 0; i < 4; ++i) {
      amin = std::min(amin, dot(ca[i], dir));
      amax = std::max(amax, dot(ca[i], dir));
      bmin = std::min(bmin, dot(cb[i], dir));
      bmax = std::max(bmax, dot(cb[i], dir));
    }
    if (amax < bmin || bmax < amin) {
      return false;
    }
  }
  return true;
}

LabeledScan raycast(const SensorSpec& sensor,
                    std::span<const VehicleSpec> vehicles) {
  if (!(sensor.angular_resolution > 0.0) || !(sensor.max_range > 0.0) ||
      sensor.range_noise_sigma < 0.0 || sensor.fov_end < sensor.fov_start) {
    throw std::invalid_argument("raycast: invalid sensor parameters");
  }
  std::vector<std::array<Segment, 4>> outlines;
  outlines.reserve(vehicles.size());
  for (const VehicleSpec& v : vehicles) {
    outlines.push_back(perimeter(v));
  }

  Xoshiro256pp rng(sensor.seed);
  LabeledScan out;
  out.scan.sensor_origin = sensor.origin;
  const int steps = static_cast<int>(
      std::floor((sensor.fov_end - sensor.fov_start) /
                     sensor.angular_resolution +
                 1e-9));
  for (int k = 0; k <= steps; ++k) {
    const double bearing =
        sensor.fov_start + static_cast<double>(k) * sensor.angular_resolution;
    const Point2 dir = unit_vector(bearing);
    double nearest = std::numeric_limits<double>::infinity();
    int hit = -1;
    for (std::size_t v = 0; v < outlines.size(); ++v) {
      for (const Segment& seg : outlines[v]) {
        const double t = ray_segment(sensor.origin, dir, seg);
        if (t < nearest) {
          nearest = t;
          hit = static_cast<int>(v);
        }
      }
    }
    if (hit < 0 || nearest > sensor.max_range) {
      continue;  // no return for this bearing
    }
    double range = nearest;
    if (sensor.range_noise_sigma > 0.0) {
      range += sensor.range_noise_sigma * rng.normal();
    }
    out.scan.points.push_back(sensor.origin + range * dir);
    out.vehicle_ids.push_back(hit);
  }
  return out;
}

ContourSample sample_contour(const VehicleSpec& vehicle, Point2 origin,
                             double spacing) {
  if (!(spacing > 0.0)) {
    throw std::invalid_argument("sample_contour: spacing must be positive");
  }
  const std::array<Point2, 4> c = rect_corners(vehicle);
  // face i runs from corner i to corner i+1; visible iff the origin lies on
  // the outward-normal side of its line.
  std::array<bool, 4> visible{};
  int n_visible = 0;
  for (int i = 0; i < 4; ++i) {
    const Point2 a = c[static_cast<std::size_t>(i)];
    const Point2 b = c[static_cast<std::size_t>((i + 1) % 4)];
    const Point2 edge = b - a;
    const Point2 outward{edge.y, -edge.x};  // corners are counterclockwise
    visible[static_cast<std::size_t>(i)] = dot(outward, origin - a) > 0.0;
    n_visible += visible[static_cast<std::size_t>(i)] ? 1 : 0;
  }

  ContourSample out;
  out.visible_faces = n_visible;
  const auto sample_from = [&](Point2 from, Point2 to, bool include_from) {
    const double len = distance(from, to);
    const Point2 dir = (1.0 / len) * (to - from);
    const int steps = static_cast<int>(std::floor(len / spacing + 1e-9));
    for (int k = include_from ? 0 : 1; k <= steps; ++k) {
      out.points.push_back(from + (static_cast<double>(k) * spacing) * dir);
    }
  };

  if (n_visible == 2) {
    // The shared corner of the two visible faces anchors both samplings.
    for (int i = 0; i < 4; ++i) {
      const int j = (i + 1) % 4;
      if (visible[static_cast<std::size_t>(i)] &&
          visible[static_cast<std::size_t>(j)]) {
        const Point2 shared = c[static_cast<std::size_t>(j)];
        out.corner = shared;
        sample_from(shared, c[static_cast<std::size_t>(i)], true);
        sample_from(shared, c[static_cast<std::size_t>((j + 1) % 4)], false);
        return out;
      }
    }
  }
  if (n_visible == 1) {
    for (int i = 0; i < 4; ++i) {
      if (visible[static_cast<std::size_t>(i)]) {
        sample_from(c[static_cast<std::size_t>(i)],
                    c[static_cast<std::size_t>((i + 1) % 4)], true);
        break;
      }
    }
  }
  return out;
}

Scene make_scene(ScenePreset preset, std::uint64_t seed) {
  Scene scene;
  scene.sensor.seed = seed + 1;  // noise stream; poses use `seed` directly
  switch (preset) {
    case ScenePreset::single_l:
      scene.sensor.fov_start = -0.8;
      scene.sensor.fov_end = 0.8;
      scene.vehicles.push_back({{12.0, 0.0}, kPi / 4.0, 4.5, 1.8});
      return scene;
    case ScenePreset::broadside_line:
      scene.sensor.fov_start = -0.8;
      scene.sensor.fov_end = 0.8;
      scene.vehicles.push_back({{10.0, 0.0}, kPi / 2.0, 4.5, 1.8});
      return scene;
    case ScenePreset::two_vehicles_occluding:
      scene.sensor.fov_start = -0.8;
      scene.sensor.fov_end = 0.8;
      scene.vehicles.push_back({{8.0, 0.0}, kPi / 2.0, 4.5, 1.8});
      scene.vehicles.push_back({{14.0, 6.0}, kPi / 4.0, 4.5, 1.8});
      return scene;
    case ScenePreset::parking_row:
      scene.sensor.fov_start = 0.5;
      scene.sensor.fov_end = 2.7;
      for (int i = 0; i < 4; ++i) {
        scene.vehicles.push_back(
            {{-6.0 + 4.0 * static_cast<double>(i), 10.0}, kPi / 2.0, 4.5, 1.8});
      }
      return scene;
    case ScenePreset::random_field: {
      Xoshiro256pp rng(seed);
      const int count = rng.uniform_int(2, 5);
      int attempts = 0;
      while (static_cast<int>(scene.vehicles.size()) < count &&
             attempts < 1000) {
        ++attempts;
        VehicleSpec v;
        v.center = {rng.uniform(5.0, 45.0), rng.uniform(-20.0, 20.0)};
        v.heading = rng.uniform(-kPi, kPi);
        if (norm(v.center) < 4.0) {
          continue;  // keep a clear zone around the sensor
        }
        bool clash = false;
        for (const VehicleSpec& other : scene.vehicles) {
          if (rects_overlap(v, other, 1.0)) {
            clash = true;
            break;
          }
        }
        if (!clash) {
          scene.vehicles.push_back(v);
        }
      }
      return scene;
    }
  }
  throw std::invalid_argument("make_scene: unknown preset");
}

std::optional<ScenePreset> parse_preset(std::string_view name) {
  if (name == "single_L") return ScenePreset::single_l;
  if (name == "broadside_line") return ScenePreset::broadside_line;
  if (name == "two_vehicles_occluding") {
    return ScenePreset::two_vehicles_occluding;
  }
  if (name == "parking_row") return ScenePreset::parking_row;
  if (name == "random") return ScenePreset::random_field;
  return std::nullopt;
}

std::string_view preset_name(ScenePreset preset) {
  switch (preset) {
    case ScenePreset::single_l:
      return "single_L";
    case ScenePreset::broadside_line:
      return "broadside_line";
    case ScenePreset::two_vehicles_occluding:
      return "two_vehicles_occluding";
    case ScenePreset::parking_row:
      return "parking_row";
    case ScenePreset::random_field:
      return "random";
  }
  return "unknown";
}

}  // namespace lshape::sim
