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

#include "lshape/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <vector>

#include "lshape/num_format.hpp"
#include "lshape/scan_io.hpp"

namespace lshape {

namespace {

constexpr const char* kNoiseColor = "#9e9e9e";
constexpr const char* kAxisColor = "#bdbdbd";
constexpr const char* kVertexColor = "#1565c0";
constexpr const char* kCornerColor = "#c62828";

constexpr const char* kPalette[] = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
    "#9467bd", "#8c564b", "#e377c2", "#17becf",
};
constexpr std::size_t kPaletteSize = std::size(kPalette);

const char* cluster_color(int label) {
  if (label < 0) {
    return kNoiseColor;
  }
  return kPalette[static_cast<std::size_t>(label) % kPaletteSize];
}

/// World-to-screen mapping: uniform scale, y up in world, y down on screen.
struct Viewport {
  double min_x = 0.0;
  double min_y = 0.0;
  double scale = 1.0;
  double offset_x = 0.0;
  double offset_y = 0.0;
  double height = 0.0;

  double sx(double wx) const { return offset_x + (wx - min_x) * scale; }
  double sy(double wy) const {
    return height - offset_y - (wy - min_y) * scale;
  }
};

Viewport make_viewport(const Scan& scan, std::span<const ClusterFit> fits,
                       const PlotOptions& options) {
  // The box always contains the world origin so the axes stay in view.
  double min_x = 0.0;
  double max_x = 0.0;
  double min_y = 0.0;
  double max_y = 0.0;
  const auto grow = [&](Point2 p) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  };
  for (const Point2& p : scan.points) {
    grow(p);
  }
  for (const ClusterFit& cf : fits) {
    for (const Point2& c : cf.fit.rect.corners) {
      grow(c);
    }
  }
  if (max_x - min_x < 2.0) {
    min_x -= 1.0;
    max_x += 1.0;
  }
  if (max_y - min_y < 2.0) {
    min_y -= 1.0;
    max_y += 1.0;
  }
  const double pad_x = 0.05 * (max_x - min_x);
  const double pad_y = 0.05 * (max_y - min_y);
  min_x -= pad_x;
  max_x += pad_x;
  min_y -= pad_y;
  max_y += pad_y;

  Viewport vp;
  vp.min_x = min_x;
  vp.min_y = min_y;
  vp.height = options.height_px;
  const double avail_w = options.width_px - 2.0 * options.margin_px;
  const double avail_h = options.height_px - 2.0 * options.margin_px;
  vp.scale = std::min(avail_w / (max_x - min_x), avail_h / (max_y - min_y));
  vp.offset_x =
      options.margin_px + 0.5 * (avail_w - (max_x - min_x) * vp.scale);
  vp.offset_y =
      options.margin_px + 0.5 * (avail_h - (max_y - min_y) * vp.scale);
  return vp;
}

void append_attr(std::string& out, const char* name, double value) {
  out += ' ';
  out += name;
  out += "=\"";
  append_fixed2(out, value);
  out += '"';
}

void append_line(std::string& out, double x1, double y1, double x2, double y2,
                 const char* color) {
  out += "<line";
  append_attr(out, "x1", x1);
  append_attr(out, "y1", y1);
  append_attr(out, "x2", x2);
  append_attr(out, "y2", y2);
  out += " stroke=\"";
  out += color;
  out += "\" stroke-width=\"1\"/>\n";
}

void append_star(std::string& out, double cx, double cy) {
  // Four-pointed star: eight vertices alternating between the outer and the
  // inner radius, first point up.
  constexpr double kOuter = 6.0;
  constexpr double kInner = 2.4;
  out += "<path d=\"";
  for (int i = 0; i < 8; ++i) {
    const double radius = (i % 2 == 0) ? kOuter : kInner;
    const double angle = -std::numbers::pi / 2 +
                         static_cast<double>(i) * std::numbers::pi / 4;
    out += (i == 0) ? "M " : "L ";
    append_fixed2(out, cx + radius * std::cos(angle));
    out += ' ';
    append_fixed2(out, cy + radius * std::sin(angle));
    out += ' ';
  }
  out += "Z\" fill=\"";
  out += kVertexColor;
  out += "\"/>\n";
}

void append_diamond(std::string& out, double cx, double cy) {
  constexpr double kRadius = 5.0;
  out += "<path d=\"M ";
  append_fixed2(out, cx);
  out += ' ';
  append_fixed2(out, cy - kRadius);
  out += " L ";
  append_fixed2(out, cx + kRadius);
  out += ' ';
  append_fixed2(out, cy);
  out += " L ";
  append_fixed2(out, cx);
  out += ' ';
  append_fixed2(out, cy + kRadius);
  out += " L ";
  append_fixed2(out, cx - kRadius);
  out += ' ';
  append_fixed2(out, cy);
  out += " Z\" fill=\"";
  out += kCornerColor;
  out += "\"/>\n";
}

}  // namespace

std::string render_svg(const Scan& scan, std::span<const Cluster> clusters,
                       std::span<const ClusterFit> fits,
                       const PlotOptions& options) {
  const Viewport vp = make_viewport(scan, fits, options);

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\"";
  append_attr(out, "width", options.width_px);
  append_attr(out, "height", options.height_px);
  out += " viewBox=\"0 0 ";
  append_fixed2(out, options.width_px);
  out += ' ';
  append_fixed2(out, options.height_px);
  out += "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";

  // Axes through the world origin (always inside the viewport box).
  append_line(out, 0.0, vp.sy(0.0), options.width_px, vp.sy(0.0), kAxisColor);
  append_line(out, vp.sx(0.0), 0.0, vp.sx(0.0), options.height_px, kAxisColor);

  // Scan points, one circle each, colored by cluster.
  std::vector<const char*> point_color(scan.points.size(), kNoiseColor);
  for (const Cluster& cluster : clusters) {
    const char* color = cluster_color(cluster.label);
    for (const std::size_t i : cluster.indices) {
      if (i < point_color.size()) {
        point_color[i] = color;
      }
    }
  }
  for (std::size_t i = 0; i < scan.points.size(); ++i) {
    out += "<circle";
    append_attr(out, "cx", vp.sx(scan.points[i].x));
    append_attr(out, "cy", vp.sy(scan.points[i].y));
    out += " r=\"2\" fill=\"";
    out += point_color[i];
    out += "\"/>\n";
  }

  // One polygon outline per fit.
  for (const ClusterFit& cf : fits) {
    out += "<polygon points=\"";
    for (std::size_t c = 0; c < 4; ++c) {
      if (c > 0) {
        out += ' ';
      }
      append_fixed2(out, vp.sx(cf.fit.rect.corners[c].x));
      out += ',';
      append_fixed2(out, vp.sy(cf.fit.rect.corners[c].y));
    }
    out += "\" fill=\"none\" stroke=\"";
    out += cluster_color(cf.label);
    out += "\" stroke-width=\"1.5\"/>\n";
  }

  if (options.draw_markers) {
    for (const ClusterFit& cf : fits) {
      if (cf.fit.vertexes) {
        append_star(out, vp.sx(cf.fit.vertexes->v_a.x),
                    vp.sy(cf.fit.vertexes->v_a.y));
        append_star(out, vp.sx(cf.fit.vertexes->v_b.x),
                    vp.sy(cf.fit.vertexes->v_b.y));
      }
      if (cf.fit.corner) {
        append_diamond(out, vp.sx(cf.fit.corner->corner.x),
                       vp.sy(cf.fit.corner->corner.y));
      }
    }
  }

  out += "</svg>\n";
  return out;
}

void write_svg(const std::filesystem::path& path, const Scan& scan,
               std::span<const Cluster> clusters,
               std::span<const ClusterFit> fits, const PlotOptions& options) {
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    throw IoError("cannot open " + path.string() + " for writing");
  }
  const std::string svg = render_svg(scan, clusters, fits, options);
  file << svg;
  if (!file) {
    throw IoError("failed writing " + path.string());
  }
}

}  // namespace lshape
