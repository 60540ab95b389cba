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

#ifndef LSHAPE_SVG_PLOT_HPP
#define LSHAPE_SVG_PLOT_HPP

#include <filesystem>
#include <span>
#include <string>

#include "lshape/pipeline.hpp"
#include "lshape/segmentation.hpp"

namespace lshape {

struct PlotOptions {
  double width_px = 800.0;
  double height_px = 600.0;
  double margin_px = 40.0;
  /// Star markers on the vertex pair and a diamond on the corner.
  bool draw_markers = true;
};

/// Renders one frame as a standalone SVG document: scan points colored per
/// cluster (noise in gray), exactly one <polygon> outline per fit, and
/// optional vertex/corner markers as <path> elements. The x/y axes are always
/// drawn; an empty frame renders as axes only. Output is byte deterministic:
/// numbers are formatted with to_chars and the document carries no timestamps
/// or other environment-dependent content.
std::string render_svg(const Scan& scan, std::span<const Cluster> clusters,
                       std::span<const ClusterFit> fits,
                       const PlotOptions& options = {});

/// render_svg written to a file. Throws IoError on failure.
void write_svg(const std::filesystem::path& path, const Scan& scan,
               std::span<const Cluster> clusters,
               std::span<const ClusterFit> fits,
               const PlotOptions& options = {});

}  // namespace lshape

#endif  // LSHAPE_SVG_PLOT_HPP
