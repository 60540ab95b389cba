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

#ifndef LSHAPE__CONFIG_HPP_
#define LSHAPE__CONFIG_HPP_

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "lshape/fitting.hpp"
#include "lshape/segmentation.hpp"

namespace lshape {

/// Malformed config file or invalid parameter value.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// All tunables of the segment-then-fit pipeline in one place.
struct PipelineConfig {
  DbscanParams dbscan;
  MeanShiftParams meanshift;
  FitConfig fit;

  /// Throws std::invalid_argument if any section fails its own validate().
  void validate() const;
};

/// Parses `key = value` text into a config, starting from defaults.
///
/// Grammar: one assignment per line, '#' starts a comment, blank lines are
/// skipped.  Keys are dotted ("dbscan.epsilon", "fit.vertex_k", ...).
/// Unknown keys and unparsable values raise ConfigError with the line
/// number; silently ignoring typos would make bad runs look like defaults.
/// Environment variables are never consulted.
PipelineConfig parse_config(std::string_view text,
                            PipelineConfig base = PipelineConfig{});

/// parse_config over the file's contents.  Throws ConfigError if the file
/// cannot be read.
PipelineConfig load_config(const std::filesystem::path& path,
                           PipelineConfig base = PipelineConfig{});

}  // namespace lshape

#endif  // LSHAPE__CONFIG_HPP_
