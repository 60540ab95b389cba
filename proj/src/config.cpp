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

#include "lshape/config.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "lshape/num_format.hpp"

namespace lshape {

void PipelineConfig::validate() const {
  if (dbscan.epsilon <= 0.0) {
    throw std::invalid_argument("dbscan.epsilon must be positive");
  }
  if (dbscan.min_pts < 1) {
    throw std::invalid_argument("dbscan.min_pts must be >= 1");
  }
  if (meanshift.bandwidth <= 0.0) {
    throw std::invalid_argument("meanshift.bandwidth must be positive");
  }
  if (meanshift.convergence_eps <= 0.0) {
    throw std::invalid_argument("meanshift.convergence_eps must be positive");
  }
  if (meanshift.max_iterations < 1) {
    throw std::invalid_argument("meanshift.max_iterations must be >= 1");
  }
  fit.validate();
}

namespace {

std::string_view trimmed(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' ||
                        s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

[[noreturn]] void fail(int line_no, const std::string& what) {
  throw ConfigError("config line " + std::to_string(line_no) + ": " + what);
}

double need_double(std::string_view value, int line_no) {
  const auto parsed = parse_double(value);
  if (!parsed) {
    fail(line_no, "expected a number, got '" + std::string(value) + "'");
  }
  return *parsed;
}

int need_int(std::string_view value, int line_no) {
  const auto parsed = parse_long(value);
  if (!parsed || *parsed < std::numeric_limits<int>::min() ||
      *parsed > std::numeric_limits<int>::max()) {
    fail(line_no, "expected an integer, got '" + std::string(value) + "'");
  }
  return static_cast<int>(*parsed);
}

void apply(PipelineConfig& cfg, std::string_view key, std::string_view value,
           int line_no) {
  if (key == "dbscan.epsilon") {
    cfg.dbscan.epsilon = need_double(value, line_no);
  } else if (key == "dbscan.min_pts") {
    cfg.dbscan.min_pts = need_int(value, line_no);
  } else if (key == "meanshift.bandwidth") {
    cfg.meanshift.bandwidth = need_double(value, line_no);
  } else if (key == "meanshift.convergence_eps") {
    cfg.meanshift.convergence_eps = need_double(value, line_no);
  } else if (key == "meanshift.max_iterations") {
    cfg.meanshift.max_iterations = need_int(value, line_no);
  } else if (key == "meanshift.merge_radius") {
    cfg.meanshift.merge_radius = need_double(value, line_no);
  } else if (key == "fit.delta_theta0") {
    cfg.fit.delta_theta0 = need_double(value, line_no);
  } else if (key == "fit.vertex_k") {
    cfg.fit.vertex_k = need_int(value, line_no);
  } else if (key == "fit.superpose_threshold") {
    cfg.fit.superpose_threshold = need_double(value, line_no);
  } else if (key == "fit.spread_threshold") {
    cfg.fit.spread_threshold = need_double(value, line_no);
  } else if (key == "fit.min_cluster_size") {
    cfg.fit.min_cluster_size = need_int(value, line_no);
  } else {
    fail(line_no, "unknown key '" + std::string(key) + "'");
  }
}

}  // namespace

PipelineConfig parse_config(std::string_view text, PipelineConfig base) {
  PipelineConfig cfg = base;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = (eol == std::string_view::npos)
                                ? text.substr(pos)
                                : text.substr(pos, eol - pos);
    pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
    ++line_no;

    const std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trimmed(line);
    if (line.empty()) {
      continue;
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      fail(line_no, "expected 'key = value'");
    }
    const std::string_view key = trimmed(line.substr(0, eq));
    const std::string_view value = trimmed(line.substr(eq + 1));
    if (key.empty()) {
      fail(line_no, "empty key");
    }
    apply(cfg, key, value, line_no);
  }
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  return cfg;
}

PipelineConfig load_config(const std::filesystem::path& path,
                           PipelineConfig base) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open config file " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str(), base);
}

}  // namespace lshape
