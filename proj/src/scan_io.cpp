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

#include "lshape/scan_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "lshape/num_format.hpp"

namespace lshape {

namespace {

std::string_view trimmed(std::string_view s) {
  const auto notspace = [](char c) {
    return c != ' ' && c != '\t' && c != '\r';
  };
  while (!s.empty() && !notspace(s.front())) {
    s.remove_prefix(1);
  }
  while (!s.empty() && !notspace(s.back())) {
    s.remove_suffix(1);
  }
  return s;
}

Scan parse_csv(std::istream& in) {
  Scan scan;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trimmed(raw);
    if (line.empty() || line.front() == '#') {
      continue;
    }
    const std::size_t comma = line.find(',');
    if (comma == std::string_view::npos) {
      throw ScanParseError("csv: expected 'x,y'", line_no);
    }
    const auto x = parse_double(trimmed(line.substr(0, comma)));
    const auto y = parse_double(trimmed(line.substr(comma + 1)));
    if (!x || !y) {
      throw ScanParseError("csv: malformed number", line_no);
    }
    const Point2 p{*x, *y};
    if (!is_finite(p)) {
      throw ScanParseError("csv: non-finite coordinate", line_no);
    }
    scan.points.push_back(p);
  }
  return scan;
}

Point2 parse_point(const nlohmann::json& node, int line_no,
                   const char* what) {
  if (!node.is_array() || node.size() != 2 || !node[0].is_number() ||
      !node[1].is_number()) {
    throw ScanParseError(std::string("jsonl: ") + what +
                             " must be a [x, y] number pair",
                         line_no);
  }
  const Point2 p{node[0].get<double>(), node[1].get<double>()};
  if (!is_finite(p)) {
    throw ScanParseError(std::string("jsonl: non-finite ") + what, line_no);
  }
  return p;
}

std::vector<Scan> parse_jsonl(std::istream& in) {
  std::vector<Scan> scans;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trimmed(raw);
    if (line.empty()) {
      continue;
    }
    nlohmann::json frame;
    try {
      frame = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      // Covers syntax errors and numeric overflow (e.g. 1e999) alike.
      throw ScanParseError(std::string("jsonl: ") + e.what(), line_no);
    }
    if (!frame.is_object()) {
      throw ScanParseError("jsonl: frame must be an object", line_no);
    }
    Scan scan;
    if (!frame.contains("frame_id") ||
        !frame["frame_id"].is_number_integer()) {
      throw ScanParseError("jsonl: missing integer frame_id", line_no);
    }
    scan.frame_id = frame["frame_id"].get<int>();
    if (!frame.contains("points") || !frame["points"].is_array()) {
      throw ScanParseError("jsonl: missing points array", line_no);
    }
    for (const auto& node : frame["points"]) {
      scan.points.push_back(parse_point(node, line_no, "point"));
    }
    if (frame.contains("sensor_origin")) {
      scan.sensor_origin =
          parse_point(frame["sensor_origin"], line_no, "sensor_origin");
    }
    scans.push_back(std::move(scan));
  }
  return scans;
}

}  // namespace

std::optional<ScanFormat> guess_format(const std::filesystem::path& path) {
  const std::string ext = path.extension().string();
  if (ext == ".csv") {
    return ScanFormat::csv;
  }
  if (ext == ".jsonl") {
    return ScanFormat::jsonl;
  }
  return std::nullopt;
}

std::vector<Scan> read_scans(const std::filesystem::path& path,
                             ScanFormat format) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open " + path.string());
  }
  if (format == ScanFormat::csv) {
    std::vector<Scan> scans;
    scans.push_back(parse_csv(in));
    return scans;
  }
  return parse_jsonl(in);
}

Scan read_scan(const std::filesystem::path& path, ScanFormat format) {
  std::vector<Scan> scans = read_scans(path, format);
  if (scans.size() != 1) {
    throw ScanParseError("expected exactly one frame, got " +
                             std::to_string(scans.size()),
                         0);
  }
  return std::move(scans.front());
}

std::string scan_to_csv(const Scan& scan) {
  std::string out;
  out.reserve(scan.points.size() * 24);
  for (const Point2& p : scan.points) {
    append_double(out, p.x);
    out.push_back(',');
    append_double(out, p.y);
    out.push_back('\n');
  }
  return out;
}

std::string scans_to_jsonl(std::span<const Scan> scans) {
  std::string out;
  for (const Scan& scan : scans) {
    nlohmann::ordered_json frame;
    frame["frame_id"] = scan.frame_id;
    auto& points = frame["points"] = nlohmann::ordered_json::array();
    for (const Point2& p : scan.points) {
      points.push_back({p.x, p.y});
    }
    frame["sensor_origin"] = {scan.sensor_origin.x, scan.sensor_origin.y};
    out += frame.dump();
    out.push_back('\n');
  }
  return out;
}

namespace {

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open " + path.string() + " for writing");
  }
  out << text;
  if (!out) {
    throw IoError("failed writing " + path.string());
  }
}

}  // namespace

void write_scan_csv(const std::filesystem::path& path, const Scan& scan) {
  write_text(path, scan_to_csv(scan));
}

void write_scans_jsonl(const std::filesystem::path& path,
                       std::span<const Scan> scans) {
  write_text(path, scans_to_jsonl(scans));
}

}  // namespace lshape
