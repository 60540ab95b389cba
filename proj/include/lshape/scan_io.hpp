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

#ifndef LSHAPE_SCAN_IO_HPP
#define LSHAPE_SCAN_IO_HPP

#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lshape/segmentation.hpp"

namespace lshape {

/// Malformed scan data; `line_number` is 1-based.
class ScanParseError : public std::runtime_error {
 public:
  ScanParseError(const std::string& what, int line_number)
      : std::runtime_error(what), line_number_(line_number) {}
  int line_number() const { return line_number_; }

 private:
  int line_number_;
};

/// Failed to open, read or write a file.
class IoError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class ScanFormat { csv, jsonl };

/// Format from a file extension (.csv / .jsonl), if recognizable.
std::optional<ScanFormat> guess_format(const std::filesystem::path& path);

/// Reads all frames of a scan file.
///
/// csv: one "x,y" pair per line; blank lines and lines starting with '#' are
/// ignored; always one frame (frame_id 0, sensor origin 0,0 since the format
/// carries neither).
///
/// jsonl: one frame per line, each an object {"frame_id": int,
/// "points": [[x, y], ...], "sensor_origin": [x, y]} with sensor_origin
/// optional. All coordinates must be finite.
///
/// Throws ScanParseError (with line number) on malformed content and IoError
/// when the file cannot be read.
std::vector<Scan> read_scans(const std::filesystem::path& path,
                             ScanFormat format);

/// Single-frame convenience wrapper; throws ScanParseError when the file
/// holds more than one frame.
Scan read_scan(const std::filesystem::path& path, ScanFormat format);

/// Writers mirror the reader grammar; doubles are emitted in shortest
/// round-trip form, so write -> read reproduces the points exactly.
std::string scan_to_csv(const Scan& scan);
std::string scans_to_jsonl(std::span<const Scan> scans);
void write_scan_csv(const std::filesystem::path& path, const Scan& scan);
void write_scans_jsonl(const std::filesystem::path& path,
                       std::span<const Scan> scans);

}  // namespace lshape

#endif  // LSHAPE_SCAN_IO_HPP
