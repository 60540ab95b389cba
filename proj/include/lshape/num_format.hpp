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

#ifndef LSHAPE_NUM_FORMAT_HPP
#define LSHAPE_NUM_FORMAT_HPP

#include <charconv>
#include <optional>
#include <string>
#include <string_view>
#include <system_error>

namespace lshape {

/// Shortest decimal form that parses back to exactly the same double;
/// locale independent, so emitted files are byte reproducible.
inline std::string format_double(double value) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

inline void append_double(std::string& out, double value) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  out.append(buf, res.ptr);
}

/// Fixed two-decimal form, used for plot coordinates where shortest
/// round-trip output would be needlessly long.
inline void append_fixed2(std::string& out, double value) {
  char buf[32];
  const auto res =
      std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::fixed, 2);
  out.append(buf, res.ptr);
}

/// Strict full-token double parse; rejects trailing garbage.
inline std::optional<double> parse_double(std::string_view token) {
  double value = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  const auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc{} || res.ptr != last) {
    return std::nullopt;
  }
  return value;
}

inline std::optional<long> parse_long(std::string_view token) {
  long value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  const auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc{} || res.ptr != last) {
    return std::nullopt;
  }
  return value;
}

}  // namespace lshape

#endif  // LSHAPE_NUM_FORMAT_HPP
