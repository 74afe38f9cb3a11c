// Copyright 2026 The hmds Authors
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

#ifndef HMDS_TEXT_HPP_
#define HMDS_TEXT_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace hmds::text {

std::vector<std::string> Split(std::string_view s, char sep);
std::string Trim(std::string_view s);
bool StartsWith(std::string_view s, std::string_view prefix);
// Parses an unsigned decimal integer; throws Error(kParseError) on failure.
std::uint64_t ParseU64(std::string_view s);
std::int64_t ParseI64(std::string_view s);
// Parses whitespace-separated `key=value` tokens after a leading keyword.
std::map<std::string, std::string> ParseKeyValues(std::string_view line);
std::string Join(const std::vector<std::string>& parts, std::string_view sep);

template <typename T>
std::string JoinNumbers(const std::vector<T>& values, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace hmds::text

#endif  // HMDS_TEXT_HPP_
