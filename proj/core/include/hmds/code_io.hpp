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

#ifndef HMDS_CODE_IO_HPP_
#define HMDS_CODE_IO_HPP_

#include <string>
#include <utility>
#include <vector>

#include "hmds/codes.hpp"

namespace hmds {

// Text form of a code:
//   # key=value          (optional provenance lines)
//   field p=<p>
//   ext d=<d> poly=<c0,...,cd>   (one per tower level)
//   code n=<n> k=<k> kind=rs|explicit
//   gen <element>        (n lines, kind=rs)
//   row <e1> ... <en>    (k lines, kind=explicit)
// Elements are comma-separated coefficient lists over F_p.
struct CodeFile {
  CodeSpec code;
  std::vector<std::pair<std::string, std::string>> provenance;
};

std::string serialize_code(const CodeSpec& code,
                           const std::vector<std::pair<std::string, std::string>>& provenance = {});
CodeFile parse_code(const std::string& text);
CodeFile read_code_file(const std::string& path);
void write_code_file(const std::string& path, const CodeSpec& code,
                     const std::vector<std::pair<std::string, std::string>>& provenance = {});

}  // namespace hmds

#endif  // HMDS_CODE_IO_HPP_
