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

#include "hmds/set_tuple.hpp"

#include <bit>

#include "hmds/error.hpp"
#include "hmds/text.hpp"

namespace hmds {

std::vector<std::size_t> MaskMembers(Mask m) {
  std::vector<std::size_t> out;
  while (m) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

Mask MaskOf(const std::vector<std::size_t>& zero_based) {
  Mask m = 0;
  for (std::size_t i : zero_based) m |= Mask{1} << i;
  return m;
}

int MaskSize(Mask m) { return std::popcount(m); }

std::size_t SetTuple::total_size() const {
  std::size_t s = 0;
  for (Mask m : sets) s += static_cast<std::size_t>(MaskSize(m));
  return s;
}

std::string SetTuple::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (i) out += ';';
    bool first = true;
    for (std::size_t j : MaskMembers(sets[i])) {
      if (!first) out += ',';
      out += std::to_string(j + 1);
      first = false;
    }
  }
  return out;
}

SetTuple SetTuple::parse(const std::string& s, std::size_t n, std::size_t k) {
  SetTuple t;
  t.n = n;
  t.k = k;
  for (const std::string& part : text::Split(s, ';')) {
    Mask m = 0;
    std::string trimmed = text::Trim(part);
    if (!trimmed.empty()) {
      for (const std::string& e : text::Split(trimmed, ',')) {
        std::uint64_t v = text::ParseU64(e);
        if (v < 1 || v > n) throw Error(ErrorCode::kParseError, "set element out of range: " + e);
        m |= Mask{1} << (v - 1);
      }
    }
    t.sets.push_back(m);
  }
  return t;
}

}  // namespace hmds
