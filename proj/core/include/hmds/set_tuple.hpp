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

#ifndef HMDS_SET_TUPLE_HPP_
#define HMDS_SET_TUPLE_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace hmds {

using Mask = std::uint64_t;

// Subsets of [n] (n <= 64) as bit masks; bit j stands for coordinate j + 1.
std::vector<std::size_t> MaskMembers(Mask m);
Mask MaskOf(const std::vector<std::size_t>& zero_based);
int MaskSize(Mask m);

// A tuple (A_1, ..., A_l) of subsets of [n] for an [n, k] code.
struct SetTuple {
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<Mask> sets;

  std::size_t ell() const { return sets.size(); }
  std::size_t total_size() const;
  // 1-based text form `1,2;3,4;5,6` (empty sets print as nothing).
  std::string to_string() const;
  static SetTuple parse(const std::string& text, std::size_t n, std::size_t k);
  bool operator==(const SetTuple& o) const { return n == o.n && k == o.k && sets == o.sets; }
};

}  // namespace hmds

#endif  // HMDS_SET_TUPLE_HPP_
