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

#ifndef HMDS_CONSTRUCTIONS_HPP_
#define HMDS_CONSTRUCTIONS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hmds/codes.hpp"

namespace hmds {

struct ConstructionParams {
  std::string name;  // k3-n4 | k3-n3 | k4-general | k5-weak | general-ell
  std::size_t n = 0;
  std::optional<std::size_t> k;
  std::optional<std::size_t> ell;
  // Extension degree of the evaluation variable (k5-weak) or per-level degree D
  // (general-ell).
  std::optional<std::size_t> degree;
  // Base field order override (k5-weak).
  std::optional<std::uint64_t> q;
  // Sidon set from BCH parity-check columns (k5-weak, characteristic 2).
  bool bch = false;
  // Memory cap for general-ell, in base-field coefficients per element.
  std::uint64_t coefficient_cap = std::uint64_t{1} << 20;
};

struct Construction {
  std::string name;
  CodeSpec code;
  // Derived parameters, in order (q, e, D, S, alpha list, ...).
  std::vector<std::pair<std::string, std::string>> provenance;
  std::vector<std::string> warnings;
};

struct PrimePower {
  std::uint64_t p = 0;
  std::size_t e = 0;
};
// Decomposes q = p^e, or nullopt when q is not a prime power.
std::optional<PrimePower> AsPrimePower(std::uint64_t q);
// Smallest prime power >= lower whose characteristic is >= min_char (and odd
// when requested).
PrimePower SmallestPrimePower(std::uint64_t lower, std::uint64_t min_char = 2, bool odd = false);
// The field F_{p^e} (one extension level when e > 1).
FieldPtr MakeBaseField(const PrimePower& q);

// Builders for the explicit families.
Construction construct_k3_n4(std::size_t n);
Construction construct_k3_n3(std::size_t n);
Construction construct_k4(std::size_t n, std::size_t k = 4);
Construction construct_k5_weak(std::size_t n, std::size_t k = 5, std::optional<std::size_t> extension_degree = {},
                               std::optional<std::uint64_t> q = {}, bool bch = false);
Construction construct_general(std::size_t n, std::size_t k, std::size_t ell,
                               std::optional<std::size_t> per_level_degree = {},
                               std::uint64_t coefficient_cap = std::uint64_t{1} << 20);
Construction construct(const ConstructionParams& params);
const std::vector<std::string>& ConstructionNames();

// Elements of F_{7^e} whose top coordinate equals 1, in enumeration order.
std::vector<FieldElement> k3n3_s_set(const FieldPtr& base, std::size_t count);
// True iff no six distinct members sum to zero (exhaustive).
bool no_six_sum_zero(const std::vector<FieldElement>& s, std::uint64_t* subsets_checked = nullptr);

// Greedy first-fit Sidon set over the canonical enumeration of `field`
// (sums of distinct pairs pairwise distinct); Error(kSidonSetNotFound) when
// the field is exhausted first.
std::vector<FieldElement> sidon_set_greedy(const FieldPtr& field, std::size_t n);
// Columns (x, x^3) of a distance-5 binary BCH parity check, embedded into the
// two-level field F_{2^m}[w] as x + x^3 w.
std::vector<FieldElement> sidon_set_bch(const FieldPtr& field, std::size_t n);
bool is_sidon(const std::vector<FieldElement>& alphas);

}  // namespace hmds

#endif  // HMDS_CONSTRUCTIONS_HPP_
