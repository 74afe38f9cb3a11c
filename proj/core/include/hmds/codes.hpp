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

#ifndef HMDS_CODES_HPP_
#define HMDS_CODES_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "hmds/fields.hpp"
#include "hmds/linalg.hpp"
#include "hmds/set_tuple.hpp"

namespace hmds {

// An [n, k] linear code, either Reed-Solomon on a list of generators or given
// by an explicit k x n generator matrix. Repeated RS generators are accepted
// here and rejected by the MDS check with a witness.
struct CodeSpec {
  enum class Kind { kReedSolomon, kExplicit };

  FieldPtr field;
  std::size_t n = 0;
  std::size_t k = 0;
  Kind kind = Kind::kExplicit;
  std::vector<FieldElement> generators;
  MatrixF matrix;

  static CodeSpec reed_solomon(FieldPtr field, std::vector<FieldElement> generators, std::size_t k);
  // Throws Error(kRankLoss) unless the matrix has full row rank.
  static CodeSpec explicit_code(MatrixF generator);

  bool is_rs() const { return kind == Kind::kReedSolomon; }
  MatrixF generator_matrix() const;
};

// The k x n Vandermonde matrix with rows alpha_j^(i-1); Error(kWrongKind) for
// explicit codes.
MatrixF rs_generator_matrix(const CodeSpec& code);
// Explicit code generated by the canonical reduced-echelon basis of the right
// kernel of the generator matrix.
CodeSpec dual_code(const CodeSpec& code);
// Restriction to the 0-based coordinates `keep` (in the given order).
CodeSpec puncture(const CodeSpec& code, const std::vector<std::size_t>& keep);

// True iff for every set partition P_1, ..., P_s of the l sets the sum of the
// block intersections is at most (s - 1) k. Requires total size (l - 1) k and
// every set of size at most k.
bool generically_zero(const SetTuple& tuple);
// The same predicate by explicit enumeration of all set partitions.
bool generically_zero_partitions(const SetTuple& tuple);
// The three-set conditions: no common element and
// |A_i cap A_j| + |A_m| <= k for every arrangement.
bool generically_zero_three(const SetTuple& tuple);

// Every r-subset of [n] as a mask, in lexicographic order of member lists.
std::vector<Mask> combinations(std::size_t n, std::size_t r);
// All ordered size profiles (each <= max_size and <= n) summing to (l-1)k.
std::vector<std::vector<std::size_t>> feasible_profiles(std::size_t n, std::size_t k, std::size_t ell,
                                                        std::size_t max_size);
// Streams every ordered tuple with the given profile (or with every feasible
// profile with sets of size <= k) in lexicographic order; `visit` returns false
// to stop. Throws Error(kInfeasibleProfile) for a bad profile.
void enumerate_tuples(std::size_t n, std::size_t k, std::size_t ell,
                      const std::optional<std::vector<std::size_t>>& profile, bool only_generically_zero,
                      const std::function<bool(const SetTuple&)>& visit);
std::uint64_t count_tuples(std::size_t n, std::size_t k, std::size_t ell,
                           const std::optional<std::vector<std::size_t>>& profile, bool only_generically_zero);

// Randomized stand-in for a generic k x n matrix: uniformly random matrices over
// the prime field kGenericPrime (the smallest prime above 2^31).
inline constexpr Coeff kGenericPrime = 2147483659ull;
inline constexpr std::size_t kGenericTrials = 5;
FieldPtr generic_field();
// Intersection dimension of W_{A_1}, ..., W_{A_l} for random W: the most
// frequent value over the trials (ties broken towards the smaller value).
std::size_t generic_intersection_dim(const SetTuple& tuple, std::uint64_t seed,
                                     std::size_t trials = kGenericTrials);
MatrixF random_matrix(const FieldPtr& field, std::size_t rows, std::size_t cols, std::uint64_t seed);

// Column spans V_{A_i} as k x |A_i| matrices.
std::vector<MatrixF> column_blocks(const MatrixF& v, const SetTuple& tuple);

}  // namespace hmds

#endif  // HMDS_CODES_HPP_
