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

#ifndef HMDS_MDSCHECK_HPP_
#define HMDS_MDSCHECK_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hmds/codes.hpp"

namespace hmds {

enum class Verdict { kPass, kFail, kInconclusive };
std::string VerdictName(Verdict v);

struct CheckReport {
  std::string property;
  Verdict verdict = Verdict::kPass;
  // Offending tuple on failure (1-based in text form).
  std::optional<SetTuple> witness;
  // The same witness after stripping shared elements (three sets only).
  std::optional<SetTuple> reduced_witness;
  // Free-form witness for failures that are not set tuples.
  std::string witness_text;
  std::uint64_t tuples = 0;
  double time_ms = 0;
  // Extra key=value facts, in insertion order.
  std::vector<std::pair<std::string, std::string>> details;

  bool passed() const { return verdict == Verdict::kPass; }
  void add_detail(std::string key, std::string value) { details.emplace_back(std::move(key), std::move(value)); }
  std::optional<std::string> detail(const std::string& key) const;
};

struct CheckOptions {
  enum class Method { kAuto, kBlock, kProductMatrix, kPairing };
  std::size_t threads = 0;  // 0: DefaultThreadCount()
  Method method = Method::kAuto;
};

// Every k x k minor of the generator matrix is nonzero.
CheckReport is_mds(const CodeSpec& code, const CheckOptions& options = {});
// MDS(l) by enumeration of generically-zero tuples and the block determinant.
// l <= 2 reduces to is_mds; l = 3 restricts to sets of size <= k - 1 after the
// MDS check. Method kProductMatrix (RS codes, l = 3) switches to the
// product-polynomial determinant after stripping shared elements.
CheckReport is_mds_ell(const CodeSpec& code, std::size_t ell, const CheckOptions& options = {});
// Reed-Solomon MDS(3): for k = 3 the 3 x 3 pairing determinants over all
// six-point subsets; otherwise (or with Method kProductMatrix) the reduced
// product-polynomial determinants over all three-set tuples.
CheckReport is_mds3_rs_fast(const CodeSpec& code, const CheckOptions& options = {});
// Projective points (w_1^A : w_2^A) over all (k-1)-subsets A of {3..n} after
// normalizing the first two columns; pass iff pairwise distinct.
CheckReport lb_witness_projective(const CodeSpec& code);

// Determinant tests for a single tuple.
FieldElement block_determinant(const MatrixF& v, const SetTuple& tuple);
bool tuple_intersection_zero(const MatrixF& v, const SetTuple& tuple);
// Determinant of the product-polynomial matrix with rows indexed by
// tuple.sets[row] and column blocks Pi_{A_i}^{k - |A_i|}, i != row. Requires
// distinct generators.
FieldElement product_matrix_determinant(const std::vector<FieldElement>& beta, const SetTuple& tuple,
                                        std::size_t row = 0);
// Strips elements shared by two of three sets, lowering k by one per element.
SetTuple weak_reduce(const SetTuple& tuple);
// Intersection test for a three-set tuple of an RS code through weak_reduce and
// the product-polynomial determinant.
bool rs_tuple_intersection_zero(const std::vector<FieldElement>& beta, const SetTuple& tuple);
// det [[1, b1+b2, b1 b2], [1, b3+b4, b3 b4], [1, b5+b6, b5 b6]].
FieldElement pairing_determinant(const FieldElement& b1, const FieldElement& b2, const FieldElement& b3,
                                 const FieldElement& b4, const FieldElement& b5, const FieldElement& b6);
// The 15 perfect matchings of six points, as index triples of pairs.
const std::vector<std::array<std::pair<int, int>, 3>>& SixPointPairings();

// Canonical three-or-more-set tuples: sizes nondecreasing and, among equal
// sizes, sets in nondecreasing lexicographic order.
std::vector<SetTuple> canonical_tuples(std::size_t n, std::size_t k, std::size_t ell, std::size_t max_size,
                                       bool only_generically_zero);

struct SearchResult {
  std::uint64_t count = 0;           // codes with the property
  std::uint64_t distinct_codes = 0;  // after information-set deduplication
  std::uint64_t candidates = 0;      // placements x matrices examined
  std::uint64_t mds_codes = 0;
  std::vector<CodeSpec> exemplars;   // up to 10
  double time_ms = 0;
};
inline constexpr std::uint64_t kDefaultSearchBudget = 100'000'000;
// Enumerates every generator matrix with an identity on some information set
// and arbitrary entries elsewhere, keeps each code once (at its
// lexicographically first information set) and counts the MDS(3) ones.
SearchResult exhaustive_code_search(std::size_t n, std::size_t k, const FieldPtr& field,
                                    std::uint64_t budget = kDefaultSearchBudget, std::size_t threads = 0);

std::uint64_t Binomial(std::uint64_t n, std::uint64_t r);

}  // namespace hmds

#endif  // HMDS_MDSCHECK_HPP_
