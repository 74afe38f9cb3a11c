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

#ifndef HMDS_TESTS_UNIT_TEST_UTIL_HPP_
#define HMDS_TESTS_UNIT_TEST_UTIL_HPP_

#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "hmds/codes.hpp"
#include "hmds/fields.hpp"
#include "hmds/linalg.hpp"

namespace hmds::testing {

inline FieldPtr Prime(Coeff p) { return field_make(p); }

inline FieldPtr Ext(Coeff p, std::size_t d) { return field_make(p, {ExtensionRequest{d, std::nullopt}}); }

inline FieldPtr Tower(Coeff p, const std::vector<std::size_t>& degrees) {
  std::vector<ExtensionRequest> req;
  for (std::size_t d : degrees) req.push_back(ExtensionRequest{d, std::nullopt});
  return field_make(p, req);
}

inline FieldElement RandomElement(const FieldPtr& f, std::mt19937_64& rng) {
  std::vector<Coeff> c(f->degree());
  for (Coeff& x : c) x = rng() % f->characteristic();
  return f->from_coeffs(std::move(c));
}

inline MatrixF RandomMatrix(const FieldPtr& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  MatrixF m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, RandomElement(f, rng));
  }
  return m;
}

inline std::vector<FieldElement> Ints(const FieldPtr& f, const std::vector<std::int64_t>& v) {
  std::vector<FieldElement> out;
  for (std::int64_t x : v) out.push_back(f->from_int(x));
  return out;
}

inline std::vector<FieldElement> FirstElements(const FieldPtr& f, std::size_t n) {
  std::vector<FieldElement> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(f->from_index(i));
  return out;
}

inline std::vector<FieldElement> DistinctRandom(const FieldPtr& f, std::size_t n, std::mt19937_64& rng) {
  std::vector<std::uint64_t> idx(static_cast<std::uint64_t>(*f->order()));
  std::iota(idx.begin(), idx.end(), 0);
  std::shuffle(idx.begin(), idx.end(), rng);
  std::vector<FieldElement> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(f->from_index(idx[i]));
  return out;
}

inline CodeSpec RandomFullRankCode(const FieldPtr& f, std::size_t k, std::size_t n, std::mt19937_64& rng) {
  while (true) {
    MatrixF m = RandomMatrix(f, k, n, rng);
    if (rank(m) == k) return CodeSpec::explicit_code(std::move(m));
  }
}

// All vectors of F^n for a small field, in base-q order.
inline std::vector<std::vector<FieldElement>> AllVectors(const FieldPtr& f, std::size_t n) {
  const std::uint64_t q = static_cast<std::uint64_t>(*f->order());
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= q;
  std::vector<std::vector<FieldElement>> out;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::vector<FieldElement> v;
    std::uint64_t rest = idx;
    for (std::size_t i = 0; i < n; ++i) {
      v.push_back(f->from_index(rest % q));
      rest /= q;
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace hmds::testing

#endif  // HMDS_TESTS_UNIT_TEST_UTIL_HPP_
