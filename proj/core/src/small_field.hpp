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

#ifndef HMDS_SRC_SMALL_FIELD_HPP_
#define HMDS_SRC_SMALL_FIELD_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hmds/fields.hpp"
#include "hmds/linalg.hpp"

namespace hmds::detail {

// Table-driven arithmetic on the canonical indices 0..q-1 of a small field.
class SmallField {
 public:
  static constexpr std::size_t kMaxOrder = 4096;

  explicit SmallField(FieldPtr field);

  std::size_t q() const { return q_; }
  const FieldPtr& field() const { return field_; }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return add_[a * q_ + b]; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add_[a * q_ + neg_[b]]; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_[a * q_ + b]; }
  std::uint32_t neg(std::uint32_t a) const { return neg_[a]; }
  std::uint32_t inv(std::uint32_t a) const { return inv_[a]; }
  FieldElement element(std::uint32_t a) const { return field_->from_index(a); }
  std::uint32_t index(const FieldElement& e) const { return static_cast<std::uint32_t>(field_->index_of(e)); }

  // Row-major matrices of indices.
  std::vector<std::uint32_t> from_matrix(const MatrixF& m) const;
  MatrixF to_matrix(const std::vector<std::uint32_t>& a, std::size_t rows, std::size_t cols) const;
  // Rank and pivot columns of a rows x cols matrix (destroys the input).
  std::size_t rank_in_place(std::vector<std::uint32_t>& a, std::size_t rows, std::size_t cols,
                            std::vector<std::size_t>* pivots = nullptr) const;
  bool det_is_zero(std::vector<std::uint32_t> a, std::size_t n) const;

 private:
  FieldPtr field_;
  std::size_t q_;
  std::vector<std::uint32_t> add_, mul_, neg_, inv_;
};

}  // namespace hmds::detail

#endif  // HMDS_SRC_SMALL_FIELD_HPP_
