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

#include "small_field.hpp"

#include <utility>

#include "hmds/error.hpp"

namespace hmds::detail {

SmallField::SmallField(FieldPtr field) : field_(std::move(field)) {
  auto order = field_->order();
  if (!order || *order > kMaxOrder) throw Error(ErrorCode::kBudgetExceeded, "field too large for table arithmetic");
  q_ = static_cast<std::size_t>(*order);
  std::vector<FieldElement> el;
  el.reserve(q_);
  for (std::size_t i = 0; i < q_; ++i) el.push_back(field_->from_index(i));
  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  for (std::size_t a = 0; a < q_; ++a) {
    neg_[a] = static_cast<std::uint32_t>(field_->index_of(-el[a]));
    for (std::size_t b = a; b < q_; ++b) {
      const auto s = static_cast<std::uint32_t>(field_->index_of(el[a] + el[b]));
      const auto p = static_cast<std::uint32_t>(field_->index_of(el[a] * el[b]));
      add_[a * q_ + b] = add_[b * q_ + a] = s;
      mul_[a * q_ + b] = mul_[b * q_ + a] = p;
      if (p == 1) {
        inv_[a] = static_cast<std::uint32_t>(b);
        inv_[b] = static_cast<std::uint32_t>(a);
      }
    }
  }
}

std::vector<std::uint32_t> SmallField::from_matrix(const MatrixF& m) const {
  std::vector<std::uint32_t> out(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out[r * m.cols() + c] = index(m.at(r, c));
  }
  return out;
}

MatrixF SmallField::to_matrix(const std::vector<std::uint32_t>& a, std::size_t rows, std::size_t cols) const {
  MatrixF m(field_, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, element(a[r * cols + c]));
  }
  return m;
}

std::size_t SmallField::rank_in_place(std::vector<std::uint32_t>& a, std::size_t rows, std::size_t cols,
                                      std::vector<std::size_t>* pivots) const {
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < rows; ++c) {
    std::size_t p = row;
    while (p < rows && a[p * cols + c] == 0) ++p;
    if (p == rows) continue;
    if (p != row) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[p * cols + j], a[row * cols + j]);
    }
    const std::uint32_t iv = inv_[a[row * cols + c]];
    for (std::size_t r = row + 1; r < rows; ++r) {
      const std::uint32_t x = a[r * cols + c];
      if (!x) continue;
      const std::uint32_t f = mul(x, iv);
      for (std::size_t j = c; j < cols; ++j) a[r * cols + j] = sub(a[r * cols + j], mul(f, a[row * cols + j]));
    }
    if (pivots) pivots->push_back(c);
    ++row;
  }
  return row;
}

bool SmallField::det_is_zero(std::vector<std::uint32_t> a, std::size_t n) const {
  return rank_in_place(a, n, n) < n;
}

}  // namespace hmds::detail
