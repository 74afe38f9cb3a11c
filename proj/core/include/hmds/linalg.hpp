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

#ifndef HMDS_LINALG_HPP_
#define HMDS_LINALG_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hmds/fields.hpp"
#include "hmds/set_tuple.hpp"

namespace hmds {

// Dense matrix over a FieldSpec, stored row-major as flat coefficient arrays
// (each entry occupies D consecutive coefficients).
class MatrixF {
 public:
  MatrixF() = default;
  MatrixF(FieldPtr field, std::size_t rows, std::size_t cols);

  static MatrixF identity(FieldPtr field, std::size_t n);
  static MatrixF from_rows(FieldPtr field, const std::vector<std::vector<FieldElement>>& rows);
  static MatrixF from_ints(FieldPtr field, const std::vector<std::vector<std::int64_t>>& rows);

  const FieldPtr& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t dim() const { return dim_; }

  const Coeff* entry(std::size_t r, std::size_t c) const { return data_.data() + (r * cols_ + c) * dim_; }
  Coeff* entry(std::size_t r, std::size_t c) { return data_.data() + (r * cols_ + c) * dim_; }
  bool is_zero_entry(std::size_t r, std::size_t c) const;
  FieldElement at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const FieldElement& v);
  void set_int(std::size_t r, std::size_t c, std::int64_t v);
  std::vector<FieldElement> row(std::size_t r) const;

  MatrixF transpose() const;
  MatrixF select_columns(const std::vector<std::size_t>& cols) const;
  MatrixF select_rows(const std::vector<std::size_t>& rows) const;
  MatrixF operator*(const MatrixF& b) const;
  bool operator==(const MatrixF& b) const;
  bool is_zero() const;
  // One line per row, entries `[c0,c1,...]` separated by spaces.
  std::string to_string() const;

 private:
  FieldPtr field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t dim_ = 1;
  std::vector<Coeff> data_;
};

// Determinant by elimination pivoting on the first nonzero entry; for fields of
// dimension above kDivisionFreeMinDim a division-free cofactor expansion keeps
// sparse tower elements sparse.
inline constexpr std::size_t kDivisionFreeMinDim = 1024;
FieldElement det(const MatrixF& m);
bool det_is_zero(const MatrixF& m);
FieldElement det_elimination(const MatrixF& m);
FieldElement det_division_free(const MatrixF& m);

struct RrefResult {
  MatrixF reduced;
  std::vector<std::size_t> pivots;
};
RrefResult rref(const MatrixF& m);
std::size_t rank(const MatrixF& m);
// Right kernel {v : M v = 0}; rows of the result form the reduced-echelon
// canonical basis (free variable set to 1, other free variables 0).
MatrixF kernel_matrix(const MatrixF& m);
std::vector<std::vector<FieldElement>> kernel(const MatrixF& m);
std::optional<std::vector<FieldElement>> solve(const MatrixF& m, const std::vector<FieldElement>& b);
std::vector<FieldElement> mat_vec(const MatrixF& m, const std::vector<FieldElement>& v);

// Dimension of the intersection of the column spans of the given k x m_i
// matrices.
std::size_t subspace_intersection_dim(const std::vector<MatrixF>& bases);

// The lk x lk matrix with l stacked identities in the first k columns and
// V restricted to A_i in block row i.
MatrixF block_mds_matrix(const MatrixF& v, const SetTuple& tuple);
// The (l-1)k x (l-1)k matrix obtained by subtracting the first block row of
// block_mds_matrix from the others; its determinant agrees up to sign.
MatrixF reduced_block_matrix(const MatrixF& v, const SetTuple& tuple);

MatrixF vandermonde(const std::vector<FieldElement>& points, std::size_t k);

}  // namespace hmds

#endif  // HMDS_LINALG_HPP_
