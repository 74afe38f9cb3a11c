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

#include "hmds/linalg.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "hmds/error.hpp"

namespace hmds {
namespace {

// Elementary row operations on a flat matrix buffer.
class Eliminator {
 public:
  Eliminator(const FieldSpec& f, std::size_t rows, std::size_t cols, std::vector<Coeff> data)
      : f_(f), t_(f.level_count()), d_(f.degree()), rows_(rows), cols_(cols), data_(std::move(data)),
        tmp_(d_), factor_(d_), inv_(d_) {}

  Coeff* at(std::size_t r, std::size_t c) { return data_.data() + (r * cols_ + c) * d_; }
  bool zero(std::size_t r, std::size_t c) { return f_.is_zero(t_, at(r, c)); }

  void swap_rows(std::size_t a, std::size_t b) {
    std::swap_ranges(at(a, 0), at(a, 0) + cols_ * d_, at(b, 0));
  }

  // row r -= factor * row src, for columns >= from.
  void axpy(std::size_t r, std::size_t src, const Coeff* factor, std::size_t from) {
    const bool scalar = f_.is_scalar(t_, factor);
    for (std::size_t c = from; c < cols_; ++c) {
      Coeff* s = at(src, c);
      if (f_.is_zero(t_, s)) continue;
      if (scalar) {
        f_.scale(t_, factor[0], s, tmp_.data());
      } else {
        f_.mul(t_, factor, s, tmp_.data());
      }
      f_.sub(t_, at(r, c), tmp_.data(), at(r, c));
    }
  }

  void scale_row(std::size_t r, const Coeff* factor, std::size_t from) {
    for (std::size_t c = from; c < cols_; ++c) {
      if (!f_.is_zero(t_, at(r, c))) f_.mul(t_, at(r, c), factor, at(r, c));
    }
  }

  // Reduced row echelon form; returns pivot columns.
  std::vector<std::size_t> rref(std::size_t limit_cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < limit_cols && row < rows_; ++c) {
      std::size_t p = row;
      while (p < rows_ && zero(p, c)) ++p;
      if (p == rows_) continue;
      if (p != row) swap_rows(p, row);
      f_.inv(t_, at(row, c), inv_.data());
      scale_row(row, inv_.data(), c);
      for (std::size_t r = 0; r < rows_; ++r) {
        if (r == row || zero(r, c)) continue;
        std::copy_n(at(r, c), d_, factor_.data());
        axpy(r, row, factor_.data(), c);
      }
      pivots.push_back(c);
      ++row;
    }
    return pivots;
  }

  std::vector<Coeff>& data() { return data_; }

 private:
  const FieldSpec& f_;
  std::size_t t_;
  std::size_t d_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Coeff> data_;
  std::vector<Coeff> tmp_, factor_, inv_;
};

void RequireSameField(const MatrixF& a, const MatrixF& b) {
  if (a.field().get() != b.field().get() && !a.field()->equals(*b.field())) {
    throw Error(ErrorCode::kFieldMismatch, "matrices over different fields");
  }
}

}  // namespace

MatrixF::MatrixF(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), dim_(field_->degree()),
      data_(rows * cols * dim_, 0) {}

MatrixF MatrixF::identity(FieldPtr field, std::size_t n) {
  MatrixF m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m.entry(i, i)[0] = 1;
  return m;
}

MatrixF MatrixF::from_rows(FieldPtr field, const std::vector<std::vector<FieldElement>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  MatrixF m(std::move(field), rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorCode::kDimensionMismatch, "ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

MatrixF MatrixF::from_ints(FieldPtr field, const std::vector<std::vector<std::int64_t>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  MatrixF m(std::move(field), rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorCode::kDimensionMismatch, "ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m.set_int(r, c, rows[r][c]);
  }
  return m;
}

bool MatrixF::is_zero_entry(std::size_t r, std::size_t c) const {
  return field_->is_zero(field_->level_count(), entry(r, c));
}

FieldElement MatrixF::at(std::size_t r, std::size_t c) const {
  return FieldElement(field_, std::vector<Coeff>(entry(r, c), entry(r, c) + dim_));
}

void MatrixF::set(std::size_t r, std::size_t c, const FieldElement& v) {
  if (!v.valid() || (v.field().get() != field_.get() && !v.field()->equals(*field_))) {
    throw Error(ErrorCode::kFieldMismatch, "entry from a different field");
  }
  std::copy(v.coeffs().begin(), v.coeffs().end(), entry(r, c));
}

void MatrixF::set_int(std::size_t r, std::size_t c, std::int64_t v) {
  Coeff* e = entry(r, c);
  std::fill_n(e, dim_, Coeff{0});
  e[0] = field_->prime().from_int(v);
}

std::vector<FieldElement> MatrixF::row(std::size_t r) const {
  std::vector<FieldElement> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(at(r, c));
  return out;
}

MatrixF MatrixF::transpose() const {
  MatrixF t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) std::copy_n(entry(r, c), dim_, t.entry(c, r));
  }
  return t;
}

MatrixF MatrixF::select_columns(const std::vector<std::size_t>& cols) const {
  MatrixF out(field_, rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j] >= cols_) throw Error(ErrorCode::kDimensionMismatch, "column index out of range");
      std::copy_n(entry(r, cols[j]), dim_, out.entry(r, j));
    }
  }
  return out;
}

MatrixF MatrixF::select_rows(const std::vector<std::size_t>& rows) const {
  MatrixF out(field_, rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] >= rows_) throw Error(ErrorCode::kDimensionMismatch, "row index out of range");
    std::copy_n(entry(rows[i], 0), cols_ * dim_, out.entry(i, 0));
  }
  return out;
}

MatrixF MatrixF::operator*(const MatrixF& b) const {
  RequireSameField(*this, b);
  if (cols_ != b.rows_) throw Error(ErrorCode::kDimensionMismatch, "inner dimensions differ");
  MatrixF out(field_, rows_, b.cols_);
  const FieldSpec& f = *field_;
  const std::size_t t = f.level_count();
  std::vector<Coeff> tmp(dim_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t l = 0; l < cols_; ++l) {
      const Coeff* a = entry(i, l);
      if (f.is_zero(t, a)) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Coeff* bb = b.entry(l, j);
        if (f.is_zero(t, bb)) continue;
        f.mul(t, a, bb, tmp.data());
        f.add(t, out.entry(i, j), tmp.data(), out.entry(i, j));
      }
    }
  }
  return out;
}

bool MatrixF::operator==(const MatrixF& b) const {
  return rows_ == b.rows_ && cols_ == b.cols_ && data_ == b.data_ &&
         (field_.get() == b.field_.get() || field_->equals(*b.field_));
}

bool MatrixF::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Coeff c) { return c == 0; });
}

std::string MatrixF::to_string() const {
  std::string out;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) out += ' ';
      out += '[' + field_->element_to_string({entry(r, c), dim_}) + ']';
    }
    out += '\n';
  }
  return out;
}

FieldElement det_elimination(const MatrixF& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::kNotSquare, "determinant of a non-square matrix");
  const FieldSpec& f = *m.field();
  const std::size_t t = f.level_count();
  const std::size_t n = m.rows();
  const std::size_t d = m.dim();
  std::vector<Coeff> data(n * n * d);
  for (std::size_t r = 0; r < n; ++r) std::copy_n(m.entry(r, 0), n * d, data.data() + r * n * d);
  Eliminator e(f, n, n, std::move(data));
  std::vector<Coeff> result(d, 0), inv(d), factor(d);
  result[0] = 1;
  bool negate = false;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && e.zero(p, c)) ++p;
    if (p == n) return f.zero();
    if (p != c) {
      e.swap_rows(p, c);
      negate = !negate;
    }
    f.mul(t, result.data(), e.at(c, c), result.data());
    if (c + 1 == n) break;
    f.inv(t, e.at(c, c), inv.data());
    for (std::size_t r = c + 1; r < n; ++r) {
      if (e.zero(r, c)) continue;
      f.mul(t, e.at(r, c), inv.data(), factor.data());
      e.axpy(r, c, factor.data(), c + 1);
    }
  }
  if (negate) f.neg(t, result.data(), result.data());
  return f.from_coeffs(std::move(result));
}

FieldElement det_division_free(const MatrixF& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::kNotSquare, "determinant of a non-square matrix");
  const FieldSpec& f = *m.field();
  const std::size_t t = f.level_count();
  const std::size_t n = m.rows();
  const std::size_t d = m.dim();
  if (n == 0) return f.one();
  if (n > 20) return det_elimination(m);
  // minors[mask] = det of rows `mask` (ascending) against columns 0..|mask|-1.
  std::map<std::uint32_t, std::vector<Coeff>> prev;
  prev[0] = std::vector<Coeff>(d, 0);
  prev[0][0] = 1;
  std::vector<Coeff> tmp(d);
  for (std::size_t c = 0; c < n; ++c) {
    std::map<std::uint32_t, std::vector<Coeff>> next;
    for (const auto& [mask, minor] : prev) {
      if (f.is_zero(t, minor.data())) continue;
      for (std::size_t r = 0; r < n; ++r) {
        if (mask & (1u << r)) continue;
        const Coeff* a = m.entry(r, c);
        if (f.is_zero(t, a)) continue;
        const std::uint32_t nm = mask | (1u << r);
        // Row r sits at position `above` in nm; expanding along the last column
        // gives sign (-1)^(above + c).
        const int above = std::popcount(mask & ((1u << r) - 1));
        f.mul(t, a, minor.data(), tmp.data());
        auto it = next.find(nm);
        if (it == next.end()) it = next.emplace(nm, std::vector<Coeff>(d, 0)).first;
        if ((above + static_cast<int>(c)) % 2 == 0) {
          f.add(t, it->second.data(), tmp.data(), it->second.data());
        } else {
          f.sub(t, it->second.data(), tmp.data(), it->second.data());
        }
      }
    }
    prev = std::move(next);
  }
  auto it = prev.find(static_cast<std::uint32_t>((1ull << n) - 1));
  if (it == prev.end()) return f.zero();
  return f.from_coeffs(it->second);
}

FieldElement det(const MatrixF& m) {
  if (m.dim() > kDivisionFreeMinDim) return det_division_free(m);
  return det_elimination(m);
}

bool det_is_zero(const MatrixF& m) { return det(m).is_zero(); }

RrefResult rref(const MatrixF& m) {
  const std::size_t d = m.dim();
  std::vector<Coeff> data(m.rows() * m.cols() * d);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (m.cols()) std::copy_n(m.entry(r, 0), m.cols() * d, data.data() + r * m.cols() * d);
  }
  Eliminator e(*m.field(), m.rows(), m.cols(), std::move(data));
  std::vector<std::size_t> pivots = e.rref(m.cols());
  MatrixF out(m.field(), m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (m.cols()) std::copy_n(e.data().data() + r * m.cols() * d, m.cols() * d, out.entry(r, 0));
  }
  return {std::move(out), std::move(pivots)};
}

std::size_t rank(const MatrixF& m) { return rref(m).pivots.size(); }

MatrixF kernel_matrix(const MatrixF& m) {
  RrefResult rr = rref(m);
  const FieldSpec& f = *m.field();
  const std::size_t t = f.level_count();
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : rr.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (!is_pivot[c]) free.push_back(c);
  }
  MatrixF out(m.field(), free.size(), m.cols());
  for (std::size_t i = 0; i < free.size(); ++i) {
    const std::size_t fc = free[i];
    out.entry(i, fc)[0] = 1;
    for (std::size_t r = 0; r < rr.pivots.size(); ++r) {
      f.neg(t, rr.reduced.entry(r, fc), out.entry(i, rr.pivots[r]));
    }
  }
  return out;
}

std::vector<std::vector<FieldElement>> kernel(const MatrixF& m) {
  MatrixF k = kernel_matrix(m);
  std::vector<std::vector<FieldElement>> out;
  for (std::size_t r = 0; r < k.rows(); ++r) out.push_back(k.row(r));
  return out;
}

std::optional<std::vector<FieldElement>> solve(const MatrixF& m, const std::vector<FieldElement>& b) {
  if (b.size() != m.rows()) throw Error(ErrorCode::kDimensionMismatch, "right-hand side length");
  MatrixF aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) std::copy_n(m.entry(r, c), m.dim(), aug.entry(r, c));
    aug.set(r, m.cols(), b[r]);
  }
  RrefResult rr = rref(aug);
  if (!rr.pivots.empty() && rr.pivots.back() == m.cols()) return std::nullopt;
  std::vector<FieldElement> x(m.cols(), m.field()->zero());
  for (std::size_t r = 0; r < rr.pivots.size(); ++r) x[rr.pivots[r]] = rr.reduced.at(r, m.cols());
  return x;
}

std::vector<FieldElement> mat_vec(const MatrixF& m, const std::vector<FieldElement>& v) {
  if (v.size() != m.cols()) throw Error(ErrorCode::kDimensionMismatch, "vector length");
  std::vector<FieldElement> out(m.rows(), m.field()->zero());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out[r] += m.at(r, c) * v[c];
  }
  return out;
}

namespace {

// Columns of a basis for the column span of m.
MatrixF ColumnBasis(const MatrixF& m) {
  RrefResult rr = rref(m);
  return m.select_columns(rr.pivots);
}

}  // namespace

std::size_t subspace_intersection_dim(const std::vector<MatrixF>& bases) {
  if (bases.empty()) return 0;
  for (const MatrixF& b : bases) {
    RequireSameField(bases[0], b);
    if (b.rows() != bases[0].rows()) throw Error(ErrorCode::kDimensionMismatch, "ambient dimensions differ");
  }
  const FieldSpec& f = *bases[0].field();
  const std::size_t t = f.level_count();
  MatrixF u = ColumnBasis(bases[0]);
  for (std::size_t i = 1; i < bases.size() && u.cols() > 0; ++i) {
    MatrixF w = ColumnBasis(bases[i]);
    if (w.cols() == 0) return 0;
    const std::size_t k = u.rows();
    MatrixF stacked(u.field(), k, u.cols() + w.cols());
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = 0; c < u.cols(); ++c) std::copy_n(u.entry(r, c), u.dim(), stacked.entry(r, c));
      for (std::size_t c = 0; c < w.cols(); ++c) f.neg(t, w.entry(r, c), stacked.entry(r, u.cols() + c));
    }
    MatrixF ker = kernel_matrix(stacked);
    // Intersection vectors u * x for each kernel vector (x, y).
    std::vector<std::size_t> xs(u.cols());
    for (std::size_t c = 0; c < u.cols(); ++c) xs[c] = c;
    MatrixF x = ker.select_columns(xs).transpose();
    u = ColumnBasis(u * x);
  }
  return u.cols();
}

MatrixF block_mds_matrix(const MatrixF& v, const SetTuple& tuple) {
  const std::size_t k = v.rows();
  const std::size_t ell = tuple.ell();
  if (tuple.total_size() != (ell - 1) * k) {
    throw Error(ErrorCode::kSizeConstraintViolated, "set sizes must sum to (l-1)k");
  }
  for (Mask m : tuple.sets) {
    if (static_cast<std::size_t>(MaskSize(m)) > k) throw Error(ErrorCode::kSizeConstraintViolated, "set larger than k");
  }
  MatrixF out(v.field(), ell * k, ell * k);
  std::size_t col = k;
  for (std::size_t i = 0; i < ell; ++i) {
    for (std::size_t r = 0; r < k; ++r) out.entry(i * k + r, r)[0] = 1;
    for (std::size_t j : MaskMembers(tuple.sets[i])) {
      if (j >= v.cols()) throw Error(ErrorCode::kDimensionMismatch, "set element beyond code length");
      for (std::size_t r = 0; r < k; ++r) std::copy_n(v.entry(r, j), v.dim(), out.entry(i * k + r, col));
      ++col;
    }
  }
  return out;
}

MatrixF reduced_block_matrix(const MatrixF& v, const SetTuple& tuple) {
  const std::size_t k = v.rows();
  const std::size_t ell = tuple.ell();
  if (tuple.total_size() != (ell - 1) * k) {
    throw Error(ErrorCode::kSizeConstraintViolated, "set sizes must sum to (l-1)k");
  }
  const std::size_t n = (ell - 1) * k;
  MatrixF out(v.field(), n, n);
  std::vector<std::size_t> first = MaskMembers(tuple.sets[0]);
  std::size_t col = first.size();
  for (std::size_t i = 1; i < ell; ++i) {
    const std::size_t row0 = (i - 1) * k;
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = 0; c < first.size(); ++c) std::copy_n(v.entry(r, first[c]), v.dim(), out.entry(row0 + r, c));
    }
    for (std::size_t j : MaskMembers(tuple.sets[i])) {
      for (std::size_t r = 0; r < k; ++r) std::copy_n(v.entry(r, j), v.dim(), out.entry(row0 + r, col));
      ++col;
    }
  }
  return out;
}

MatrixF vandermonde(const std::vector<FieldElement>& points, std::size_t k) {
  if (points.empty()) throw Error(ErrorCode::kDimensionMismatch, "no points");
  FieldPtr f = points[0].field();
  MatrixF out(f, k, points.size());
  for (std::size_t c = 0; c < points.size(); ++c) {
    FieldElement p = f->one();
    for (std::size_t r = 0; r < k; ++r) {
      out.set(r, c, p);
      if (r + 1 < k) p = p * points[c];
    }
  }
  return out;
}

}  // namespace hmds
