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


#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "hmds/error.hpp"
#include "hmds/linalg.hpp"
#include "test_util.hpp"

namespace hmds {
namespace {

using testing::AllVectors;
using testing::Ext;
using testing::Ints;
using testing::Prime;
using testing::RandomMatrix;

// Brute force: the set of all vectors in the column span of m.
std::set<std::vector<Coeff>> SpanOf(const MatrixF& m) {
  std::set<std::vector<Coeff>> out;
  for (const auto& coeffs : AllVectors(m.field(), m.cols())) {
    std::vector<Coeff> v;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      FieldElement acc = m.field()->zero();
      for (std::size_t c = 0; c < m.cols(); ++c) acc += m.at(r, c) * coeffs[c];
      for (Coeff x : acc.coeffs()) v.push_back(x);
    }
    out.insert(v);
  }
  return out;
}

std::size_t LogBase(std::size_t size, std::size_t q) {
  std::size_t d = 0;
  while (size > 1) {
    size /= q;
    ++d;
  }
  return d;
}

TEST(Linalg, DeterminantExamples) {
  const FieldPtr f7 = Prime(7);
  EXPECT_EQ(det(MatrixF::identity(f7, 4)), f7->one());
  const MatrixF v = vandermonde(Ints(f7, {1, 2, 3}), 3);
  EXPECT_EQ(det(v), f7->from_int(2));
}

TEST(Linalg, DeterminantMultiplicativeAndTranspose) {
  std::mt19937_64 rng(1);
  for (const FieldPtr& f : {Prime(11), Ext(2, 4), Ext(7, 3)}) {
    for (int i = 0; i < 200; ++i) {
      const std::size_t n = 1 + i % 5;
      const MatrixF a = RandomMatrix(f, n, n, rng), b = RandomMatrix(f, n, n, rng);
      ASSERT_EQ(det(a * b), det(a) * det(b));
      ASSERT_EQ(det(a.transpose()), det(a));
    }
  }
}

TEST(Linalg, DivisionFreeDeterminantAgrees) {
  std::mt19937_64 rng(2);
  const FieldPtr f = Ext(5, 3);
  for (int i = 0; i < 50; ++i) {
    const MatrixF a = RandomMatrix(f, 4, 4, rng);
    EXPECT_EQ(det_elimination(a), det_division_free(a));
  }
}

TEST(Linalg, RankAndKernel) {
  const FieldPtr f7 = Prime(7);
  const MatrixF zero(f7, 3, 5);
  EXPECT_EQ(rank(zero), 0u);
  EXPECT_EQ(kernel(zero).size(), 5u);
  const MatrixF g = MatrixF::from_ints(f7, {{1, 1, 1}, {0, 1, 2}});
  const auto k = kernel(g);
  ASSERT_EQ(k.size(), 1u);
  // Normalize to first coordinate 1 and compare with (1, 5, 1).
  const FieldElement s = k[0][0].inverse();
  EXPECT_EQ(k[0][0] * s, f7->from_int(1));
  EXPECT_EQ(k[0][1] * s, f7->from_int(5));
  EXPECT_EQ(k[0][2] * s, f7->from_int(1));
  EXPECT_EQ(rank(vandermonde(Ints(f7, {0, 1, 2, 3}), 4)), 4u);
}

TEST(Linalg, RankOfTransposeAndKernelVectors) {
  std::mt19937_64 rng(3);
  const FieldPtr f = Prime(3);
  for (int i = 0; i < 200; ++i) {
    const MatrixF m = RandomMatrix(f, 1 + i % 4, 1 + (i / 4) % 5, rng);
    EXPECT_EQ(rank(m), rank(m.transpose()));
    const auto k = kernel(m);
    EXPECT_EQ(k.size() + rank(m), m.cols());
    for (const auto& v : k) {
      for (const FieldElement& x : mat_vec(m, v)) EXPECT_TRUE(x.is_zero());
    }
  }
}

TEST(Linalg, SolveConsistentAndInconsistent) {
  const FieldPtr f = Prime(5);
  const MatrixF m = MatrixF::from_ints(f, {{1, 2}, {2, 4}});
  const auto sol = solve(m, Ints(f, {3, 1}));
  ASSERT_TRUE(sol.has_value());
  EXPECT_EQ(mat_vec(m, *sol), Ints(f, {3, 1}));
  EXPECT_FALSE(solve(m, Ints(f, {1, 1})).has_value());
}

TEST(Linalg, IntersectionExamples) {
  const FieldPtr f7 = Prime(7);
  const MatrixF a = MatrixF::from_ints(f7, {{1, 2}, {3, 4}});
  EXPECT_EQ(subspace_intersection_dim({a, a}), 2u);
  const MatrixF e1 = MatrixF::from_ints(f7, {{1}, {0}});
  const MatrixF e2 = MatrixF::from_ints(f7, {{0}, {1}});
  EXPECT_EQ(subspace_intersection_dim({e1, e2}), 0u);
}

TEST(Linalg, IntersectionMatchesExhaustiveEnumeration) {
  std::mt19937_64 rng(4);
  const FieldPtr f = Prime(3);
  for (int i = 0; i < 60; ++i) {
    std::vector<MatrixF> bases;
    for (int j = 0; j < 3; ++j) bases.push_back(RandomMatrix(f, 4, 1 + rng() % 3, rng));
    std::set<std::vector<Coeff>> common = SpanOf(bases[0]);
    for (int j = 1; j < 3; ++j) {
      const auto s = SpanOf(bases[j]);
      std::set<std::vector<Coeff>> keep;
      for (const auto& v : common) {
        if (s.count(v)) keep.insert(v);
      }
      common = keep;
    }
    EXPECT_EQ(subspace_intersection_dim(bases), LogBase(common.size(), 3));
  }
}

TEST(Linalg, BlockMatrixLayout) {
  const FieldPtr f7 = Prime(7);
  const MatrixF v = MatrixF::from_ints(f7, {{1, 2, 3}, {4, 5, 6}});
  const SetTuple t{3, 2, {MaskOf({0}), MaskOf({1})}};
  const MatrixF b = block_mds_matrix(v, t);
  ASSERT_EQ(b.rows(), 4u);
  ASSERT_EQ(b.cols(), 4u);
  const MatrixF expected = MatrixF::from_ints(f7, {{1, 0, 1, 0}, {0, 1, 4, 0}, {1, 0, 0, 2}, {0, 1, 0, 5}});
  EXPECT_EQ(b, expected);
  std::mt19937_64 rng(1);
  const MatrixF v3 = RandomMatrix(f7, 3, 6, rng);
  const SetTuple t3{6, 3, {MaskOf({0, 1}), MaskOf({2, 3}), MaskOf({4, 5})}};
  EXPECT_EQ(block_mds_matrix(v3, t3).rows(), 9u);
  EXPECT_EQ(block_mds_matrix(v3, t3).cols(), 9u);
}

TEST(Linalg, BlockDeterminantMatchesIntersection) {
  // Kernel of the block matrix = intersection plus the kernels of the blocks,
  // so the determinant is nonzero iff the intersection is zero and every block
  // has independent columns.
  std::mt19937_64 rng(5);
  const FieldPtr f = Prime(3);
  int zero = 0;
  for (int i = 0; i < 200; ++i) {
    const std::size_t k = 2 + rng() % 2;
    const std::size_t ell = 2 + rng() % 2;
    const std::size_t n = 6;
    const MatrixF v = RandomMatrix(f, k, n, rng);
    SetTuple t{n, k, {}};
    std::size_t remaining = (ell - 1) * k;
    for (std::size_t j = 0; j < ell; ++j) {
      const std::size_t size = j + 1 == ell ? remaining : std::min<std::size_t>(remaining, rng() % (k + 1));
      if (size > k) break;
      std::vector<std::size_t> cols(n);
      std::iota(cols.begin(), cols.end(), 0);
      std::shuffle(cols.begin(), cols.end(), rng);
      t.sets.push_back(MaskOf(std::vector<std::size_t>(cols.begin(), cols.begin() + size)));
      remaining -= size;
    }
    if (t.sets.size() != ell) continue;
    std::vector<MatrixF> blocks;
    bool independent = true;
    for (Mask m : t.sets) {
      blocks.push_back(v.select_columns(MaskMembers(m)));
      independent = independent && rank(blocks.back()) == blocks.back().cols();
    }
    const bool oracle = independent && subspace_intersection_dim(blocks) == 0;
    EXPECT_EQ(!det(block_mds_matrix(v, t)).is_zero(), oracle);
    zero += oracle;
  }
  EXPECT_GT(zero, 0);
}

TEST(Linalg, ReducedBlockMatrixHasSameSingularity) {
  std::mt19937_64 rng(6);
  const FieldPtr f = Prime(5);
  for (int i = 0; i < 100; ++i) {
    const MatrixF v = RandomMatrix(f, 3, 6, rng);
    const SetTuple t{6, 3, {MaskOf({0, 1}), MaskOf({2, 3}), MaskOf({4, 5})}};
    EXPECT_EQ(det(block_mds_matrix(v, t)).is_zero(), det(reduced_block_matrix(v, t)).is_zero());
  }
}

TEST(Linalg, ShapeErrors) {
  const FieldPtr f = Prime(7);
  const MatrixF a(f, 2, 3);
  try {
    (void)(a * a);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimensionMismatch);
  }
  try {
    det(a);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotSquare);
  }
}

}  // namespace
}  // namespace hmds
