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
#include <random>

#include "hmds/codes.hpp"
#include "hmds/constructions.hpp"
#include "hmds/linalg.hpp"
#include "hmds/mdscheck.hpp"
#include "test_util.hpp"

namespace hmds {
namespace {

using testing::AllVectors;
using testing::DistinctRandom;
using testing::Ext;
using testing::Ints;
using testing::Prime;
using testing::RandomFullRankCode;

// Minimum Hamming weight over all nonzero codewords.
std::size_t MinimumDistance(const CodeSpec& code) {
  const MatrixF g = code.generator_matrix();
  std::size_t best = code.n + 1;
  for (const auto& msg : AllVectors(code.field, code.k)) {
    std::size_t w = 0;
    bool nonzero = false;
    for (std::size_t c = 0; c < code.n; ++c) {
      FieldElement acc = code.field->zero();
      for (std::size_t r = 0; r < code.k; ++r) acc += msg[r] * g.at(r, c);
      if (!acc.is_zero()) ++w;
    }
    for (const auto& x : msg) nonzero = nonzero || !x.is_zero();
    if (nonzero) best = std::min(best, w);
  }
  return best;
}

// MDS(ell) from the definition: every admissible tuple with a generically zero
// intersection has a zero intersection and blocks of full column rank.
bool MdsEllOracle(const CodeSpec& code, std::size_t ell) {
  const MatrixF g = code.generator_matrix();
  bool ok = true;
  enumerate_tuples(code.n, code.k, ell, std::nullopt, true, [&](const SetTuple& t) {
    std::vector<MatrixF> blocks;
    for (Mask m : t.sets) {
      blocks.push_back(g.select_columns(MaskMembers(m)));
      if (rank(blocks.back()) != blocks.back().cols()) ok = false;
    }
    if (ok && subspace_intersection_dim(blocks) != 0) ok = false;
    return ok;
  });
  return ok;
}

CodeSpec RandomRs(const FieldPtr& f, std::size_t n, std::size_t k, std::mt19937_64& rng) {
  return CodeSpec::reed_solomon(f, DistinctRandom(f, n, rng), k);
}

TEST(MdsCheck, ReedSolomonIsMds) {
  const FieldPtr f = Prime(11);
  const CodeSpec rs = CodeSpec::reed_solomon(f, Ints(f, {0, 1, 2, 3, 4, 5, 6, 7}), 3);
  const CheckReport r = is_mds(rs);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.tuples, 56u);
}

TEST(MdsCheck, RepeatedColumnFailsWithTwoSetWitness) {
  const FieldPtr f = Prime(11);
  const CodeSpec c = CodeSpec::explicit_code(MatrixF::from_ints(f, {{1, 0, 1, 1}, {0, 1, 0, 2}}));
  const CheckReport r = is_mds(c);
  EXPECT_EQ(r.verdict, Verdict::kFail);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->ell(), 2u);
  EXPECT_EQ(r.witness->sets[0] | r.witness->sets[1], MaskOf({0, 2}));
  const CheckReport r3 = is_mds_ell(c, 3);
  EXPECT_EQ(r3.verdict, Verdict::kFail);
  ASSERT_TRUE(r3.witness.has_value());
  EXPECT_EQ(r3.witness->ell(), 2u);
}

TEST(MdsCheck, MatchesMinimumDistance) {
  std::mt19937_64 rng(21);
  const FieldPtr f4 = Ext(2, 2);
  int mds = 0;
  for (int i = 0; i < 90; ++i) {
    const std::size_t n = 4 + i % 3;
    const CodeSpec c = RandomFullRankCode(f4, n / 2, n, rng);
    const bool oracle = MinimumDistance(c) == c.n - c.k + 1;
    EXPECT_EQ(is_mds(c).passed(), oracle);
    mds += oracle;
  }
  EXPECT_GT(mds, 0);
}

TEST(MdsCheck, EllTwoEqualsMds) {
  std::mt19937_64 rng(22);
  const FieldPtr f = Prime(5);
  for (int i = 0; i < 50; ++i) {
    const CodeSpec c = RandomFullRankCode(f, 2 + i % 2, 5, rng);
    EXPECT_EQ(is_mds_ell(c, 2).passed(), is_mds(c).passed());
  }
}

TEST(MdsCheck, ReedSolomonSixThreeOverSevenAllPathsAgree) {
  const FieldPtr f = Prime(7);
  const CodeSpec rs = CodeSpec::reed_solomon(f, Ints(f, {0, 1, 2, 3, 4, 5}), 3);
  CheckOptions block, product, pairing;
  block.method = CheckOptions::Method::kBlock;
  product.method = CheckOptions::Method::kProductMatrix;
  pairing.method = CheckOptions::Method::kPairing;
  const CheckReport a = is_mds_ell(rs, 3, block);
  const CheckReport b = is_mds_ell(rs, 3, product);
  const CheckReport c = is_mds3_rs_fast(rs, pairing);
  EXPECT_EQ(a.verdict, b.verdict);
  EXPECT_EQ(a.verdict, c.verdict);
  EXPECT_EQ(a.passed(), MdsEllOracle(rs, 3));
  EXPECT_LE(c.tuples, 15u);
  const CodeSpec good = construct_k3_n4(6).code;
  const CheckReport g = is_mds3_rs_fast(good, pairing);
  EXPECT_TRUE(g.passed());
  EXPECT_EQ(g.tuples, 15u);
}

TEST(MdsCheck, FastPathAgreesWithBlockPathOnRandomRs) {
  std::mt19937_64 rng(23);
  const std::vector<FieldPtr> fields = {Ext(2, 3), Prime(11), Ext(3, 2), Ext(7, 2), Prime(13)};
  int passes = 0, fails = 0;
  for (int i = 0; i < 100; ++i) {
    const FieldPtr& f = fields[i % fields.size()];
    const std::size_t n = 6 + rng() % 3;
    const CodeSpec rs = RandomRs(f, n, 3, rng);
    CheckOptions block;
    block.method = CheckOptions::Method::kBlock;
    const CheckReport fast = is_mds3_rs_fast(rs);
    const CheckReport slow = is_mds_ell(rs, 3, block);
    EXPECT_EQ(fast.verdict, slow.verdict);
    (fast.passed() ? passes : fails)++;
  }
  EXPECT_GT(passes, 0);
  EXPECT_GT(fails, 0);
}

TEST(MdsCheck, BlockAndProductPathsAgreeForLargerK) {
  std::mt19937_64 rng(24);
  const std::vector<FieldPtr> fields = {Prime(11), Ext(5, 2), Prime(23), Ext(7, 2)};
  for (int i = 0; i < 40; ++i) {
    const FieldPtr& f = fields[i % fields.size()];
    const std::size_t k = 2 + i % 3;
    const std::size_t n = k + 2 + rng() % (9 - k - 1);
    const CodeSpec rs = RandomRs(f, std::min<std::size_t>(n, 8), k, rng);
    CheckOptions block, product;
    block.method = CheckOptions::Method::kBlock;
    product.method = CheckOptions::Method::kProductMatrix;
    const CheckReport a = is_mds_ell(rs, 3, block);
    EXPECT_EQ(a.verdict, is_mds_ell(rs, 3, product).verdict);
    if (rs.n <= 7) { EXPECT_EQ(a.passed(), MdsEllOracle(rs, 3)); }
  }
}

TEST(MdsCheck, MdsEllMatchesDefinitionOnExplicitCodes) {
  std::mt19937_64 rng(25);
  const FieldPtr f = Prime(5);
  for (int i = 0; i < 40; ++i) {
    const CodeSpec c = RandomFullRankCode(f, 2 + i % 2, 5, rng);
    for (std::size_t ell : {3u, 4u}) EXPECT_EQ(is_mds_ell(c, ell).passed(), MdsEllOracle(c, ell));
  }
}

TEST(MdsCheck, WeakReductionPreservesIntersection) {
  std::mt19937_64 rng(26);
  const FieldPtr f = Prime(13);
  for (int i = 0; i < 200; ++i) {
    const CodeSpec rs = RandomRs(f, 8, 4, rng);
    const MatrixF g = rs.generator_matrix();
    std::vector<Mask> sets;
    enumerate_tuples(8, 4, 3, std::nullopt, true, [&](const SetTuple& t) {
      if (rng() % 64 == 0) {
        const SetTuple reduced = weak_reduce(t);
        EXPECT_EQ(tuple_intersection_zero(g, t), rs_tuple_intersection_zero(rs.generators, reduced));
        return false;
      }
      return true;
    });
  }
}

TEST(MdsCheck, PairingDeterminantVanishesOnRepeatedPair) {
  const FieldPtr f = Prime(101);
  const auto b = Ints(f, {3, 7, 3, 7, 11, 13});
  EXPECT_TRUE(pairing_determinant(b[0], b[1], b[2], b[3], b[4], b[5]).is_zero());
  EXPECT_EQ(SixPointPairings().size(), 15u);
}

TEST(MdsCheck, ThreadCountDoesNotChangeResult) {
  const FieldPtr f = Prime(7);
  const CodeSpec rs = CodeSpec::reed_solomon(f, Ints(f, {0, 1, 2, 3, 4, 5, 6}), 3);
  CheckOptions one, four;
  one.threads = 1;
  four.threads = 4;
  one.method = four.method = CheckOptions::Method::kBlock;
  const CheckReport a = is_mds_ell(rs, 3, one);
  const CheckReport b = is_mds_ell(rs, 3, four);
  EXPECT_EQ(a.verdict, b.verdict);
  EXPECT_EQ(a.tuples, b.tuples);
  EXPECT_EQ(a.witness_text, b.witness_text);
}

TEST(MdsCheck, MonotoneInEll) {
  std::mt19937_64 rng(27);
  const FieldPtr f = Prime(7);
  for (int i = 0; i < 30; ++i) {
    const CodeSpec c = RandomFullRankCode(f, 2, 5, rng);
    if (is_mds_ell(c, 4).passed()) { EXPECT_TRUE(is_mds_ell(c, 3).passed()); }
    if (is_mds_ell(c, 3).passed()) { EXPECT_TRUE(is_mds(c).passed()); }
  }
}

TEST(MdsCheck, DualOfMdsThreeIsMdsThree) {
  std::mt19937_64 rng(28);
  const FieldPtr f = Prime(11);
  int checked = 0;
  for (int i = 0; i < 40; ++i) {
    const CodeSpec c = RandomRs(f, 6, 3, rng);
    if (!is_mds_ell(c, 3).passed()) continue;
    EXPECT_TRUE(is_mds_ell(dual_code(c), 3).passed());
    ++checked;
  }
  EXPECT_GT(checked, 0);
}

TEST(MdsCheck, LowerBoundWitness) {
  const FieldPtr f = Prime(7);
  const CodeSpec tiny = CodeSpec::reed_solomon(f, Ints(f, {0, 1, 2, 3}), 3);
  const CheckReport t = lb_witness_projective(tiny);
  EXPECT_TRUE(t.passed());
  EXPECT_EQ(t.detail("subsets"), "1");
  EXPECT_EQ(t.detail("bound_holds"), "true");
  // Whenever two subsets share a projective point the code is not MDS(3).
  std::mt19937_64 rng(29);
  int fails = 0;
  for (int i = 0; i < 40; ++i) {
    const CodeSpec c = RandomRs(i % 2 ? Prime(7) : Ext(2, 3), 6, 3, rng);
    const CheckReport lb = lb_witness_projective(c);
    if (!lb.passed()) {
      ++fails;
      EXPECT_FALSE(is_mds_ell(c, 3).passed());
    }
    if (is_mds_ell(c, 3).passed()) { EXPECT_TRUE(lb.passed()); }
  }
  EXPECT_GT(fails, 0);
}

TEST(MdsCheck, SearchTrivialAndSmall) {
  const FieldPtr f4 = Ext(2, 2);
  const SearchResult trivial = exhaustive_code_search(3, 3, f4);
  EXPECT_EQ(trivial.count, 1u);
  const SearchResult small = exhaustive_code_search(5, 2, f4);
  for (const CodeSpec& c : small.exemplars) {
    EXPECT_TRUE(lb_witness_projective(c).passed());
    EXPECT_TRUE(is_mds_ell(c, 3).passed());
  }
  EXPECT_LE(small.count, small.mds_codes);
  EXPECT_LE(small.mds_codes, small.distinct_codes);
}

TEST(MdsCheck, SearchSixThreeOverFour) {
  // The 486 MDS codes are the hyperoval count 168 * 6! * 3^6 / |GL(3,4)|.
  const SearchResult r = exhaustive_code_search(6, 3, Ext(2, 2));
  EXPECT_EQ(r.count, 0u);
  EXPECT_EQ(r.mds_codes, 486u);
  EXPECT_EQ(r.distinct_codes, 376805u);
}

TEST(MdsCheck, Binomial) {
  EXPECT_EQ(Binomial(6, 3), 20u);
  EXPECT_EQ(Binomial(10, 0), 1u);
  EXPECT_EQ(Binomial(3, 5), 0u);
  EXPECT_EQ(Binomial(60, 30), 118264581564861424u);
}

}  // namespace
}  // namespace hmds
