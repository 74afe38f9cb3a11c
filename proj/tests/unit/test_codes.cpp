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

#include "hmds/codes.hpp"
#include "hmds/error.hpp"
#include "hmds/linalg.hpp"
#include "test_util.hpp"

namespace hmds {
namespace {

using testing::Ints;
using testing::Prime;
using testing::RandomMatrix;

// A random tuple with ell sets of size at most k summing to (ell-1)k over [n].
SetTuple RandomTuple(std::size_t n, std::size_t k, std::size_t ell, std::mt19937_64& rng) {
  const std::size_t cap = std::min(n, k);
  std::vector<std::size_t> sizes(ell, 0);
  std::size_t remaining = (ell - 1) * k;
  while (remaining > 0) {
    const std::size_t i = rng() % ell;
    if (sizes[i] < cap) {
      ++sizes[i];
      --remaining;
    }
  }
  SetTuple t{n, k, {}};
  std::vector<std::size_t> cols(n);
  std::iota(cols.begin(), cols.end(), 0);
  for (std::size_t s : sizes) {
    std::shuffle(cols.begin(), cols.end(), rng);
    t.sets.push_back(MaskOf(std::vector<std::size_t>(cols.begin(), cols.begin() + s)));
  }
  return t;
}

template <typename F>
void ExpectError(ErrorCode code, F&& f) {
  try {
    f();
    ADD_FAILURE() << "no error thrown";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

TEST(Codes, ReedSolomonGeneratorMatrix) {
  const FieldPtr f7 = Prime(7);
  const CodeSpec rs = CodeSpec::reed_solomon(f7, Ints(f7, {0, 1, 2}), 2);
  EXPECT_EQ(rs_generator_matrix(rs), MatrixF::from_ints(f7, {{1, 1, 1}, {0, 1, 2}}));
  const CodeSpec k1 = CodeSpec::reed_solomon(f7, Ints(f7, {3, 4, 5}), 1);
  EXPECT_EQ(rs_generator_matrix(k1), MatrixF::from_ints(f7, {{1, 1, 1}}));
  const CodeSpec k3 = CodeSpec::reed_solomon(f7, Ints(f7, {1, 2, 3}), 3);
  EXPECT_EQ(rank(k3.generator_matrix()), 3u);
  const CodeSpec ex = CodeSpec::explicit_code(MatrixF::from_ints(f7, {{1, 0, 1}}));
  ExpectError(ErrorCode::kWrongKind, [&] { rs_generator_matrix(ex); });
}

TEST(Codes, ExplicitCodeRequiresFullRank) {
  const FieldPtr f7 = Prime(7);
  ExpectError(ErrorCode::kRankLoss,
              [&] { CodeSpec::explicit_code(MatrixF::from_ints(f7, {{1, 2, 3}, {2, 4, 6}})); });
}

TEST(Codes, ReedSolomonMinorsAreNonzero) {
  const FieldPtr f = Prime(13);
  const CodeSpec rs = CodeSpec::reed_solomon(f, testing::FirstElements(f, 12), 4);
  const MatrixF g = rs.generator_matrix();
  for (Mask m : combinations(12, 4)) EXPECT_FALSE(det(g.select_columns(MaskMembers(m))).is_zero());
}

TEST(Codes, DualExamples) {
  const FieldPtr f7 = Prime(7);
  const CodeSpec rs = CodeSpec::reed_solomon(f7, Ints(f7, {0, 1, 2}), 2);
  const CodeSpec d = dual_code(rs);
  EXPECT_EQ(d.k, 1u);
  EXPECT_EQ(d.generator_matrix(), MatrixF::from_ints(f7, {{1, 5, 1}}));
  const CodeSpec full = CodeSpec::explicit_code(MatrixF::identity(f7, 3));
  const CodeSpec zero = dual_code(full);
  EXPECT_EQ(zero.k, 0u);
  EXPECT_EQ(zero.generator_matrix().rows(), 0u);
}

TEST(Codes, DualIsOrthogonalAndDoubleDualRecoversCode) {
  std::mt19937_64 rng(7);
  for (const FieldPtr& f : {Prime(3), testing::Ext(2, 2), Prime(11)}) {
    for (int i = 0; i < 40; ++i) {
      const std::size_t n = 2 + i % 6;
      const std::size_t k = 1 + rng() % (n - 1);
      const CodeSpec c = testing::RandomFullRankCode(f, k, n, rng);
      const CodeSpec d = dual_code(c);
      const MatrixF g = c.generator_matrix();
      const MatrixF h = d.generator_matrix();
      EXPECT_EQ(rank(h), n - k);
      EXPECT_TRUE((h * g.transpose()).is_zero());
      const MatrixF gg = dual_code(d).generator_matrix();
      EXPECT_EQ(rref(gg).reduced, rref(g).reduced);
    }
  }
}

TEST(Codes, Puncture) {
  const FieldPtr f = Prime(11);
  const CodeSpec rs = CodeSpec::reed_solomon(f, Ints(f, {1, 2, 3, 4, 5, 6}), 2);
  const CodeSpec same = puncture(rs, {0, 1, 2, 3, 4, 5});
  EXPECT_EQ(same.generator_matrix(), rs.generator_matrix());
  const CodeSpec p = puncture(rs, {0, 1, 2});
  EXPECT_TRUE(p.is_rs());
  EXPECT_EQ(p.n, 3u);
  EXPECT_EQ(p.generators, Ints(f, {1, 2, 3}));
  ExpectError(ErrorCode::kRankLoss, [&] { puncture(rs, {4}); });
  const CodeSpec ex = CodeSpec::explicit_code(MatrixF::from_ints(f, {{1, 0, 1}, {0, 1, 0}}));
  ExpectError(ErrorCode::kRankLoss, [&] { puncture(ex, {0, 2}); });
  // Punctured MDS code stays MDS.
  const MatrixF g = puncture(rs, {1, 3, 5}).generator_matrix();
  for (Mask m : combinations(3, 2)) EXPECT_FALSE(det(g.select_columns(MaskMembers(m))).is_zero());
}

TEST(Codes, GenericallyZeroExamples) {
  EXPECT_TRUE(generically_zero(SetTuple::parse("1,2;3,4;5,6", 6, 3)));
  EXPECT_FALSE(generically_zero(SetTuple::parse("1,2;1,3;1,4", 6, 3)));
  ExpectError(ErrorCode::kSizeConstraintViolated, [] { generically_zero(SetTuple::parse("1,2;3;4", 6, 3)); });
  ExpectError(ErrorCode::kSizeConstraintViolated,
              [] { generically_zero(SetTuple::parse("1,2,3,4;5;6", 6, 3)); });
}

TEST(Codes, TripleIntersectionIsNeverGenericallyZero) {
  std::mt19937_64 rng(8);
  int seen = 0;
  for (int i = 0; i < 2000; ++i) {
    const SetTuple t = RandomTuple(7, 3, 3, rng);
    if ((t.sets[0] & t.sets[1] & t.sets[2]) != 0) {
      EXPECT_FALSE(generically_zero(t));
      ++seen;
    }
  }
  EXPECT_GT(seen, 0);
}

TEST(Codes, ThreeSetShortcutMatchesPartitions) {
  enumerate_tuples(6, 3, 3, std::nullopt, false, [](const SetTuple& t) {
    EXPECT_EQ(generically_zero_three(t), generically_zero_partitions(t)) << t.to_string();
    return true;
  });
}

TEST(Codes, GenericallyZeroIsSymmetric) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 300; ++i) {
    const std::size_t ell = 2 + i % 3;
    SetTuple t = RandomTuple(8, 3, ell, rng);
    const bool base = generically_zero(t);
    SetTuple permuted = t;
    std::shuffle(permuted.sets.begin(), permuted.sets.end(), rng);
    EXPECT_EQ(generically_zero(permuted), base);
    std::vector<std::size_t> relabel(8);
    std::iota(relabel.begin(), relabel.end(), 0);
    std::shuffle(relabel.begin(), relabel.end(), rng);
    SetTuple renamed = t;
    for (Mask& m : renamed.sets) {
      std::vector<std::size_t> members;
      for (std::size_t j : MaskMembers(m)) members.push_back(relabel[j]);
      m = MaskOf(members);
    }
    EXPECT_EQ(generically_zero(renamed), base);
  }
}

TEST(Codes, GenericallyZeroAgreesWithGenericOracle) {
  std::mt19937_64 rng(10);
  int zero = 0;
  for (int i = 0; i < 600; ++i) {
    const std::size_t ell = 2 + i % 3;
    const std::size_t k = 1 + rng() % 4;
    const std::size_t n = k + rng() % (11 - k);
    const SetTuple t = RandomTuple(n, k, ell, rng);
    const bool oracle = generic_intersection_dim(t, 1000 + i) == 0;
    EXPECT_EQ(generically_zero(t), oracle) << t.to_string() << " k=" << k;
    zero += oracle;
  }
  EXPECT_GT(zero, 50);
}

TEST(Codes, GenericOracleFourSetsDimensionTwo) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const SetTuple t = RandomTuple(6, 2, 4, rng);
    EXPECT_EQ(generically_zero(t), generic_intersection_dim(t, i) == 0) << t.to_string();
  }
}

TEST(Codes, TupleCounts) {
  EXPECT_EQ(count_tuples(6, 3, 3, std::vector<std::size_t>{2, 2, 2}, false), 3375u);
  std::uint64_t disjoint = 0, streamed = 0;
  enumerate_tuples(6, 3, 3, std::vector<std::size_t>{2, 2, 2}, false, [&](const SetTuple& t) {
    ++streamed;
    if ((t.sets[0] & t.sets[1]) == 0 && (t.sets[0] & t.sets[2]) == 0 && (t.sets[1] & t.sets[2]) == 0) ++disjoint;
    return true;
  });
  EXPECT_EQ(streamed, 3375u);
  EXPECT_EQ(disjoint, 90u);
  // Every disjoint tuple is generically zero, so the filtered stream contains them all.
  std::uint64_t filtered = 0, filtered_disjoint = 0;
  enumerate_tuples(6, 3, 3, std::vector<std::size_t>{2, 2, 2}, true, [&](const SetTuple& t) {
    ++filtered;
    if ((t.sets[0] & t.sets[1]) == 0 && (t.sets[0] & t.sets[2]) == 0 && (t.sets[1] & t.sets[2]) == 0) {
      ++filtered_disjoint;
    }
    return true;
  });
  EXPECT_EQ(filtered_disjoint, 90u);
  EXPECT_EQ(filtered, count_tuples(6, 3, 3, std::vector<std::size_t>{2, 2, 2}, true));
}

TEST(Codes, EnumerationIsLexicographicAndStoppable) {
  std::vector<std::vector<Mask>> seen;
  enumerate_tuples(4, 2, 2, std::nullopt, false, [&](const SetTuple& t) {
    seen.push_back(t.sets);
    return seen.size() < 5;
  });
  EXPECT_EQ(seen.size(), 5u);
  std::vector<std::vector<Mask>> all;
  enumerate_tuples(4, 2, 2, std::vector<std::size_t>{1, 1}, false, [&](const SetTuple& t) {
    all.push_back(t.sets);
    return true;
  });
  EXPECT_EQ(all.size(), 16u);
}

TEST(Codes, FeasibleProfiles) {
  // Oracle: brute force over all vectors in [0, cap]^ell.
  const auto profiles = feasible_profiles(8, 4, 3, 3);
  std::set<std::vector<std::size_t>> expected;
  for (std::size_t a = 0; a <= 3; ++a) {
    for (std::size_t b = 0; b <= 3; ++b) {
      for (std::size_t c = 0; c <= 3; ++c) {
        if (a + b + c == 8) expected.insert({a, b, c});
      }
    }
  }
  EXPECT_EQ(std::set<std::vector<std::size_t>>(profiles.begin(), profiles.end()), expected);
  EXPECT_EQ(profiles.size(), 3u);
  ExpectError(ErrorCode::kInfeasibleProfile, [] {
    enumerate_tuples(6, 3, 3, std::vector<std::size_t>{4, 1, 1}, false, [](const SetTuple&) { return true; });
  });
}

TEST(Codes, CombinationsAreLexicographic) {
  const auto c = combinations(5, 2);
  ASSERT_EQ(c.size(), 10u);
  EXPECT_EQ(MaskMembers(c.front()), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(MaskMembers(c.back()), (std::vector<std::size_t>{3, 4}));
  for (std::size_t i = 1; i < c.size(); ++i) EXPECT_LT(MaskMembers(c[i - 1]), MaskMembers(c[i]));
}

TEST(Codes, SetTupleTextRoundTrip) {
  const SetTuple t = SetTuple::parse("1,2;3,4;5,6", 6, 3);
  EXPECT_EQ(t.to_string(), "1,2;3,4;5,6");
  EXPECT_EQ(t.total_size(), 6u);
  EXPECT_EQ(SetTuple::parse(t.to_string(), 6, 3), t);
}

TEST(Codes, RandomMatrixIsDeterministic) {
  const FieldPtr f = Prime(101);
  EXPECT_EQ(random_matrix(f, 3, 4, 5), random_matrix(f, 3, 4, 5));
  EXPECT_NE(random_matrix(f, 3, 4, 5), random_matrix(f, 3, 4, 6));
}

}  // namespace
}  // namespace hmds
