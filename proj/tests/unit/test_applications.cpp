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

#include "hmds/applications.hpp"
#include "hmds/codes.hpp"
#include "hmds/constructions.hpp"
#include "hmds/error.hpp"
#include "hmds/linalg.hpp"
#include "hmds/mdscheck.hpp"
#include "test_util.hpp"

namespace hmds {
namespace {

using testing::AllVectors;
using testing::Ext;
using testing::Ints;
using testing::Prime;
using testing::RandomFullRankCode;

std::vector<std::vector<FieldElement>> Codewords(const CodeSpec& code) {
  const MatrixF g = code.generator_matrix();
  std::vector<std::vector<FieldElement>> out;
  for (const auto& msg : AllVectors(code.field, code.k)) {
    std::vector<FieldElement> c(code.n, code.field->zero());
    for (std::size_t j = 0; j < code.n; ++j) {
      for (std::size_t r = 0; r < code.k; ++r) c[j] += msg[r] * g.at(r, j);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::size_t Distance(const std::vector<FieldElement>& a, const std::vector<FieldElement>& b) {
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

// For each received word, the sorted distances to all codewords.
std::vector<std::vector<std::size_t>> DistanceProfiles(const CodeSpec& code) {
  const auto words = Codewords(code);
  std::vector<std::vector<std::size_t>> out;
  for (const auto& y : AllVectors(code.field, code.n)) {
    std::vector<std::size_t> d;
    for (const auto& c : words) d.push_back(Distance(c, y));
    std::sort(d.begin(), d.end());
    out.push_back(std::move(d));
  }
  return out;
}

// Average-radius form from the definition: no received word has L+1 distinct
// codewords whose distances sum to at most L(n-k).
bool LdMdsOracle(const CodeSpec& code, std::size_t list) {
  const std::size_t limit = list * (code.n - code.k);
  for (const auto& d : DistanceProfiles(code)) {
    if (d.size() <= list) continue;
    std::size_t sum = 0;
    for (std::size_t i = 0; i <= list; ++i) sum += d[i];
    if (sum <= limit) return false;
  }
  return true;
}

bool WorstCaseOracle(const CodeSpec& code, std::size_t list, std::size_t radius) {
  for (const auto& d : DistanceProfiles(code)) {
    if (static_cast<std::size_t>(std::count_if(d.begin(), d.end(), [&](std::size_t x) { return x <= radius; })) >
        list) {
      return false;
    }
  }
  return true;
}

TEST(Applications, MdsCodesAreListOne) {
  const FieldPtr f = Prime(7);
  const CodeSpec rs = CodeSpec::reed_solomon(f, Ints(f, {0, 1, 2, 3, 4}), 2);
  EXPECT_TRUE(ld_mds_check(rs, 1).passed());
  const CodeSpec bad = CodeSpec::explicit_code(MatrixF::from_ints(f, {{1, 0, 1, 1}, {0, 1, 0, 2}}));
  EXPECT_FALSE(ld_mds_check(bad, 1).passed());
}

TEST(Applications, ZeroDimensionalDualIsVacuous) {
  const FieldPtr f = Prime(5);
  const CodeSpec full = CodeSpec::explicit_code(MatrixF::identity(f, 3));
  const CodeSpec zero = dual_code(full);
  EXPECT_TRUE(ld_mds_check(zero, 2).passed());
  EXPECT_TRUE(duality_test(full, 2).passed());
}

TEST(Applications, ListCheckMatchesDefinition) {
  std::mt19937_64 rng(31);
  for (const FieldPtr& f : {Prime(3), Ext(2, 2)}) {
    for (int i = 0; i < 15; ++i) {
      const std::size_t n = 4 + i % 2;
      const CodeSpec c = RandomFullRankCode(f, 2, n, rng);
      for (std::size_t list : {1u, 2u}) {
        EXPECT_EQ(ld_mds_check(c, list, false).passed(), LdMdsOracle(c, list)) << list;
      }
      EXPECT_EQ(ld_mds_check(c, 2, true).passed(), LdMdsOracle(c, 1) && LdMdsOracle(c, 2));
    }
  }
}

TEST(Applications, DualityOnSixThreeOverFour) {
  std::mt19937_64 rng(32);
  const FieldPtr f4 = Ext(2, 2);
  for (int i = 0; i < 10; ++i) {
    const CodeSpec c = RandomFullRankCode(f4, 3, 6, rng);
    EXPECT_EQ(ld_mds_check(dual_code(c), 2).passed(), is_mds_ell(c, 3).passed());
  }
}

TEST(Applications, DualityReedSolomonAndRandom) {
  const FieldPtr f7 = Prime(7);
  const CodeSpec rs = CodeSpec::reed_solomon(f7, Ints(f7, {0, 1, 2, 3, 4}), 2);
  const CheckReport r = duality_test(rs, 2);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.detail("mds3"), r.detail("dual_ld_mds<=2"));
  std::mt19937_64 rng(33);
  const std::vector<FieldPtr> fields = {Prime(2), Prime(3), Ext(2, 2), Prime(5)};
  for (int i = 0; i < 50; ++i) {
    const FieldPtr& f = fields[i % fields.size()];
    const std::size_t n = 3 + rng() % 4;
    const std::size_t k = 1 + rng() % n;
    EXPECT_TRUE(duality_test(RandomFullRankCode(f, k, n, rng), 2).passed());
  }
}

TEST(Applications, WorstCaseRadii) {
  std::mt19937_64 rng(34);
  const FieldPtr f5 = Prime(5);
  const CodeSpec rs = CodeSpec::reed_solomon(f5, Ints(f5, {0, 1, 2, 3, 4}), 3);
  EXPECT_TRUE(worst_case_ld_check(rs, 1, 0, 1).passed());
  // d = 3, unique decoding radius (d-1)/(2n) gives one error.
  EXPECT_TRUE(worst_case_ld_check(rs, 1, 1, 5).passed());
  EXPECT_FALSE(worst_case_ld_check(rs, 1, 2, 5).passed());
  for (int i = 0; i < 8; ++i) {
    const CodeSpec c = RandomFullRankCode(Prime(3), 2, 5, rng);
    for (std::uint64_t num = 0; num <= 3; ++num) {
      const bool verdict = worst_case_ld_check(c, 2, num, 5).passed();
      EXPECT_EQ(verdict, WorstCaseOracle(c, 2, num));
      if (num > 0 && verdict) { EXPECT_TRUE(worst_case_ld_check(c, 2, num - 1, 5).passed()); }
    }
  }
}

TEST(Applications, AverageRadiusImpliesWorstCase) {
  std::mt19937_64 rng(35);
  int strong = 0;
  for (int i = 0; i < 20; ++i) {
    const FieldPtr f = i % 2 ? Prime(5) : Ext(2, 2);
    const CodeSpec c = RandomFullRankCode(f, 2, 4, rng);
    const std::size_t list = 2;
    if (!ld_mds_check(c, list, false).passed()) continue;
    ++strong;
    EXPECT_TRUE(worst_case_ld_check(c, list, list * (c.n - c.k), (list + 1) * c.n).passed());
  }
  EXPECT_GT(strong, 0);
}

TEST(Applications, SingletonRadiusOnSixThree) {
  std::mt19937_64 rng(36);
  const FieldPtr f5 = Prime(5);
  CodeSpec c = RandomFullRankCode(f5, 3, 6, rng);
  while (!is_mds(c).passed()) c = RandomFullRankCode(f5, 3, 6, rng);
  const CheckReport r = worst_case_ld_check(c, 2, 1, 3);
  EXPECT_EQ(r.detail("radius"), "2");
  if (ld_mds_check(c, 2, false).passed()) { EXPECT_TRUE(r.passed()); }
}

TEST(Applications, ErasurePatternText) {
  const ErasurePattern e = ErasurePattern::parse("1,2;3,5", 3, 5);
  ASSERT_EQ(e.cells.size(), 2u);
  EXPECT_EQ(e.cells[0], (std::pair<std::size_t, std::size_t>{0, 1}));
  EXPECT_EQ(e.linear(), (std::vector<std::size_t>{1, 14}));
  EXPECT_EQ(e.to_string(), "1,2;3,5");
  try {
    ErasurePattern::parse("4,1", 3, 5);
    FAIL();
  } catch (const Error& err) {
    EXPECT_TRUE(err.code() == ErrorCode::kParseError || err.code() == ErrorCode::kInvalidArgument);
  }
}

TEST(Applications, TensorParityBasics) {
  const Construction row = construct_k3_n4(5);
  const TensorCodeSpec spec = parity_column_tensor(row.code, 3);
  EXPECT_EQ(spec.a(), 1u);
  EXPECT_EQ(spec.b(), 2u);
  const MatrixF h = tensor_parity(spec);
  EXPECT_EQ(h.cols(), 15u);
  EXPECT_EQ(rank(h), 15u - 2u * 3u);
  EXPECT_TRUE(pattern_correctable(h, {}));
  EXPECT_TRUE(pattern_correctable(h, {0, 5, 10}));  // one full column
  EXPECT_TRUE(pattern_correctable(h, {0, 6, 12}));  // one erasure per column
  EXPECT_FALSE(pattern_correctable(h, {0, 1, 2, 5, 6, 7, 10, 11, 12, 3}));
}

TEST(Applications, MaximallyRecoverableMatchesMdsThree) {
  const auto oracle = std::make_shared<GenericTensorOracle>(3, 5, 1, 2, 7);
  MrOptions opts;
  opts.oracle = oracle;
  const CodeSpec good = construct_k3_n4(5).code;
  ASSERT_TRUE(is_mds_ell(good, 3).passed());
  EXPECT_TRUE(mr_check(parity_column_tensor(good, 3), opts).passed());
  std::mt19937_64 rng(37);
  CodeSpec bad = RandomFullRankCode(Prime(5), 3, 5, rng);
  while (is_mds_ell(bad, 3).passed()) bad = RandomFullRankCode(Prime(5), 3, 5, rng);
  const CheckReport r = mr_check(parity_column_tensor(bad, 3), opts);
  EXPECT_FALSE(r.passed());
  EXPECT_FALSE(r.witness_text.empty());
}

TEST(Applications, BudgetExceeded) {
  const FieldPtr f = Prime(7);
  const CodeSpec rs = CodeSpec::reed_solomon(f, Ints(f, {0, 1, 2, 3, 4, 5}), 3);
  try {
    worst_case_ld_check(rs, 1, 1, 3, 100);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBudgetExceeded);
  }
}

}  // namespace
}  // namespace hmds
