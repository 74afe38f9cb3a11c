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

#include <set>

#include "hmds/constructions.hpp"
#include "hmds/error.hpp"
#include "hmds/mdscheck.hpp"
#include "test_util.hpp"

namespace hmds {
namespace {

std::string Provenance(const Construction& c, const std::string& key) {
  for (const auto& [k, v] : c.provenance) {
    if (k == key) return v;
  }
  return "";
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

TEST(Constructions, PrimePowers) {
  EXPECT_FALSE(AsPrimePower(12).has_value());
  EXPECT_FALSE(AsPrimePower(1).has_value());
  const auto p = AsPrimePower(49);
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(p->p, 7u);
  EXPECT_EQ(p->e, 2u);
  const PrimePower s = SmallestPrimePower(7, 2, true);
  EXPECT_EQ(s.p, 7u);
  EXPECT_EQ(SmallestPrimePower(8, 2, true).p, 3u);  // 9
  EXPECT_EQ(SmallestPrimePower(8).p, 2u);           // 8
}

TEST(Constructions, DegreeThreeFourthPower) {
  const Construction c7 = construct_k3_n4(7);
  EXPECT_EQ(Provenance(c7, "q"), "7");
  EXPECT_EQ(c7.code.field->degree(), 4u);
  EXPECT_TRUE(is_mds(c7.code).passed());
  EXPECT_TRUE(is_mds3_rs_fast(c7.code).passed());

  const Construction c1 = construct_k3_n4(1);
  EXPECT_EQ(c1.code.n, 1u);

  const Construction c9 = construct_k3_n4(9);
  EXPECT_EQ(Provenance(c9, "q"), "9");
  EXPECT_EQ(c9.code.field->characteristic(), 3u);
  EXPECT_TRUE(is_mds3_rs_fast(c9.code).passed());
}

TEST(Constructions, DegreeThreeCubic) {
  const Construction c = construct_k3_n3(7);
  EXPECT_EQ(Provenance(c, "q"), "49");
  EXPECT_EQ(c.code.field->degree(), 6u);
  EXPECT_TRUE(is_mds3_rs_fast(c.code).passed());

  const Construction c10 = construct_k3_n3(10);
  EXPECT_EQ(Provenance(c10, "q"), "2401");
  EXPECT_TRUE(is_mds3_rs_fast(c10.code).passed());
}

TEST(Constructions, SixSumSet) {
  const FieldPtr base = MakeBaseField(PrimePower{7, 2});
  const auto s = k3n3_s_set(base, 7);
  ASSERT_EQ(s.size(), 7u);
  for (const FieldElement& x : s) EXPECT_EQ(x.coeffs().back(), 1);
  std::uint64_t checked = 0;
  EXPECT_TRUE(no_six_sum_zero(s, &checked));
  EXPECT_EQ(checked, 7u);
  ExpectError(ErrorCode::kInvalidArgument, [&] { k3n3_s_set(base, 8); });
  ExpectError(ErrorCode::kCharacteristicMismatch, [] { k3n3_s_set(testing::Prime(5), 1); });
}

TEST(Constructions, GeneralK) {
  const Construction c = construct_k4(5, 3);
  EXPECT_EQ(Provenance(c, "q"), "5");
  EXPECT_EQ(Provenance(c, "extension_degree"), "5");
  EXPECT_TRUE(is_mds(c.code).passed());
  CheckOptions block;
  block.method = CheckOptions::Method::kBlock;
  EXPECT_TRUE(is_mds_ell(c.code, 3, block).passed());
  ExpectError(ErrorCode::kInvalidArgument, [] { construct_k4(5, 1); });
}

TEST(Constructions, SidonSets) {
  const FieldPtr f = testing::Prime(101);
  const auto s = sidon_set_greedy(f, 8);
  ASSERT_EQ(s.size(), 8u);
  EXPECT_TRUE(is_sidon(s));
  // Independent check: all sums a_i + a_j with i < j are distinct.
  std::set<std::vector<Coeff>> sums;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) EXPECT_TRUE(sums.insert((s[i] + s[j]).coeffs()).second);
  }
  EXPECT_FALSE(is_sidon(testing::Ints(f, {0, 1, 2, 3})));
  ExpectError(ErrorCode::kSidonSetNotFound, [] { sidon_set_greedy(testing::Prime(5), 5); });
}

TEST(Constructions, WeakDegreeFive) {
  const Construction c = construct_k5_weak(8);
  EXPECT_EQ(c.code.k, 5u);
  EXPECT_EQ(Provenance(c, "extension_degree"), "25");
  EXPECT_TRUE(is_mds(c.code).passed());
  const Construction small = construct_k5_weak(6, 5, 10);
  EXPECT_EQ(Provenance(small, "extension_degree"), "10");
  EXPECT_FALSE(small.warnings.empty());
  EXPECT_TRUE(is_mds(small.code).passed());
}

TEST(Constructions, GeneralEll) {
  const Construction c = construct_general(6, 2, 2, 8);
  EXPECT_EQ(c.code.field->degree(), 4096u);
  EXPECT_TRUE(is_mds_ell(c.code, 2).passed());
  const Construction k1 = construct_general(4, 1, 2);
  EXPECT_EQ(k1.code.k, 1u);
  EXPECT_TRUE(is_mds_ell(k1.code, 2).passed());
  std::set<std::vector<Coeff>> gens;
  for (const FieldElement& g : k1.code.generators) {
    EXPECT_FALSE(g.is_zero());
    EXPECT_TRUE(gens.insert(g.coeffs()).second);
  }
  ExpectError(ErrorCode::kInvalidArgument, [] { construct_general(5, 2, 3, 6); });
  ExpectError(ErrorCode::kBudgetExceeded, [] { construct_general(6, 3, 3, 27, 1000); });
}

TEST(Constructions, Deterministic) {
  for (const char* name : {"k3-n4", "k3-n3", "k4-general"}) {
    ConstructionParams p;
    p.name = name;
    p.n = 7;
    const Construction a = construct(p), b = construct(p);
    EXPECT_TRUE(a.code.field->equals(*b.code.field));
    EXPECT_EQ(a.code.generators, b.code.generators);
    EXPECT_EQ(a.provenance, b.provenance);
  }
}

TEST(Constructions, DispatchErrors) {
  ConstructionParams p;
  p.name = "nope";
  p.n = 5;
  ExpectError(ErrorCode::kInvalidArgument, [&] { construct(p); });
  p.name = "general-ell";
  ExpectError(ErrorCode::kInvalidArgument, [&] { construct(p); });
  ExpectError(ErrorCode::kInvalidArgument, [] { construct_k3_n4(0); });
}

}  // namespace
}  // namespace hmds
