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

#include <random>

#include "hmds/error.hpp"
#include "hmds/fields.hpp"
#include "test_util.hpp"

namespace hmds {
namespace {

using testing::Ext;
using testing::Prime;
using testing::RandomElement;
using testing::Tower;

// Brute force: a monic polynomial over F_p of degree d <= 7 is irreducible iff
// it has no monic factor of degree 1..d/2 (checked by trial division).
bool IrreducibleByTrialDivision(Coeff p, const std::vector<Coeff>& f) {
  const std::size_t d = f.size() - 1;
  for (std::size_t e = 1; 2 * e <= d; ++e) {
    std::vector<Coeff> g(e + 1, 0);
    g[e] = 1;
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < e; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::uint64_t rest = idx;
      for (std::size_t i = 0; i < e; ++i) {
        g[i] = rest % p;
        rest /= p;
      }
      std::vector<Coeff> r = f;
      for (std::size_t top = d; top >= e; --top) {
        const Coeff c = r[top];
        if (c != 0) {
          for (std::size_t i = 0; i <= e; ++i) {
            Coeff& slot = r[top - e + i];
            slot = (slot + p - (c * g[i]) % p) % p;
          }
        }
        if (top == e) break;
      }
      bool zero = true;
      for (Coeff c : r) zero = zero && c == 0;
      if (zero) return false;
    }
  }
  return true;
}

TEST(Fields, PrimeFieldBasics) {
  const FieldPtr f7 = Prime(7);
  EXPECT_EQ(f7->degree(), 1u);
  EXPECT_EQ(f7->from_int(3) * f7->from_int(5), f7->one());
  EXPECT_EQ(f7->one().inverse(), f7->one());
  EXPECT_EQ(f7->from_int(-1), f7->from_int(6));
  EXPECT_THROW(field_make(9), Error);
  try {
    field_make(15);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotPrime);
  }
}

TEST(Fields, IsPrimeMatchesTrialDivision) {
  for (std::uint64_t n = 0; n < 5000; ++n) {
    bool prime = n >= 2;
    for (std::uint64_t d = 2; d * d <= n; ++d) prime = prime && n % d != 0;
    EXPECT_EQ(IsPrime(n), prime) << n;
  }
  EXPECT_TRUE(IsPrime(2147483659ull));
  EXPECT_FALSE(IsPrime(2147483659ull * 3));
  EXPECT_TRUE(IsPrime(18446744073709551557ull));
}

TEST(Fields, SuppliedCubicOverF7) {
  // x^3 - 2, coefficients (c0, c1, c2, c3).
  const FieldPtr f = field_make(7, {ExtensionRequest{3, std::vector<Coeff>{5, 0, 0, 1}}});
  EXPECT_EQ(f->degree(), 3u);
  EXPECT_EQ(*f->order(), 343u);
  const FieldElement g = f->generator(1);
  EXPECT_EQ(g * g * g, f->from_int(2));
  EXPECT_EQ(g * (g * g), f->from_int(2));
  EXPECT_EQ(frobenius(g), f->from_int(4) * g);
}

TEST(Fields, SuppliedQuadraticOverF5) {
  const FieldPtr f = field_make(5, {ExtensionRequest{2, std::vector<Coeff>{3, 0, 1}}});
  const FieldElement g = f->generator(1);
  EXPECT_EQ(g * g, f->from_int(2));
}

TEST(Fields, ReduciblePolynomialRejected) {
  // x^2 - 4 = (x - 2)(x + 2) over F_5.
  try {
    field_make(5, {ExtensionRequest{2, std::vector<Coeff>{1, 0, 1}}});
    FAIL() << "expected a reducible-polynomial error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kReduciblePolynomial);
  }
}

TEST(Fields, EmptyTowerIsPrimeField) {
  const FieldPtr f = field_make(7, {});
  EXPECT_EQ(f->degree(), 1u);
  EXPECT_EQ(f->level_count(), 0u);
}

TEST(Fields, FindIrreducibleSmallCases) {
  const FieldPtr f2 = Prime(2);
  EXPECT_EQ(find_irreducible(*f2, 1), (std::vector<Coeff>{0, 1}));
  const FieldPtr f7 = Prime(7);
  const std::vector<Coeff> cubic = find_irreducible(*f7, 3);
  EXPECT_TRUE(IrreducibleByTrialDivision(7, cubic));
  EXPECT_TRUE(is_irreducible_gcd_test(*f7, {5, 0, 0, 1}));
  EXPECT_TRUE(IrreducibleByTrialDivision(7, {5, 0, 0, 1}));
  EXPECT_EQ(find_irreducible(*f7, 3), cubic);
}

TEST(Fields, FindIrreducibleIsLexicographicallySmallest) {
  for (Coeff p : {2, 3, 5}) {
    for (std::size_t d = 2; d <= 4; ++d) {
      const std::vector<Coeff> found = find_irreducible(*Prime(p), d);
      // Scan candidates in the same order (constant term fastest) by brute force.
      std::vector<Coeff> cand(d + 1, 0);
      cand[d] = 1;
      while (!IrreducibleByTrialDivision(p, cand)) {
        std::size_t i = 0;
        while (++cand[i] == p) cand[i++] = 0;
      }
      EXPECT_EQ(found, cand) << "p=" << p << " d=" << d;
    }
  }
}

TEST(Fields, DegreeSevenOverF11AgreesWithFactorSearch) {
  const std::vector<Coeff> f = find_irreducible(*Prime(11), 7);
  EXPECT_TRUE(is_irreducible_gcd_test(*Prime(11), f));
  EXPECT_TRUE(IrreducibleByTrialDivision(11, f));
}

TEST(Fields, GcdTestAgreesWithTrialDivision) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    const Coeff p = (i % 2) ? 3 : 5;
    const std::size_t d = 2 + i % 4;
    std::vector<Coeff> f(d + 1);
    for (std::size_t j = 0; j < d; ++j) f[j] = rng() % p;
    f[d] = 1;
    EXPECT_EQ(is_irreducible_gcd_test(*Prime(p), f), IrreducibleByTrialDivision(p, f));
  }
}

TEST(Fields, FrobeniusProperties) {
  std::mt19937_64 rng(1);
  const FieldPtr f = Ext(3, 4);
  for (int i = 0; i < 200; ++i) {
    const FieldElement a = RandomElement(f, rng);
    FieldElement b = a;
    for (int j = 0; j < 4; ++j) b = frobenius(b);
    EXPECT_EQ(b, a);
    EXPECT_EQ(frobenius(a), a.pow(3));
  }
  const FieldPtr f7 = Prime(7);
  for (int v = 0; v < 7; ++v) EXPECT_EQ(frobenius(f7->from_int(v)), f7->from_int(v));
}

TEST(Fields, FieldAxiomsOnConstructedFields) {
  std::mt19937_64 rng(2);
  const std::vector<FieldPtr> fields = {Prime(7), Ext(2, 8), Tower(3, {2, 3}), Tower(7, {2, 3}), Ext(11, 7),
                                        generic_field()};
  for (const FieldPtr& f : fields) {
    const u128 q = f->order().value_or(0);
    for (int i = 0; i < 10000; ++i) {
      const FieldElement a = RandomElement(f, rng), b = RandomElement(f, rng), c = RandomElement(f, rng);
      ASSERT_EQ((a + b) + c, a + (b + c));
      ASSERT_EQ((a * b) * c, a * (b * c));
      ASSERT_EQ(a * b, b * a);
      ASSERT_EQ(a * (b + c), a * b + a * c);
      ASSERT_TRUE((a + (-a)).is_zero());
      if (!a.is_zero()) { ASSERT_EQ(a * a.inverse(), f->one()); }
      if (i < 50 && q != 0) { ASSERT_EQ(a.pow(q), a); }
    }
  }
}

TEST(Fields, InverseMatchesFermat) {
  std::mt19937_64 rng(3);
  for (const FieldPtr& f : {Ext(2, 8), Tower(7, {2, 3}), Ext(11, 7)}) {
    for (int i = 0; i < 200; ++i) {
      const FieldElement a = RandomElement(f, rng);
      if (a.is_zero()) continue;
      EXPECT_EQ(a.inverse(), ff_inv_fermat(a));
    }
  }
}

TEST(Fields, CanonicalRepresentation) {
  std::mt19937_64 rng(4);
  const FieldPtr f = Tower(7, {2, 3});
  for (int i = 0; i < 100; ++i) {
    const FieldElement a = RandomElement(f, rng);
    const FieldElement z = ff_add(a, ff_neg(a));
    for (Coeff c : z.coeffs()) EXPECT_EQ(c, 0u);
    EXPECT_EQ(z.coeffs().size(), f->degree());
  }
}

TEST(Fields, IndexRoundTrip) {
  const FieldPtr f = Tower(2, {2, 3});
  for (u128 i = 0; i < *f->order(); ++i) EXPECT_EQ(f->index_of(f->from_index(i)), i);
}

TEST(Fields, DivisionByZeroThrows) {
  const FieldPtr f = Ext(5, 2);
  try {
    f->zero().inverse();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDivisionByZero);
  }
}

TEST(Fields, MixedFieldsRejected) {
  const FieldPtr a = Prime(7), b = Prime(11);
  try {
    (void)(a->one() + b->one());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kFieldMismatch);
  }
}

TEST(Fields, LiftEmbedsSubfield) {
  std::mt19937_64 rng(6);
  const FieldPtr top = Tower(5, {2, 3});
  const FieldPtr sub = top->prefix(1);
  for (int i = 0; i < 100; ++i) {
    const FieldElement a = RandomElement(sub, rng), b = RandomElement(sub, rng);
    EXPECT_EQ(top->lift(a * b), top->lift(a) * top->lift(b));
    EXPECT_EQ(top->lift(a + b), top->lift(a) + top->lift(b));
  }
}

TEST(Fields, DescribeAndParseRoundTrip) {
  const FieldPtr f = Tower(3, {2, 3});
  std::vector<std::string> lines;
  std::string text = f->describe(), line;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(line);
      line.clear();
    } else {
      line += c;
    }
  }
  const FieldPtr g = parse_field_block(lines);
  EXPECT_TRUE(g->equals(*f));
  const FieldElement a = f->from_index(100);
  EXPECT_EQ(parse_element(g, a.to_string()).coeffs(), a.coeffs());
}

TEST(Fields, LargeTowerArithmetic) {
  // A three-level tower of total degree 8^3 over F_7.
  std::mt19937_64 rng(7);
  const FieldPtr f = Tower(7, {8, 8, 8});
  EXPECT_EQ(f->degree(), 512u);
  for (int i = 0; i < 5; ++i) {
    const FieldElement a = RandomElement(f, rng), b = RandomElement(f, rng);
    if (a.is_zero()) continue;
    EXPECT_EQ(a * a.inverse(), f->one());
    EXPECT_EQ((a * b) * a.inverse(), b);
  }
}

}  // namespace
}  // namespace hmds
