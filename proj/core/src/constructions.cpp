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

#include "hmds/constructions.hpp"

#include <set>
#include <utility>

#include "hmds/error.hpp"
#include "hmds/text.hpp"

namespace hmds {
namespace {

std::string IndexList(const std::vector<FieldElement>& xs, const FieldSpec& f) {
  std::vector<std::string> parts;
  for (const FieldElement& x : xs) parts.push_back(std::to_string(static_cast<std::uint64_t>(f.index_of(x))));
  return text::Join(parts, ",");
}

std::vector<ExtensionRequest> BaseLevels(const PrimePower& q) {
  if (q.e <= 1) return {};
  return {ExtensionRequest{q.e, std::nullopt}};
}

// alpha_i = i-th element (0-based) of the base-field enumeration, embedded in
// the top field. Indices below |F_q| only touch the base coordinates.
std::vector<FieldElement> Enumerated(const FieldPtr& top, std::size_t n) {
  std::vector<FieldElement> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(top->from_index(i));
  return out;
}

void CheckN(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "n must be positive");
  if (n > 64) throw Error(ErrorCode::kInvalidArgument, "n must be at most 64");
}

}  // namespace

std::optional<PrimePower> AsPrimePower(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  for (std::uint64_t p = 2; p * p <= q; ++p) {
    if (q % p) continue;
    std::size_t e = 0;
    std::uint64_t r = q;
    while (r % p == 0) {
      r /= p;
      ++e;
    }
    if (r != 1) return std::nullopt;
    return PrimePower{p, e};
  }
  return PrimePower{q, 1};
}

PrimePower SmallestPrimePower(std::uint64_t lower, std::uint64_t min_char, bool odd) {
  for (std::uint64_t q = std::max<std::uint64_t>(lower, 2);; ++q) {
    auto pp = AsPrimePower(q);
    if (!pp || pp->p < min_char || (odd && pp->p == 2)) continue;
    return *pp;
  }
}

FieldPtr MakeBaseField(const PrimePower& q) { return field_make(q.p, BaseLevels(q)); }

Construction construct_k3_n4(std::size_t n) {
  CheckN(n);
  const PrimePower q = SmallestPrimePower(n, 3, true);
  std::vector<ExtensionRequest> levels = BaseLevels(q);
  levels.push_back({4, std::nullopt});
  FieldPtr f = field_make(q.p, levels);
  const FieldElement gamma = f->generator(f->level_count());
  std::vector<FieldElement> alpha = Enumerated(f, n), beta;
  for (const FieldElement& a : alpha) beta.push_back(a + gamma * a * a);
  Construction c;
  c.name = "k3-n4";
  c.code = CodeSpec::reed_solomon(f, std::move(beta), std::min<std::size_t>(3, n));
  std::uint64_t qv = 1;
  for (std::size_t i = 0; i < q.e; ++i) qv *= q.p;
  c.provenance = {{"theorem", "k3-n4"},   {"n", std::to_string(n)},    {"k", std::to_string(c.code.k)},
                  {"q", std::to_string(qv)}, {"p", std::to_string(q.p)}, {"e", std::to_string(q.e)},
                  {"extension_degree", "4"}, {"beta", "alpha + gamma*alpha^2"},
                  {"alpha", IndexList(alpha, *f)}};
  if (n < 3) c.warnings.push_back("n < 3: the code has dimension n");
  return c;
}

std::vector<FieldElement> k3n3_s_set(const FieldPtr& base, std::size_t count) {
  const std::size_t e = base->degree();
  std::uint64_t top = 1;
  for (std::size_t i = 0; i + 1 < e; ++i) top *= 7;
  if (base->characteristic() != 7) throw Error(ErrorCode::kCharacteristicMismatch, "S lives in a power of F_7");
  if (count > top) throw Error(ErrorCode::kInvalidArgument, "S has only q/7 elements");
  std::vector<FieldElement> out;
  for (std::uint64_t j = 0; j < count; ++j) out.push_back(base->from_index(top + j));
  return out;
}

bool no_six_sum_zero(const std::vector<FieldElement>& s, std::uint64_t* subsets_checked) {
  const std::size_t n = s.size();
  std::uint64_t checked = 0;
  bool ok = true;
  if (n >= 6) {
    for (Mask m : combinations(n, 6)) {
      ++checked;
      FieldElement sum = s[0].field()->zero();
      for (std::size_t i : MaskMembers(m)) sum += s[i];
      if (sum.is_zero()) {
        ok = false;
        break;
      }
    }
  }
  if (subsets_checked) *subsets_checked = checked;
  return ok;
}

Construction construct_k3_n3(std::size_t n) {
  CheckN(n);
  std::size_t e = 1;
  std::uint64_t q = 7;
  while (q < 7 * n || e % 3 == 0) {
    ++e;
    q *= 7;
  }
  const PrimePower pq{7, e};
  FieldPtr base = MakeBaseField(pq);
  // x^3 - 2 over F_q, flattened with coefficients in F_q.
  std::vector<Coeff> poly(4 * e, 0);
  poly[0] = 5;
  poly[3 * e] = 1;
  std::vector<ExtensionRequest> levels = BaseLevels(pq);
  levels.push_back({3, poly});
  FieldPtr f = field_make(7, levels);
  const FieldElement gamma = f->generator(f->level_count());
  std::vector<FieldElement> s_base = k3n3_s_set(base, n);
  std::vector<FieldElement> alpha, beta;
  for (const FieldElement& a : s_base) alpha.push_back(f->lift(a));
  for (const FieldElement& a : alpha) beta.push_back(a + gamma * a * a);
  Construction c;
  c.name = "k3-n3";
  c.code = CodeSpec::reed_solomon(f, std::move(beta), std::min<std::size_t>(3, n));
  c.provenance = {{"theorem", "k3-n3"},
                  {"n", std::to_string(n)},
                  {"k", std::to_string(c.code.k)},
                  {"q", std::to_string(q)},
                  {"e", std::to_string(e)},
                  {"gamma_minpoly", "x^3-2"},
                  {"S", "top F7-coordinate equal to 1 (|S|=" + std::to_string(q / 7) + ")"},
                  {"beta", "alpha + gamma*alpha^2"},
                  {"alpha", IndexList(s_base, *base)}};
  if (n < 3) c.warnings.push_back("n < 3: the code has dimension n");
  c.warnings.push_back("q = 7^e is restricted to 3 not dividing e, since x^3 - 2 is irreducible over F_{7^e} "
                       "exactly in that case");
  return c;
}

Construction construct_k4(std::size_t n, std::size_t k) {
  CheckN(n);
  if (k < 2) throw Error(ErrorCode::kInvalidArgument, "k must be at least 2");
  const PrimePower q = SmallestPrimePower(n, k);
  if (q.p < k) throw Error(ErrorCode::kInvalidArgument, "characteristic must be at least k");
  std::vector<ExtensionRequest> levels = BaseLevels(q);
  levels.push_back({2 * k - 1, std::nullopt});
  FieldPtr f = field_make(q.p, levels);
  const FieldElement gamma = f->generator(f->level_count());
  std::vector<FieldElement> alpha = Enumerated(f, n), beta;
  for (const FieldElement& a : alpha) beta.push_back(gamma * a - a * a);
  std::uint64_t qv = 1;
  for (std::size_t i = 0; i < q.e; ++i) qv *= q.p;
  Construction c;
  c.name = "k4-general";
  c.code = CodeSpec::reed_solomon(f, std::move(beta), k);
  c.provenance = {{"theorem", "k4-general"},
                  {"n", std::to_string(n)},
                  {"k", std::to_string(k)},
                  {"q", std::to_string(qv)},
                  {"p", std::to_string(q.p)},
                  {"e", std::to_string(q.e)},
                  {"extension_degree", std::to_string(2 * k - 1)},
                  {"beta", "gamma*alpha - alpha^2"},
                  {"alpha", IndexList(alpha, *f)}};
  return c;
}

bool is_sidon(const std::vector<FieldElement>& alphas) {
  std::set<std::vector<Coeff>> sums;
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    for (std::size_t j = i + 1; j < alphas.size(); ++j) {
      if (alphas[i] == alphas[j]) return false;
      if (!sums.insert((alphas[i] + alphas[j]).coeffs()).second) return false;
    }
  }
  return true;
}

std::vector<FieldElement> sidon_set_greedy(const FieldPtr& field, std::size_t n) {
  const auto order = field->order();
  if (!order) throw Error(ErrorCode::kInvalidArgument, "field too large to enumerate");
  std::vector<FieldElement> chosen;
  std::set<std::vector<Coeff>> sums;
  for (u128 idx = 0; idx < *order && chosen.size() < n; ++idx) {
    const FieldElement c = field->from_index(idx);
    std::vector<std::vector<Coeff>> fresh;
    bool ok = true;
    for (const FieldElement& a : chosen) {
      std::vector<Coeff> s = (a + c).coeffs();
      if (sums.count(s)) {
        ok = false;
        break;
      }
      fresh.push_back(std::move(s));
    }
    if (!ok) continue;
    for (auto& s : fresh) sums.insert(std::move(s));
    chosen.push_back(c);
  }
  if (chosen.size() < n) {
    throw Error(ErrorCode::kSidonSetNotFound, "no Sidon set of size " + std::to_string(n) + " found greedily in a field of order " +
                                                  std::to_string(static_cast<std::uint64_t>(*order)));
  }
  return chosen;
}

std::vector<FieldElement> sidon_set_bch(const FieldPtr& field, std::size_t n) {
  if (field->characteristic() != 2 || field->level_count() < 2 || field->level(field->level_count()).degree != 2) {
    throw Error(ErrorCode::kInvalidArgument, "the BCH Sidon set needs a field F_{2^m}[w] with [w] of degree 2");
  }
  const FieldPtr sub = field->prefix(field->level_count() - 1);
  const auto order = sub->order();
  if (!order || *order < n) throw Error(ErrorCode::kSidonSetNotFound, "F_{2^m} has fewer than n elements");
  const FieldElement w = field->generator(field->level_count());
  std::vector<FieldElement> out;
  for (std::size_t i = 0; i < n; ++i) {
    const FieldElement x = field->lift(sub->from_index(i));
    out.push_back(x + x * x * x * w);
  }
  return out;
}

Construction construct_k5_weak(std::size_t n, std::size_t k, std::optional<std::size_t> extension_degree,
                               std::optional<std::uint64_t> q, bool bch) {
  CheckN(n);
  if (k < 2) throw Error(ErrorCode::kInvalidArgument, "k must be at least 2");
  const std::size_t degree = extension_degree.value_or(k * k);
  if (degree == 0) throw Error(ErrorCode::kInvalidArgument, "extension degree must be positive");
  FieldPtr base;
  std::vector<FieldElement> alpha_base;
  std::string sidon_source;
  if (bch) {
    std::size_t m = 1;
    while ((std::uint64_t{1} << m) < n) ++m;
    std::vector<ExtensionRequest> lv;
    if (m > 1) lv.push_back({m, std::nullopt});
    lv.push_back({2, std::nullopt});
    base = field_make(2, lv);
    if (q && *q != (std::uint64_t{1} << (2 * m))) {
      throw Error(ErrorCode::kInvalidArgument, "the BCH Sidon set lives in F_{2^(2m)} with 2^m >= n");
    }
    alpha_base = sidon_set_bch(base, n);
    sidon_source = "bch";
  } else if (q) {
    auto pq = AsPrimePower(*q);
    if (!pq) throw Error(ErrorCode::kInvalidArgument, "q must be a prime power");
    base = MakeBaseField(*pq);
    alpha_base = sidon_set_greedy(base, n);
    sidon_source = "greedy";
  } else {
    for (std::uint64_t p = std::max<std::uint64_t>(n, 2);; ++p) {
      if (!IsPrime(p)) continue;
      try {
        base = field_make(p);
        alpha_base = sidon_set_greedy(base, n);
        break;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kSidonSetNotFound) throw;
      }
    }
    sidon_source = "greedy";
  }
  if (!is_sidon(alpha_base)) throw Error(ErrorCode::kSidonSetNotFound, "Sidon property check failed");
  std::vector<ExtensionRequest> levels;
  for (std::size_t t = 1; t <= base->level_count(); ++t) levels.push_back({base->level(t).degree, base->level(t).minpoly});
  levels.push_back({degree, std::nullopt});
  FieldPtr f = field_make(base->characteristic(), levels);
  const FieldElement x = f->generator(f->level_count());
  std::vector<FieldElement> beta;
  for (const FieldElement& a : alpha_base) {
    const FieldElement al = f->lift(a);
    beta.push_back(al * x - al * al);
  }
  const auto order = base->order();
  Construction c;
  c.name = "k5-weak";
  c.code = CodeSpec::reed_solomon(f, std::move(beta), k);
  c.provenance = {{"theorem", "k5-weak"},
                  {"n", std::to_string(n)},
                  {"k", std::to_string(k)},
                  {"q", std::to_string(static_cast<std::uint64_t>(*order))},
                  {"extension_degree", std::to_string(degree)},
                  {"sidon", sidon_source},
                  {"beta", "alpha*x - alpha^2"},
                  {"alpha", IndexList(alpha_base, *base)}};
  if (k > 5) c.warnings.push_back("k > 5: the MDS(3) guarantee covers only k <= 5");
  if (degree != k * k) c.warnings.push_back("extension degree overridden; no correctness claim");
  return c;
}

Construction construct_general(std::size_t n, std::size_t k, std::size_t ell, std::optional<std::size_t> per_level_degree,
                               std::uint64_t coefficient_cap) {
  CheckN(n);
  if (k == 0 || k > n || ell == 0) throw Error(ErrorCode::kInvalidArgument, "need n >= k >= 1 and l >= 1");
  const std::size_t floor = ell * k * (k - 1) + 1;
  const std::size_t d = per_level_degree.value_or(ell * k * k);
  if (d < floor) {
    throw Error(ErrorCode::kInvalidArgument,
                "per-level degree below the floor l*k*(k-1)+1 = " + std::to_string(floor));
  }
  const PrimePower q0 = SmallestPrimePower(n + k - 1);
  const std::size_t levels_count = ell * k;
  u128 total = q0.e;
  for (std::size_t i = 0; i < levels_count && total <= coefficient_cap; ++i) total *= d;
  if (total > coefficient_cap) {
    throw Error(ErrorCode::kBudgetExceeded, "tower of " + std::to_string(levels_count) + " levels of degree " +
                                                std::to_string(d) + " exceeds the cap of " +
                                                std::to_string(coefficient_cap) + " coefficients");
  }
  std::vector<ExtensionRequest> levels = BaseLevels(q0);
  const std::size_t first = levels.size();
  for (std::size_t i = 0; i < levels_count; ++i) levels.push_back({d, std::nullopt});
  FieldPtr f = field_make(q0.p, levels);
  std::vector<FieldElement> b = Enumerated(f, n), gens;
  for (const FieldElement& bi : b) {
    FieldElement acc = f->zero();
    FieldElement power = f->one();
    for (std::size_t j = 0; j < levels_count; ++j) {
      acc += power * f->generator(first + j + 1);
      power *= bi;
    }
    gens.push_back(std::move(acc));
  }
  std::uint64_t qv = 1;
  for (std::size_t i = 0; i < q0.e; ++i) qv *= q0.p;
  Construction c;
  c.name = "general-ell";
  c.code = CodeSpec::reed_solomon(f, std::move(gens), k);
  c.provenance = {{"theorem", "general-ell"},
                  {"n", std::to_string(n)},
                  {"k", std::to_string(k)},
                  {"ell", std::to_string(ell)},
                  {"q0", std::to_string(qv)},
                  {"D", std::to_string(d)},
                  {"levels", std::to_string(levels_count)},
                  {"generator", "sum_j beta_i^(j-1) alpha_j"},
                  {"beta", IndexList(b, *f)}};
  if (d != ell * k * k) c.warnings.push_back("per-level degree below l*k^2 (allowed down to l*k*(k-1)+1)");
  return c;
}

const std::vector<std::string>& ConstructionNames() {
  static const std::vector<std::string> kNames = {"k3-n4", "k3-n3", "k4-general", "k5-weak", "general-ell"};
  return kNames;
}

Construction construct(const ConstructionParams& p) {
  if (p.name == "k3-n4") return construct_k3_n4(p.n);
  if (p.name == "k3-n3") return construct_k3_n3(p.n);
  if (p.name == "k4-general" || p.name == "k4") return construct_k4(p.n, p.k.value_or(4));
  if (p.name == "k5-weak" || p.name == "k5") return construct_k5_weak(p.n, p.k.value_or(5), p.degree, p.q, p.bch);
  if (p.name == "general-ell") {
    if (!p.k || !p.ell) throw Error(ErrorCode::kInvalidArgument, "general-ell needs k and l");
    return construct_general(p.n, *p.k, *p.ell, p.degree, p.coefficient_cap);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown construction '" + p.name + "'");
}

}  // namespace hmds
