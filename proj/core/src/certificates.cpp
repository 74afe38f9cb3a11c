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

#include "hmds/certificates.hpp"

#include <cstdio>
#include <utility>

#include "hmds/error.hpp"
#include "hmds/text.hpp"

namespace hmds {
namespace detail {
const std::string& EmbeddedClaimQData();
}  // namespace detail

namespace {

constexpr std::size_t kSlots = 6;
constexpr std::size_t kGammaVar = 6;

const std::vector<std::pair<std::size_t, std::size_t>>& ClaimPairs() {
  static const std::vector<std::pair<std::size_t, std::size_t>> kS = {
      {3, 6}, {2, 4}, {2, 6}, {3, 5}, {4, 5}, {4, 6}, {2, 5}, {2, 3}};
  return kS;
}

SparsePoly Var(Coeff p, std::size_t nvars, std::size_t i, const MonomialOrder& order) {
  return SparsePoly::variable(p, nvars, i, order);
}

MembershipResult Membership(const std::vector<SparsePoly>& gens, const SparsePoly& target,
                            const MonomialOrder& order, std::uint64_t budget) {
  GroebnerBasis gb = buchberger(gens, order, budget);
  MembershipResult r;
  r.remainder = gb_reduce(target.with_order(order), gb);
  r.member = r.remainder.is_zero();
  r.pairs_processed = gb.pairs_processed;
  r.basis_size = gb.polys.size();
  r.order = order;
  return r;
}

}  // namespace

SparsePoly det3_symbolic(const SparsePoly& beta_expr) {
  if (beta_expr.nvars() != 2) throw Error(ErrorCode::kArityMismatch, "beta must be a polynomial in (x, gamma)");
  if (beta_expr.degree_in(1) > 1) throw Error(ErrorCode::kDegreeTooHigh, "beta has gamma-degree above one");
  const Coeff p = beta_expr.characteristic();
  const MonomialOrder order = MonomialOrder::DegRevLex();
  const std::size_t nv = kSlots + 1;
  std::vector<SparsePoly> beta;
  for (std::size_t i = 0; i < kSlots; ++i) {
    beta.push_back(beta_expr.compose({Var(p, nv, i, order), Var(p, nv, kGammaVar, order)}));
  }
  SparsePoly one = SparsePoly::constant(p, nv, 1, order);
  std::array<std::array<SparsePoly, 3>, 3> m;
  for (std::size_t r = 0; r < 3; ++r) {
    m[r] = {one, beta[2 * r] + beta[2 * r + 1], beta[2 * r] * beta[2 * r + 1]};
  }
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

GammaExpansion gamma_expand_det3(const SparsePoly& beta_expr) {
  SparsePoly d = det3_symbolic(beta_expr);
  if (d.degree_in(kGammaVar) > 3) throw Error(ErrorCode::kDegreeTooHigh, "gamma-degree of the determinant above 3");
  GammaExpansion out;
  for (unsigned i = 0; i < 4; ++i) out.p[i] = d.coefficient_of(kGammaVar, i);
  return out;
}

SparsePoly beta_x_plus_gamma_x2(Coeff p) { return SparsePoly::parse("x1 + x2*x1^2", p, 2); }
SparsePoly beta_x_plus_gamma_x3(Coeff p) { return SparsePoly::parse("x1 + x2*x1^3", p, 2); }

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

const std::string& embedded_claim_q_text() { return detail::EmbeddedClaimQData(); }

ClaimQData parse_claim_q_data(const std::string& file_text) {
  const std::size_t pos = file_text.find("checksum ");
  if (pos == std::string::npos) throw Error(ErrorCode::kChecksumMismatch, "certificate data lacks a checksum line");
  const std::string body = file_text.substr(0, pos);
  auto kv = text::ParseKeyValues(text::Trim(file_text.substr(pos)));
  if (!kv.count("fnv1a64")) throw Error(ErrorCode::kChecksumMismatch, "unknown checksum kind");
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(fnv1a64(body)));
  if (kv["fnv1a64"] != buf) {
    throw Error(ErrorCode::kChecksumMismatch,
                "certificate data checksum mismatch (expected " + kv["fnv1a64"] + ", computed " + buf + ")");
  }
  ClaimQData data;
  for (const std::string& raw : text::Split(body, '\n')) {
    std::string line = text::Trim(raw);
    if (line.empty() || line[0] == '#') continue;
    if (text::StartsWith(line, "vars")) {
      if (text::Trim(line.substr(4)) != "6") throw Error(ErrorCode::kParseError, "certificate data must use 6 variables");
      continue;
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::kParseError, "expected name = polynomial");
    const std::string name = text::Trim(line.substr(0, eq));
    const std::string value = text::Trim(line.substr(eq + 1));
    if (name == "g") {
      data.g = value;
    } else if (name == "two_q0") {
      data.two_q0 = value;
    } else {
      throw Error(ErrorCode::kParseError, "unknown certificate polynomial '" + name + "'");
    }
  }
  if (data.g.empty() || data.two_q0.empty()) throw Error(ErrorCode::kParseError, "certificate data incomplete");
  return data;
}

SparsePoly claim_h(Coeff p) {
  SparsePoly h = SparsePoly::constant(p, kSlots, 1);
  for (auto [i, j] : ClaimPairs()) h = h * (Var(p, kSlots, i - 1, h.order()) - Var(p, kSlots, j - 1, h.order()));
  return h;
}

bool verify_claim_q_identity(Coeff p) { return verify_claim_q_identity(p, parse_claim_q_data(embedded_claim_q_text())); }

bool verify_claim_q_identity(Coeff p, const ClaimQData& data) {
  if (p % 2 == 0) throw Error(ErrorCode::kEvenCharacteristic, "the certificate divides by 2");
  PrimeField fp(p);
  const Coeff half = fp.inv(2);
  GammaExpansion e = gamma_expand_det3(beta_x_plus_gamma_x2(p));
  SparsePoly g = SparsePoly::parse(data.g, p, kSlots);
  SparsePoly q0 = SparsePoly::parse(data.two_q0, p, kSlots).scaled(half);
  SparsePoly q2 = Var(p, kSlots, 1, g.order()) * g;
  SparsePoly q3 = g.scaled(fp.neg(half));
  return claim_h(p) == q0 * e.p[0] + q2 * e.p[2] + q3 * e.p[3];
}

bool verify_p1_checksum(Coeff p) {
  GammaExpansion e = gamma_expand_det3(beta_x_plus_gamma_x2(p));
  SparsePoly sum(p, kSlots);
  for (std::size_t i = 0; i < kSlots; ++i) sum = sum + Var(p, kSlots, i, sum.order());
  return e.p[1] == e.p[0] * sum;
}

std::vector<SparsePoly> claim_groebner_ideal(const MonomialOrder& order) {
  GammaExpansion e = gamma_expand_det3(beta_x_plus_gamma_x2(7));
  return {(e.p[0] + e.p[3].scaled(2)).with_order(order), e.p[1].with_order(order), e.p[2].with_order(order)};
}

SparsePoly claim_groebner_target(const MonomialOrder& order) {
  const Coeff p = 7;
  SparsePoly sum(p, kSlots, order);
  for (std::size_t i = 0; i < kSlots; ++i) sum = sum + Var(p, kSlots, i, order);
  SparsePoly t = sum;
  for (std::size_t i = 0; i < kSlots; ++i) {
    for (std::size_t j = i + 1; j < kSlots; ++j) t = t * (Var(p, kSlots, j, order) - Var(p, kSlots, i, order));
  }
  return t;
}

MembershipResult check_claim_groebner(const MonomialOrder& order, std::uint64_t budget,
                                      const std::optional<SparsePoly>& target) {
  return Membership(claim_groebner_ideal(order), target ? *target : claim_groebner_target(order), order, budget);
}

std::vector<SparsePoly> char2_ideal(const MonomialOrder& order) {
  GammaExpansion e = gamma_expand_det3(beta_x_plus_gamma_x3(2));
  std::vector<SparsePoly> out;
  for (const SparsePoly& p : e.p) {
    if (!p.is_zero()) out.push_back(p.with_order(order));
  }
  return out;
}

SparsePoly char2_target(const MonomialOrder& order, bool drop_first_factor) {
  const Coeff p = 2;
  SparsePoly t = SparsePoly::constant(p, kSlots, 1, order);
  bool skipped = !drop_first_factor;
  for (std::size_t i = 0; i < kSlots; ++i) {
    for (std::size_t j = i + 1; j < kSlots; ++j) {
      if (!skipped) {
        skipped = true;
        continue;
      }
      t = t * (Var(p, kSlots, i, order) + Var(p, kSlots, j, order));
    }
  }
  for (std::size_t i = 0; i < kSlots; ++i) {
    for (std::size_t j = i + 1; j < kSlots; ++j) {
      for (std::size_t k = j + 1; k < kSlots; ++k) {
        t = t * (Var(p, kSlots, i, order) + Var(p, kSlots, j, order) + Var(p, kSlots, k, order));
      }
    }
  }
  return t;
}

MembershipResult verify_char2_membership(const MonomialOrder& order, std::uint64_t budget,
                                         const std::optional<SparsePoly>& target) {
  return Membership(char2_ideal(order), target ? *target : char2_target(order), order, budget);
}

}  // namespace hmds
