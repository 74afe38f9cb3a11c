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

#ifndef HMDS_CERTIFICATES_HPP_
#define HMDS_CERTIFICATES_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hmds/groebner.hpp"
#include "hmds/multipoly.hpp"

namespace hmds {

// The four gamma-coefficients p_0..p_3 (polynomials in x1..x6) of
//   det [[1, b1 + b2, b1 b2], [1, b3 + b4, b3 b4], [1, b5 + b6, b5 b6]]
// where b_i = beta(x_i, gamma).
struct GammaExpansion {
  std::array<SparsePoly, 4> p;
};

// beta_expr is a polynomial in two variables (x, gamma); its gamma-degree must
// be at most one.
GammaExpansion gamma_expand_det3(const SparsePoly& beta_expr);
// The full determinant as a polynomial in x1..x6 and gamma (variable 7).
SparsePoly det3_symbolic(const SparsePoly& beta_expr);

// beta = x + gamma * x^2 and beta = x + gamma * x^3 over F_p.
SparsePoly beta_x_plus_gamma_x2(Coeff p);
SparsePoly beta_x_plus_gamma_x3(Coeff p);

// Transcribed certificate polynomials, held as text in the term format.
struct ClaimQData {
  std::string g;
  std::string two_q0;
};

// Parses a certificate data file and verifies its FNV-1a checksum line;
// throws Error(kChecksumMismatch) on corruption.
ClaimQData parse_claim_q_data(const std::string& file_text);
const std::string& embedded_claim_q_text();
std::uint64_t fnv1a64(const std::string& bytes);

// h = prod over S of (x_i - x_j).
SparsePoly claim_h(Coeff p);
// Checks h = Q0 p0 + Q2 p2 + Q3 p3 at an odd prime.
bool verify_claim_q_identity(Coeff p);
bool verify_claim_q_identity(Coeff p, const ClaimQData& data);
// Checks p1 = p0 * (x1 + ... + x6) for beta = x + gamma x^2.
bool verify_p1_checksum(Coeff p);

struct MembershipResult {
  bool member = false;
  SparsePoly remainder;
  std::uint64_t pairs_processed = 0;
  std::size_t basis_size = 0;
  MonomialOrder order;
};

// Generators (p0 + 2 p3, p1, p2) over F_7 for beta = x + gamma x^2 after the
// substitution gamma^3 = 2.
std::vector<SparsePoly> claim_groebner_ideal(const MonomialOrder& order);
// (x1 + ... + x6) * prod_{i<j} (x_j - x_i) over F_7.
SparsePoly claim_groebner_target(const MonomialOrder& order);
// Computes a Groebner basis of the ideal and reduces `target` (default: the
// claim's target polynomial).
MembershipResult check_claim_groebner(const MonomialOrder& order, std::uint64_t budget,
                                      const std::optional<SparsePoly>& target = std::nullopt);

// Characteristic 2, beta = x + gamma x^3: membership of
// prod_{i<j}(x_i + x_j) prod_{i<j<k}(x_i + x_j + x_k) in (p0, p1, p2, p3).
std::vector<SparsePoly> char2_ideal(const MonomialOrder& order);
SparsePoly char2_target(const MonomialOrder& order, bool drop_first_factor = false);
MembershipResult verify_char2_membership(const MonomialOrder& order, std::uint64_t budget,
                                         const std::optional<SparsePoly>& target = std::nullopt);

}  // namespace hmds

#endif  // HMDS_CERTIFICATES_HPP_
