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

#ifndef HMDS_MULTIPOLY_HPP_
#define HMDS_MULTIPOLY_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hmds/fields.hpp"

namespace hmds {

// Exponent vectors are packed into one 64-bit word: variable i occupies the
// byte (7 - i), so at most kMaxVars variables with exponents <= kMaxExponent.
inline constexpr std::size_t kMaxVars = 8;
inline constexpr unsigned kMaxExponent = 127;

using PackedMonomial = std::uint64_t;

PackedMonomial PackMonomial(const std::vector<unsigned>& exps);
std::vector<unsigned> UnpackMonomial(PackedMonomial m, std::size_t nvars);
unsigned MonomialExponent(PackedMonomial m, std::size_t var);
unsigned MonomialDegree(PackedMonomial m);
bool MonomialDivides(PackedMonomial a, PackedMonomial b);
PackedMonomial MonomialLcm(PackedMonomial a, PackedMonomial b);
// Product; throws DegreeTooHigh when an exponent would exceed kMaxExponent.
PackedMonomial MonomialMul(PackedMonomial a, PackedMonomial b);
PackedMonomial MonomialDiv(PackedMonomial a, PackedMonomial b);
bool MonomialsCoprime(PackedMonomial a, PackedMonomial b);

struct MonomialOrder {
  enum class Kind { kLex, kDegRevLex };
  Kind kind = Kind::kDegRevLex;
  // perm[i] is the variable of priority i (most significant first); empty means
  // the natural order x1 > x2 > ... > xv.
  std::vector<std::size_t> perm;

  static MonomialOrder Lex() { return {Kind::kLex, {}}; }
  static MonomialOrder DegRevLex() { return {Kind::kDegRevLex, {}}; }
  // Three-way comparison: positive when a > b.
  int compare(PackedMonomial a, PackedMonomial b) const;
  std::string name() const;
  bool operator==(const MonomialOrder& o) const { return kind == o.kind && perm == o.perm; }
};

struct Term {
  PackedMonomial mono;
  Coeff coeff;
};

// Sparse polynomial over F_p with terms sorted strictly descending under its
// monomial order and no zero coefficients.
class SparsePoly {
 public:
  SparsePoly() = default;
  SparsePoly(Coeff p, std::size_t nvars, MonomialOrder order = MonomialOrder::DegRevLex());

  static SparsePoly constant(Coeff p, std::size_t nvars, std::int64_t c,
                             MonomialOrder order = MonomialOrder::DegRevLex());
  // The variable x_{i+1} (0-based index i).
  static SparsePoly variable(Coeff p, std::size_t nvars, std::size_t i,
                             MonomialOrder order = MonomialOrder::DegRevLex());
  static SparsePoly from_terms(Coeff p, std::size_t nvars, std::vector<Term> terms,
                               MonomialOrder order = MonomialOrder::DegRevLex());
  // Parses `c*x1^e1*...` terms joined by `+` or `-`.
  static SparsePoly parse(const std::string& text, Coeff p, std::size_t nvars,
                          MonomialOrder order = MonomialOrder::DegRevLex());

  Coeff characteristic() const { return p_; }
  std::size_t nvars() const { return nvars_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Term& leading() const { return terms_.front(); }
  unsigned total_degree() const;
  unsigned degree_in(std::size_t var) const;

  SparsePoly with_order(const MonomialOrder& order) const;
  SparsePoly operator+(const SparsePoly& b) const;
  SparsePoly operator-(const SparsePoly& b) const;
  SparsePoly operator*(const SparsePoly& b) const;
  SparsePoly operator-() const;
  SparsePoly scaled(Coeff c) const;
  SparsePoly times_monomial(PackedMonomial m, Coeff c) const;
  SparsePoly pow(unsigned e) const;
  SparsePoly monic() const;
  bool operator==(const SparsePoly& b) const;
  bool operator!=(const SparsePoly& b) const { return !(*this == b); }

  // Coefficient of x_var^power, as a polynomial in the remaining variables
  // (that variable removed, later ones shifted down).
  SparsePoly coefficient_of(std::size_t var, unsigned power) const;
  // Substitutes polynomials for every variable (all with a common arity).
  SparsePoly compose(const std::vector<SparsePoly>& values) const;

  std::string to_string() const;

 private:
  void check_compatible(const SparsePoly& b) const;
  void normalize();

  Coeff p_ = 2;
  std::size_t nvars_ = 0;
  MonomialOrder order_;
  std::vector<Term> terms_;
};

SparsePoly poly_add(const SparsePoly& a, const SparsePoly& b);
SparsePoly poly_mul(const SparsePoly& a, const SparsePoly& b);
// Evaluates at a point in any field of characteristic p.
FieldElement poly_eval(const SparsePoly& f, const std::vector<FieldElement>& point);

}  // namespace hmds

#endif  // HMDS_MULTIPOLY_HPP_
