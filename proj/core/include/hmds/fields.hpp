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

#ifndef HMDS_FIELDS_HPP_
#define HMDS_FIELDS_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hmds {

using Coeff = std::uint64_t;
using u128 = unsigned __int128;

// Deterministic Miller-Rabin, exact for every 64-bit input.
bool IsPrime(std::uint64_t n);

// Arithmetic modulo a prime p < 2^64.
class PrimeField {
 public:
  explicit PrimeField(Coeff p);

  Coeff p() const { return p_; }
  Coeff add(Coeff a, Coeff b) const {
    Coeff s = a + b;
    return (s >= p_ || s < a) ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const { return a >= b ? a - b : a + (p_ - b); }
  Coeff neg(Coeff a) const { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const {
    if (small_) return (a * b) % p_;
    return static_cast<Coeff>((static_cast<u128>(a) * b) % p_);
  }
  Coeff pow(Coeff a, std::uint64_t e) const;
  // Inverse by the extended Euclidean algorithm; throws on zero.
  Coeff inv(Coeff a) const;
  // Reduces a signed integer into [0, p).
  Coeff from_int(std::int64_t v) const;
  // True when products of two residues fit in 52 bits, so that up to 4096 of
  // them can be accumulated in a 64-bit word before reduction.
  bool lazy_accumulation() const { return lazy_; }

 private:
  Coeff p_;
  bool small_;
  bool lazy_;
};

enum class IrreducibilityCertificate {
  kLinear,         // degree one
  kGcdTest,        // gcd(f, x^(Q^i) - x) = 1 for all i <= d/2
  kBinomial,       // x^d - a with a of maximal r-power order for all r | d
  kArtinSchreier,  // x^p - x - a with absolute trace of a nonzero
};

std::string CertificateName(IrreducibilityCertificate c);

// One extension step. The minimal polynomial is stored flattened: coefficient
// i (an element of the field below, of dimension base_dim) occupies positions
// [i * base_dim, (i + 1) * base_dim). It is monic of the given degree.
struct TowerLevel {
  std::size_t degree = 1;
  std::vector<Coeff> minpoly;
  IrreducibilityCertificate certificate = IrreducibilityCertificate::kLinear;
};

struct ExtensionRequest {
  std::size_t degree = 1;
  std::optional<std::vector<Coeff>> minpoly;
};

class FieldSpec;
class FieldElement;
using FieldPtr = std::shared_ptr<const FieldSpec>;

// Builds and validates a prime field or a tower of extensions over it. A level
// without a supplied polynomial gets a deterministic irreducible: the
// lexicographically smallest one when the field below has dimension at most
// kGcdSearchMaxBaseDim over F_p, and otherwise the first certified binomial or
// Artin-Schreier polynomial in a fixed scan.
FieldPtr field_make(Coeff p, const std::vector<ExtensionRequest>& extensions = {});

// Returns the lexicographically smallest monic irreducible polynomial of
// degree d over the field `base` (constant term scanned fastest). The result
// is flattened as in TowerLevel::minpoly.
std::vector<Coeff> find_irreducible(const FieldSpec& base, std::size_t d);

// Decides irreducibility of a monic polynomial over `base` with the gcd test
// against x^(Q^i) - x for i <= d/2.
bool is_irreducible_gcd_test(const FieldSpec& base, const std::vector<Coeff>& poly);

class FieldSpec : public std::enable_shared_from_this<FieldSpec> {
 public:
  static constexpr std::size_t kGcdSearchMaxBaseDim = 16;
  static constexpr std::size_t kConjugateNormMaxDim = 64;

  Coeff characteristic() const { return prime_.p(); }
  const PrimeField& prime() const { return prime_; }
  // Total dimension D over F_p.
  std::size_t degree() const { return dims_.back(); }
  std::size_t level_count() const { return levels_.size(); }
  // Dimension of the subfield spanned by the first t levels; dim(0) = 1.
  std::size_t dim(std::size_t t) const { return dims_[t]; }
  // Level t in 1..level_count().
  const TowerLevel& level(std::size_t t) const { return levels_[t - 1]; }
  // Field order p^D when it fits in 128 bits.
  std::optional<u128> order() const;
  // A new FieldSpec made of the first t levels.
  FieldPtr prefix(std::size_t t) const;
  // Structural equality: same characteristic and identical minimal polynomials.
  bool equals(const FieldSpec& other) const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_int(std::int64_t v) const;
  FieldElement from_coeffs(std::vector<Coeff> coeffs) const;
  // The root adjoined at level t (1-based).
  FieldElement generator(std::size_t t) const;
  // Element whose base-p digits (position 0 least significant) are the
  // coefficients: the canonical enumeration of the field.
  FieldElement from_index(u128 index) const;
  // Inverse of from_index; throws when the index does not fit in 128 bits.
  u128 index_of(const FieldElement& a) const;
  // Embeds an element of a field whose tower is a prefix of this one.
  FieldElement lift(const FieldElement& a) const;

  // Serialization as a `field p=` line followed by one `ext d= poly=` line per
  // level.
  std::string describe() const;
  std::string element_to_string(std::span<const Coeff> a) const;

  // Span kernels on level-t subfield elements (t = level_count() for the whole
  // field). Output may alias either input.
  void add(std::size_t t, const Coeff* a, const Coeff* b, Coeff* out) const;
  void sub(std::size_t t, const Coeff* a, const Coeff* b, Coeff* out) const;
  void neg(std::size_t t, const Coeff* a, Coeff* out) const;
  void mul(std::size_t t, const Coeff* a, const Coeff* b, Coeff* out) const;
  void scale(std::size_t t, Coeff c, const Coeff* a, Coeff* out) const;
  void inv(std::size_t t, const Coeff* a, Coeff* out) const;
  void pow(std::size_t t, const Coeff* a, u128 e, Coeff* out) const;
  bool is_zero(std::size_t t, const Coeff* a) const;
  // True when only the constant (prime-field) coefficient can be nonzero.
  bool is_scalar(std::size_t t, const Coeff* a) const;

  // Absolute trace Tr_{L_t/F_p}.
  Coeff absolute_trace(std::size_t t, const Coeff* a) const;
  // Absolute norm N_{L_t/F_p}, available for subfields of dimension at most
  // kConjugateNormMaxDim and for single-block elements of larger levels whose
  // blocks again admit a norm.
  std::optional<Coeff> absolute_norm(std::size_t t, const Coeff* a) const;

  // Internal constructor; use field_make.
  FieldSpec(Coeff p, std::vector<TowerLevel> levels);

 private:
  struct LevelCache {
    std::vector<std::size_t> nonzero_lower;  // nonzero non-leading coefficients
    std::vector<Coeff> negated;              // -minpoly, non-leading part
    std::vector<Coeff> power_sums;           // s_0..s_{d-1}, flattened
    std::vector<Coeff> norm_of_root;         // (-1)^d f(0)
  };

  void mul_level1(const Coeff* a, const Coeff* b, Coeff* out) const;
  void mul_upper(std::size_t t, const Coeff* a, const Coeff* b, Coeff* out) const;
  void inv_upper(std::size_t t, const Coeff* a, Coeff* out) const;
  void build_cache();

  PrimeField prime_;
  std::vector<TowerLevel> levels_;
  std::vector<std::size_t> dims_;
  std::vector<LevelCache> cache_;
};

// A value-semantic element of a FieldSpec in reduced normal form.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(FieldPtr field, std::vector<Coeff> coeffs);

  const FieldPtr& field() const { return field_; }
  const std::vector<Coeff>& coeffs() const { return coeffs_; }
  std::span<const Coeff> span() const { return coeffs_; }
  bool valid() const { return field_ != nullptr; }
  bool is_zero() const;
  bool is_one() const;
  std::string to_string() const;

  FieldElement operator+(const FieldElement& b) const;
  FieldElement operator-(const FieldElement& b) const;
  FieldElement operator*(const FieldElement& b) const;
  FieldElement operator/(const FieldElement& b) const;
  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& b) { return *this = *this + b; }
  FieldElement& operator-=(const FieldElement& b) { return *this = *this - b; }
  FieldElement& operator*=(const FieldElement& b) { return *this = *this * b; }
  FieldElement inverse() const;
  FieldElement pow(u128 e) const;
  bool operator==(const FieldElement& b) const;
  bool operator!=(const FieldElement& b) const { return !(*this == b); }
  bool operator<(const FieldElement& b) const { return coeffs_ < b.coeffs_; }

 private:
  void check_same(const FieldElement& b) const;

  FieldPtr field_;
  std::vector<Coeff> coeffs_;
};

FieldElement ff_add(const FieldElement& a, const FieldElement& b);
FieldElement ff_sub(const FieldElement& a, const FieldElement& b);
FieldElement ff_mul(const FieldElement& a, const FieldElement& b);
FieldElement ff_neg(const FieldElement& a);
FieldElement ff_inv(const FieldElement& a);
// Inverse as a^(q-2); requires q < 2^127.
FieldElement ff_inv_fermat(const FieldElement& a);
// a^p.
FieldElement frobenius(const FieldElement& a);

// Parses the field block produced by FieldSpec::describe. Polynomials are
// re-verified.
FieldPtr parse_field_block(const std::vector<std::string>& lines);
// Parses a comma-separated coefficient list of length D.
FieldElement parse_element(const FieldPtr& field, const std::string& text);

}  // namespace hmds

#endif  // HMDS_FIELDS_HPP_
