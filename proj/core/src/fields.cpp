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

#include "hmds/fields.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <limits>
#include <string>
#include <utility>

#include "hmds/error.hpp"
#include "hmds/text.hpp"

namespace hmds {
namespace {

std::uint64_t MulMod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<u128>(a) * b) % m);
}

std::uint64_t PowMod64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = MulMod64(r, a, m);
    a = MulMod64(a, a, m);
    e >>= 1;
  }
  return r;
}

std::vector<std::uint64_t> PrimeFactors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t r = 2; r * r <= n; ++r) {
    if (n % r == 0) {
      out.push_back(r);
      while (n % r == 0) n /= r;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Scratch buffer that lives on the stack for small sizes.
class Scratch {
 public:
  explicit Scratch(std::size_t n) : n_(n) {
    if (n <= kInline) {
      ptr_ = inline_.data();
      std::fill_n(ptr_, n, Coeff{0});
    } else {
      heap_.assign(n, 0);
      ptr_ = heap_.data();
    }
  }
  Coeff* data() { return ptr_; }
  std::size_t size() const { return n_; }

 private:
  static constexpr std::size_t kInline = 512;
  std::size_t n_;
  Coeff* ptr_;
  std::array<Coeff, kInline> inline_;
  std::vector<Coeff> heap_;
};

// Univariate polynomials over the subfield L_t of a FieldSpec, stored as
// flattened blocks of size dim(t).
class PolyRing {
 public:
  PolyRing(const FieldSpec& field, std::size_t t)
      : f_(field), t_(t), b_(field.dim(t)) {}

  std::size_t block() const { return b_; }

  long deg(const std::vector<Coeff>& a) const {
    long blocks = static_cast<long>(a.size() / b_);
    for (long i = blocks - 1; i >= 0; --i) {
      if (!f_.is_zero(t_, a.data() + i * b_)) return i;
    }
    return -1;
  }

  void trim(std::vector<Coeff>& a) const { a.resize(static_cast<std::size_t>(deg(a) + 1) * b_); }

  // Remainder modulo a monic polynomial.
  void reduce(std::vector<Coeff>& a, const std::vector<Coeff>& f) const {
    long df = deg(f);
    long da = deg(a);
    std::vector<Coeff> tmp(b_);
    for (long k = da; k >= df; --k) {
      const Coeff* c = a.data() + k * b_;
      if (f_.is_zero(t_, c)) continue;
      std::vector<Coeff> lead(c, c + b_);
      for (long j = 0; j < df; ++j) {
        const Coeff* fj = f.data() + j * b_;
        if (f_.is_zero(t_, fj)) continue;
        f_.mul(t_, lead.data(), fj, tmp.data());
        Coeff* dst = a.data() + (k - df + j) * b_;
        f_.sub(t_, dst, tmp.data(), dst);
      }
      std::fill_n(a.data() + k * b_, b_, Coeff{0});
    }
    if (da >= df) a.resize(static_cast<std::size_t>(df) * b_);
    trim(a);
  }

  std::vector<Coeff> mul(const std::vector<Coeff>& a, const std::vector<Coeff>& b) const {
    long da = deg(a);
    long db = deg(b);
    if (da < 0 || db < 0) return {};
    std::vector<Coeff> out(static_cast<std::size_t>(da + db + 1) * b_, 0);
    std::vector<Coeff> tmp(b_);
    for (long i = 0; i <= da; ++i) {
      const Coeff* ai = a.data() + i * b_;
      if (f_.is_zero(t_, ai)) continue;
      for (long j = 0; j <= db; ++j) {
        const Coeff* bj = b.data() + j * b_;
        if (f_.is_zero(t_, bj)) continue;
        f_.mul(t_, ai, bj, tmp.data());
        Coeff* dst = out.data() + (i + j) * b_;
        f_.add(t_, dst, tmp.data(), dst);
      }
    }
    return out;
  }

  std::vector<Coeff> mulmod(const std::vector<Coeff>& a, const std::vector<Coeff>& b,
                            const std::vector<Coeff>& f) const {
    std::vector<Coeff> out = mul(a, b);
    reduce(out, f);
    return out;
  }

  std::vector<Coeff> powmod(std::vector<Coeff> a, std::uint64_t e, const std::vector<Coeff>& f) const {
    std::vector<Coeff> r(b_, 0);
    r[0] = 1;
    while (e) {
      if (e & 1) r = mulmod(r, a, f);
      e >>= 1;
      if (e) a = mulmod(a, a, f);
    }
    return r;
  }

  void make_monic(std::vector<Coeff>& a) const {
    long d = deg(a);
    if (d < 0) return;
    std::vector<Coeff> inv(b_);
    f_.inv(t_, a.data() + d * b_, inv.data());
    for (long i = 0; i <= d; ++i) f_.mul(t_, a.data() + i * b_, inv.data(), a.data() + i * b_);
    a.resize(static_cast<std::size_t>(d + 1) * b_);
  }

  std::vector<Coeff> gcd(std::vector<Coeff> a, std::vector<Coeff> b) const {
    trim(a);
    trim(b);
    while (deg(b) >= 0) {
      make_monic(b);
      reduce(a, b);
      std::swap(a, b);
    }
    make_monic(a);
    return a;
  }

 private:
  const FieldSpec& f_;
  std::size_t t_;
  std::size_t b_;
};

bool GcdTest(const FieldSpec& base, const std::vector<Coeff>& poly) {
  const std::size_t t = base.level_count();
  PolyRing ring(base, t);
  const std::size_t b = ring.block();
  long d = ring.deg(poly);
  if (d <= 1) return d == 1;
  std::vector<Coeff> x(2 * b, 0);
  x[b] = 1;
  std::vector<Coeff> h = x;
  const std::uint64_t p = base.characteristic();
  for (long i = 1; i <= d / 2; ++i) {
    for (std::size_t s = 0; s < base.degree(); ++s) h = ring.powmod(h, p, poly);
    std::vector<Coeff> diff = h;
    if (diff.size() < 2 * b) diff.resize(2 * b, 0);
    base.sub(t, diff.data() + b, x.data() + b, diff.data() + b);
    std::vector<Coeff> g = ring.gcd(poly, diff);
    if (ring.deg(g) > 0) return false;
  }
  return true;
}

// Returns whether x^d - a is irreducible over `base`, or nullopt when the
// criterion cannot be evaluated (some prime r | d does not divide p - 1, or no
// norm is available for a).
std::optional<bool> BinomialCertificate(const FieldSpec& base, std::size_t d, const Coeff* a) {
  const std::size_t t = base.level_count();
  const std::uint64_t p = base.characteristic();
  if (base.is_zero(t, a)) return false;
  for (std::uint64_t r : PrimeFactors(d)) {
    if ((p - 1) % r != 0) return std::nullopt;
  }
  std::optional<Coeff> norm = base.absolute_norm(t, a);
  if (!norm) return std::nullopt;
  for (std::uint64_t r : PrimeFactors(d)) {
    if (base.prime().pow(*norm, (p - 1) / r) == 1) return false;
  }
  if (d % 4 == 0 && PowMod64(p, base.degree(), 4) != 1) return false;
  return true;
}

bool ArtinSchreierCertificate(const FieldSpec& base, const Coeff* a) {
  return base.absolute_trace(base.level_count(), a) != 0;
}

enum class PolyShape { kOther, kBinomial, kArtinSchreier };

PolyShape Shape(const FieldSpec& base, const std::vector<Coeff>& poly, std::size_t d) {
  const std::size_t t = base.level_count();
  const std::size_t b = base.degree();
  const std::uint64_t p = base.characteristic();
  bool middle_zero = true;
  for (std::size_t i = 1; i < d; ++i) {
    if (!base.is_zero(t, poly.data() + i * b)) {
      middle_zero = false;
      break;
    }
  }
  if (middle_zero) return PolyShape::kBinomial;
  if (d == p && d >= 2) {
    const Coeff* c1 = poly.data() + b;
    bool ok = c1[0] == p - 1 && base.is_scalar(t, c1);
    for (std::size_t i = 2; ok && i < d; ++i) ok = base.is_zero(t, poly.data() + i * b);
    if (ok) return PolyShape::kArtinSchreier;
  }
  return PolyShape::kOther;
}

std::vector<Coeff> Monic(std::size_t d, std::size_t b, const std::vector<Coeff>& lower) {
  std::vector<Coeff> poly(lower);
  poly.resize((d + 1) * b, 0);
  poly[d * b] = 1;
  return poly;
}

IrreducibilityCertificate CertifySupplied(const FieldSpec& base, const std::vector<Coeff>& poly,
                                          std::size_t d) {
  if (d == 1) return IrreducibilityCertificate::kLinear;
  const std::size_t t = base.level_count();
  const std::size_t b = base.degree();
  const PrimeField& fp = base.prime();
  PolyShape shape = Shape(base, poly, d);
  if (shape == PolyShape::kBinomial) {
    std::vector<Coeff> a(b);
    base.neg(t, poly.data(), a.data());
    std::optional<bool> verdict = BinomialCertificate(base, d, a.data());
    if (verdict) {
      if (!*verdict) throw Error(ErrorCode::kReduciblePolynomial, "binomial is reducible");
      return IrreducibilityCertificate::kBinomial;
    }
  } else if (shape == PolyShape::kArtinSchreier) {
    std::vector<Coeff> a(b);
    base.neg(t, poly.data(), a.data());
    if (!ArtinSchreierCertificate(base, a.data())) {
      throw Error(ErrorCode::kReduciblePolynomial, "Artin-Schreier polynomial has trace zero");
    }
    return IrreducibilityCertificate::kArtinSchreier;
  }
  (void)fp;
  if (b > FieldSpec::kConjugateNormMaxDim) {
    throw Error(ErrorCode::kBudgetExceeded,
                "no certificate available for a general polynomial over a field of dimension " +
                    std::to_string(b));
  }
  if (!GcdTest(base, poly)) throw Error(ErrorCode::kReduciblePolynomial, "gcd test found a factor");
  return IrreducibilityCertificate::kGcdTest;
}

TowerLevel StructuredLevel(const FieldSpec& base, std::size_t d) {
  const std::size_t t = base.level_count();
  const std::size_t b = base.degree();
  const std::uint64_t p = base.characteristic();
  const PrimeField& fp = base.prime();
  std::vector<Coeff> a(b, 0);
  if (d == p) {
    for (std::size_t pos = 0; pos < b; ++pos) {
      std::fill(a.begin(), a.end(), 0);
      a[pos] = 1;
      if (ArtinSchreierCertificate(base, a.data())) {
        std::vector<Coeff> lower(d * b, 0);
        base.neg(t, a.data(), lower.data());
        lower[b] = fp.neg(1);
        return {d, Monic(d, b, lower), IrreducibilityCertificate::kArtinSchreier};
      }
    }
  } else {
    const std::size_t start = t == 0 ? 0 : base.dim(t - 1);
    auto accept = [&](const std::vector<Coeff>& cand) -> std::optional<TowerLevel> {
      std::optional<bool> verdict = BinomialCertificate(base, d, cand.data());
      if (verdict && *verdict) {
        std::vector<Coeff> lower(d * b, 0);
        base.neg(t, cand.data(), lower.data());
        return TowerLevel{d, Monic(d, b, lower), IrreducibilityCertificate::kBinomial};
      }
      return std::nullopt;
    };
    bool feasible = true;
    for (std::uint64_t r : PrimeFactors(d)) feasible = feasible && (p - 1) % r == 0;
    if (d % 4 == 0 && PowMod64(p, b, 4) != 1) feasible = false;
    if (feasible && b <= FieldSpec::kConjugateNormMaxDim) {
      // Elements in index order, starting with the newest generator.
      std::vector<Coeff> cand(b, 0);
      cand[start] = 1;
      for (std::size_t tries = 0; tries < 100000; ++tries) {
        if (auto lv = accept(cand)) return *lv;
        std::size_t i = 0;
        while (i < b) {
          if (++cand[i] < p) break;
          cand[i++] = 0;
        }
        if (i == b) break;
      }
    } else if (feasible) {
      for (std::size_t pos = start; pos < b; ++pos) {
        for (Coeff c = 1; c < p; ++c) {
          std::fill(a.begin(), a.end(), 0);
          a[pos] = c;
          if (auto lv = accept(a)) return *lv;
        }
      }
    }
  }
  if (b <= FieldSpec::kConjugateNormMaxDim) {
    return {d, find_irreducible(base, d), IrreducibilityCertificate::kGcdTest};
  }
  throw Error(ErrorCode::kBudgetExceeded,
              "no certified irreducible of degree " + std::to_string(d) +
                  " found over a field of dimension " + std::to_string(b));
}

}  // namespace

bool IsPrime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull}) {
    a %= n;
    if (a == 0) continue;
    std::uint64_t x = PowMod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = MulMod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(Coeff p) : p_(p) {
  if (!IsPrime(p)) throw Error(ErrorCode::kNotPrime, std::to_string(p) + " is not prime");
  small_ = p < (Coeff{1} << 32);
  lazy_ = p < (Coeff{1} << 26);
}

Coeff PrimeField::pow(Coeff a, std::uint64_t e) const { return PowMod64(a, e, p_); }

Coeff PrimeField::inv(Coeff a) const {
  if (a % p_ == 0) throw Error(ErrorCode::kDivisionByZero, "inverse of zero");
  __int128 t = 0, new_t = 1;
  __int128 r = p_, new_r = a % p_;
  while (new_r != 0) {
    __int128 q = r / new_r;
    __int128 tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<Coeff>(t);
}

Coeff PrimeField::from_int(std::int64_t v) const {
  __int128 r = static_cast<__int128>(v) % static_cast<__int128>(p_);
  if (r < 0) r += p_;
  return static_cast<Coeff>(r);
}

std::string CertificateName(IrreducibilityCertificate c) {
  switch (c) {
    case IrreducibilityCertificate::kLinear: return "linear";
    case IrreducibilityCertificate::kGcdTest: return "gcd-test";
    case IrreducibilityCertificate::kBinomial: return "binomial";
    case IrreducibilityCertificate::kArtinSchreier: return "artin-schreier";
  }
  return "unknown";
}

FieldSpec::FieldSpec(Coeff p, std::vector<TowerLevel> levels) : prime_(p), levels_(std::move(levels)) {
  dims_.push_back(1);
  for (const TowerLevel& lv : levels_) dims_.push_back(dims_.back() * lv.degree);
  build_cache();
}

void FieldSpec::build_cache() {
  cache_.clear();
  cache_.reserve(levels_.size());
  for (std::size_t t = 1; t <= levels_.size(); ++t) {
    const TowerLevel& lv = levels_[t - 1];
    const std::size_t b = dims_[t - 1];
    const std::size_t d = lv.degree;
    LevelCache c;
    c.negated.assign(d * b, 0);
    for (std::size_t j = 0; j < d; ++j) {
      neg(t - 1, lv.minpoly.data() + j * b, c.negated.data() + j * b);
      if (!is_zero(t - 1, lv.minpoly.data() + j * b)) c.nonzero_lower.push_back(j);
    }
    c.norm_of_root.assign(lv.minpoly.begin(), lv.minpoly.begin() + static_cast<long>(b));
    if (d % 2 == 1) neg(t - 1, c.norm_of_root.data(), c.norm_of_root.data());
    cache_.push_back(std::move(c));
    // Newton identities: s_k + c_{d-1} s_{k-1} + ... + c_{d-k+1} s_1 + k c_{d-k} = 0.
    std::vector<Coeff> sums(d * b, 0);
    sums[0] = prime_.from_int(static_cast<std::int64_t>(d % prime_.p()));
    std::vector<Coeff> tmp(b);
    for (std::size_t k = 1; k < d; ++k) {
      Coeff* sk = sums.data() + k * b;
      scale(t - 1, prime_.from_int(static_cast<std::int64_t>(k % prime_.p())),
            lv.minpoly.data() + (d - k) * b, sk);
      for (std::size_t i = 1; i < k; ++i) {
        const Coeff* ci = lv.minpoly.data() + (d - i) * b;
        if (is_zero(t - 1, ci)) continue;
        mul(t - 1, ci, sums.data() + (k - i) * b, tmp.data());
        add(t - 1, sk, tmp.data(), sk);
      }
      neg(t - 1, sk, sk);
    }
    cache_.back().power_sums = std::move(sums);
  }
}

std::optional<u128> FieldSpec::order() const {
  u128 q = 1;
  const u128 limit = std::numeric_limits<u128>::max() / prime_.p();
  for (std::size_t i = 0; i < degree(); ++i) {
    if (q > limit) return std::nullopt;
    q *= prime_.p();
  }
  return q;
}

FieldPtr FieldSpec::prefix(std::size_t t) const {
  std::vector<TowerLevel> lv(levels_.begin(), levels_.begin() + static_cast<long>(t));
  return std::make_shared<const FieldSpec>(prime_.p(), std::move(lv));
}

bool FieldSpec::equals(const FieldSpec& other) const {
  if (this == &other) return true;
  if (prime_.p() != other.prime_.p() || levels_.size() != other.levels_.size()) return false;
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    if (levels_[i].degree != other.levels_[i].degree || levels_[i].minpoly != other.levels_[i].minpoly) {
      return false;
    }
  }
  return true;
}

FieldElement FieldSpec::zero() const {
  return FieldElement(shared_from_this(), std::vector<Coeff>(degree(), 0));
}

FieldElement FieldSpec::one() const {
  std::vector<Coeff> c(degree(), 0);
  c[0] = 1 % prime_.p();
  return FieldElement(shared_from_this(), std::move(c));
}

FieldElement FieldSpec::from_int(std::int64_t v) const {
  std::vector<Coeff> c(degree(), 0);
  c[0] = prime_.from_int(v);
  return FieldElement(shared_from_this(), std::move(c));
}

FieldElement FieldSpec::from_coeffs(std::vector<Coeff> coeffs) const {
  if (coeffs.size() != degree()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "expected " + std::to_string(degree()) + " coefficients, got " + std::to_string(coeffs.size()));
  }
  for (Coeff& c : coeffs) {
    if (c >= prime_.p()) throw Error(ErrorCode::kParseError, "coefficient out of range");
  }
  return FieldElement(shared_from_this(), std::move(coeffs));
}

FieldElement FieldSpec::generator(std::size_t t) const {
  if (t == 0 || t > levels_.size()) throw Error(ErrorCode::kInvalidArgument, "no such tower level");
  std::vector<Coeff> c(degree(), 0);
  if (levels_[t - 1].degree == 1) {
    neg(t - 1, levels_[t - 1].minpoly.data(), c.data());
  } else {
    c[dims_[t - 1]] = 1;
  }
  return FieldElement(shared_from_this(), std::move(c));
}

FieldElement FieldSpec::from_index(u128 index) const {
  std::optional<u128> q = order();
  if (q && index >= *q) throw Error(ErrorCode::kInvalidArgument, "element index out of range");
  std::vector<Coeff> c(degree(), 0);
  for (std::size_t i = 0; i < degree() && index; ++i) {
    c[i] = static_cast<Coeff>(index % prime_.p());
    index /= prime_.p();
  }
  return FieldElement(shared_from_this(), std::move(c));
}

u128 FieldSpec::index_of(const FieldElement& a) const {
  const auto& c = a.coeffs();
  std::size_t top = c.size();
  while (top > 0 && c[top - 1] == 0) --top;
  const u128 limit = ~u128{0};
  u128 idx = 0;
  for (std::size_t i = top; i-- > 0;) {
    if (idx > (limit - c[i]) / prime_.p()) throw Error(ErrorCode::kInvalidArgument, "element index exceeds 128 bits");
    idx = idx * prime_.p() + c[i];
  }
  return idx;
}

FieldElement FieldSpec::lift(const FieldElement& a) const {
  const FieldSpec& sub = *a.field();
  if (sub.characteristic() != characteristic() || sub.level_count() > level_count()) {
    throw Error(ErrorCode::kFieldMismatch, "not a subfield prefix");
  }
  for (std::size_t i = 0; i < sub.level_count(); ++i) {
    if (sub.levels_[i].minpoly != levels_[i].minpoly) throw Error(ErrorCode::kFieldMismatch, "not a subfield prefix");
  }
  std::vector<Coeff> c(a.coeffs());
  c.resize(degree(), 0);
  return FieldElement(shared_from_this(), std::move(c));
}

std::string FieldSpec::describe() const {
  std::string out = "field p=" + std::to_string(prime_.p()) + "\n";
  for (const TowerLevel& lv : levels_) {
    out += "ext d=" + std::to_string(lv.degree) + " poly=" + text::JoinNumbers(lv.minpoly, ",") + "\n";
  }
  return out;
}

std::string FieldSpec::element_to_string(std::span<const Coeff> a) const {
  std::string out;
  out.reserve(a.size() * 3);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(a[i]);
  }
  return out;
}

void FieldSpec::add(std::size_t t, const Coeff* a, const Coeff* b, Coeff* out) const {
  const std::size_t n = dims_[t];
  for (std::size_t i = 0; i < n; ++i) out[i] = prime_.add(a[i], b[i]);
}

void FieldSpec::sub(std::size_t t, const Coeff* a, const Coeff* b, Coeff* out) const {
  const std::size_t n = dims_[t];
  for (std::size_t i = 0; i < n; ++i) out[i] = prime_.sub(a[i], b[i]);
}

void FieldSpec::neg(std::size_t t, const Coeff* a, Coeff* out) const {
  const std::size_t n = dims_[t];
  for (std::size_t i = 0; i < n; ++i) out[i] = prime_.neg(a[i]);
}

void FieldSpec::scale(std::size_t t, Coeff c, const Coeff* a, Coeff* out) const {
  const std::size_t n = dims_[t];
  if (c == 0) {
    std::fill_n(out, n, Coeff{0});
    return;
  }
  if (c == 1) {
    if (out != a) std::copy_n(a, n, out);
    return;
  }
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] ? prime_.mul(c, a[i]) : 0;
}

bool FieldSpec::is_zero(std::size_t t, const Coeff* a) const {
  const std::size_t n = dims_[t];
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i]) return false;
  }
  return true;
}

bool FieldSpec::is_scalar(std::size_t t, const Coeff* a) const {
  const std::size_t n = dims_[t];
  for (std::size_t i = 1; i < n; ++i) {
    if (a[i]) return false;
  }
  return true;
}

void FieldSpec::mul(std::size_t t, const Coeff* a, const Coeff* b, Coeff* out) const {
  if (t == 0) {
    out[0] = prime_.mul(a[0], b[0]);
    return;
  }
  if (is_scalar(t, a)) {
    scale(t, a[0], b, out);
    return;
  }
  if (is_scalar(t, b)) {
    scale(t, b[0], a, out);
    return;
  }
  if (t == 1) {
    mul_level1(a, b, out);
  } else {
    mul_upper(t, a, b, out);
  }
}

void FieldSpec::mul_level1(const Coeff* a, const Coeff* b, Coeff* out) const {
  const std::size_t d = levels_[0].degree;
  const LevelCache& lc = cache_[0];
  const Coeff p = prime_.p();
  Scratch acc_buf(2 * d - 1);
  Coeff* acc = acc_buf.data();
  Scratch idx_buf(2 * d);
  Coeff* ia = idx_buf.data();
  Coeff* ib = idx_buf.data() + d;
  std::size_t na = 0, nb = 0;
  for (std::size_t i = 0; i < d; ++i) {
    if (a[i]) ia[na++] = i;
    if (b[i]) ib[nb++] = i;
  }
  if (prime_.lazy_accumulation() && d <= 2048) {
    for (std::size_t x = 0; x < na; ++x) {
      const Coeff ai = a[ia[x]];
      Coeff* row = acc + ia[x];
      for (std::size_t y = 0; y < nb; ++y) row[ib[y]] += ai * b[ib[y]];
    }
    for (std::size_t k = 2 * d - 1; k-- > d;) {
      const Coeff c = acc[k] % p;
      if (!c) continue;
      Coeff* dst = acc + (k - d);
      for (std::size_t j : lc.nonzero_lower) dst[j] += c * lc.negated[j];
    }
    for (std::size_t i = 0; i < d; ++i) out[i] = acc[i] % p;
  } else {
    for (std::size_t x = 0; x < na; ++x) {
      const Coeff ai = a[ia[x]];
      Coeff* row = acc + ia[x];
      for (std::size_t y = 0; y < nb; ++y) row[ib[y]] = prime_.add(row[ib[y]], prime_.mul(ai, b[ib[y]]));
    }
    for (std::size_t k = 2 * d - 1; k-- > d;) {
      const Coeff c = acc[k];
      if (!c) continue;
      Coeff* dst = acc + (k - d);
      for (std::size_t j : lc.nonzero_lower) dst[j] = prime_.add(dst[j], prime_.mul(c, lc.negated[j]));
    }
    std::copy_n(acc, d, out);
  }
}

void FieldSpec::mul_upper(std::size_t t, const Coeff* a, const Coeff* b, Coeff* out) const {
  const std::size_t d = levels_[t - 1].degree;
  const std::size_t bs = dims_[t - 1];
  const LevelCache& lc = cache_[t - 1];
  std::vector<std::size_t> ia, ib;
  ia.reserve(d);
  ib.reserve(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (!is_zero(t - 1, a + i * bs)) ia.push_back(i);
    if (!is_zero(t - 1, b + i * bs)) ib.push_back(i);
  }
  Scratch buf((2 * d - 1) * bs + bs);
  Coeff* acc = buf.data();
  Coeff* tmp = buf.data() + (2 * d - 1) * bs;
  for (std::size_t i : ia) {
    for (std::size_t j : ib) {
      mul(t - 1, a + i * bs, b + j * bs, tmp);
      Coeff* dst = acc + (i + j) * bs;
      add(t - 1, dst, tmp, dst);
    }
  }
  for (std::size_t k = 2 * d - 1; k-- > d;) {
    const Coeff* c = acc + k * bs;
    if (is_zero(t - 1, c)) continue;
    for (std::size_t j : lc.nonzero_lower) {
      mul(t - 1, c, lc.negated.data() + j * bs, tmp);
      Coeff* dst = acc + (k - d + j) * bs;
      add(t - 1, dst, tmp, dst);
    }
  }
  std::copy_n(acc, d * bs, out);
}

void FieldSpec::inv(std::size_t t, const Coeff* a, Coeff* out) const {
  if (t == 0) {
    out[0] = prime_.inv(a[0]);
    return;
  }
  if (is_scalar(t, a)) {
    Coeff c = prime_.inv(a[0]);
    std::fill_n(out, dims_[t], Coeff{0});
    out[0] = c;
    return;
  }
  inv_upper(t, a, out);
}

void FieldSpec::inv_upper(std::size_t t, const Coeff* a, Coeff* out) const {
  const std::size_t d = levels_[t - 1].degree;
  const std::size_t bs = dims_[t - 1];
  const std::size_t lower = t - 1;
  auto deg = [&](const std::vector<Coeff>& v, long from) {
    for (long i = from; i >= 0; --i) {
      if (!is_zero(lower, v.data() + i * bs)) return i;
    }
    return -1L;
  };
  std::vector<Coeff> r0(levels_[t - 1].minpoly);
  std::vector<Coeff> r1(a, a + d * bs);
  r1.resize((d + 1) * bs, 0);
  std::vector<Coeff> s0((d + 1) * bs, 0), s1((d + 1) * bs, 0);
  s1[0] = 1;
  long d0 = static_cast<long>(d);
  long d1 = deg(r1, static_cast<long>(d) - 1);
  if (d1 < 0) throw Error(ErrorCode::kDivisionByZero, "inverse of zero");
  std::vector<Coeff> lc_inv(bs), c(bs), tmp(bs);
  std::vector<Coeff> q((d + 1) * bs);
  while (d1 > 0) {
    inv(lower, r1.data() + d1 * bs, lc_inv.data());
    std::fill(q.begin(), q.end(), 0);
    long dq = d0 - d1;
    while (d0 >= d1) {
      const long shift = d0 - d1;
      mul(lower, r0.data() + d0 * bs, lc_inv.data(), c.data());
      std::copy_n(c.data(), bs, q.data() + shift * bs);
      for (long i = 0; i <= d1; ++i) {
        const Coeff* ri = r1.data() + i * bs;
        if (is_zero(lower, ri)) continue;
        mul(lower, c.data(), ri, tmp.data());
        Coeff* dst = r0.data() + (i + shift) * bs;
        sub(lower, dst, tmp.data(), dst);
      }
      d0 = deg(r0, d0 - 1);
      if (d0 < 0) break;
    }
    if (d0 < 0) throw Error(ErrorCode::kReduciblePolynomial, "minimal polynomial shares a factor");
    // s_new = s0 - q * s1
    long ds1 = deg(s1, static_cast<long>(d));
    for (long i = 0; i <= dq; ++i) {
      const Coeff* qi = q.data() + i * bs;
      if (is_zero(lower, qi)) continue;
      for (long j = 0; j <= ds1 && i + j <= static_cast<long>(d); ++j) {
        const Coeff* sj = s1.data() + j * bs;
        if (is_zero(lower, sj)) continue;
        mul(lower, qi, sj, tmp.data());
        Coeff* dst = s0.data() + (i + j) * bs;
        sub(lower, dst, tmp.data(), dst);
      }
    }
    std::swap(s0, s1);
    std::swap(r0, r1);
    std::swap(d0, d1);
  }
  inv(lower, r1.data(), lc_inv.data());
  for (std::size_t j = 0; j < d; ++j) mul(lower, s1.data() + j * bs, lc_inv.data(), out + j * bs);
}

void FieldSpec::pow(std::size_t t, const Coeff* a, u128 e, Coeff* out) const {
  const std::size_t n = dims_[t];
  std::vector<Coeff> base(a, a + n), acc(n, 0);
  acc[0] = 1 % prime_.p();
  while (e) {
    if (e & 1) mul(t, acc.data(), base.data(), acc.data());
    e >>= 1;
    if (e) mul(t, base.data(), base.data(), base.data());
  }
  std::copy(acc.begin(), acc.end(), out);
}

Coeff FieldSpec::absolute_trace(std::size_t t, const Coeff* a) const {
  if (t == 0) return a[0];
  const std::size_t d = levels_[t - 1].degree;
  const std::size_t bs = dims_[t - 1];
  const LevelCache& lc = cache_[t - 1];
  std::vector<Coeff> r(bs, 0), tmp(bs);
  for (std::size_t e = 0; e < d; ++e) {
    const Coeff* ae = a + e * bs;
    const Coeff* se = lc.power_sums.data() + e * bs;
    if (is_zero(t - 1, ae) || is_zero(t - 1, se)) continue;
    mul(t - 1, ae, se, tmp.data());
    add(t - 1, r.data(), tmp.data(), r.data());
  }
  return absolute_trace(t - 1, r.data());
}

std::optional<Coeff> FieldSpec::absolute_norm(std::size_t t, const Coeff* a) const {
  if (t == 0) return a[0];
  if (is_zero(t, a)) return Coeff{0};
  const std::size_t n = dims_[t];
  if (n <= kConjugateNormMaxDim) {
    std::vector<Coeff> prod(a, a + n), conj(a, a + n);
    for (std::size_t i = 1; i < n; ++i) {
      pow(t, conj.data(), prime_.p(), conj.data());
      mul(t, prod.data(), conj.data(), prod.data());
    }
    return prod[0];
  }
  const std::size_t d = levels_[t - 1].degree;
  const std::size_t bs = dims_[t - 1];
  long block = -1;
  for (std::size_t e = 0; e < d; ++e) {
    if (is_zero(t - 1, a + e * bs)) continue;
    if (block >= 0) return std::nullopt;
    block = static_cast<long>(e);
  }
  std::vector<Coeff> y(bs), nu(bs);
  pow(t - 1, a + block * bs, d, y.data());
  pow(t - 1, cache_[t - 1].norm_of_root.data(), static_cast<u128>(block), nu.data());
  mul(t - 1, y.data(), nu.data(), y.data());
  return absolute_norm(t - 1, y.data());
}

FieldPtr field_make(Coeff p, const std::vector<ExtensionRequest>& extensions) {
  PrimeField check(p);
  std::vector<TowerLevel> levels;
  for (const ExtensionRequest& req : extensions) {
    if (req.degree < 1) throw Error(ErrorCode::kDegreeMismatch, "extension degree must be at least 1");
    FieldSpec base(p, levels);
    const std::size_t b = base.degree();
    const std::size_t d = req.degree;
    TowerLevel lv;
    lv.degree = d;
    if (req.minpoly) {
      const std::vector<Coeff>& poly = *req.minpoly;
      if (poly.size() != (d + 1) * b) {
        throw Error(ErrorCode::kDegreeMismatch,
                    "polynomial of degree " + std::to_string(d) + " needs " + std::to_string((d + 1) * b) +
                        " coefficients, got " + std::to_string(poly.size()));
      }
      for (Coeff c : poly) {
        if (c >= p) throw Error(ErrorCode::kParseError, "polynomial coefficient out of range");
      }
      if (poly[d * b] != 1 || !base.is_scalar(base.level_count(), poly.data() + d * b)) {
        throw Error(ErrorCode::kDegreeMismatch, "polynomial is not monic of the stated degree");
      }
      lv.minpoly = poly;
      lv.certificate = CertifySupplied(base, poly, d);
    } else if (d == 1) {
      lv.minpoly.assign(2 * b, 0);
      lv.minpoly[b] = 1;
      lv.certificate = IrreducibilityCertificate::kLinear;
    } else if (b <= FieldSpec::kGcdSearchMaxBaseDim && !(d == p && base.order() && *base.order() > 4096)) {
      lv.minpoly = find_irreducible(base, d);
      lv.certificate = IrreducibilityCertificate::kGcdTest;
    } else {
      lv = StructuredLevel(base, d);
    }
    levels.push_back(std::move(lv));
  }
  return std::make_shared<const FieldSpec>(p, std::move(levels));
}

std::vector<Coeff> find_irreducible(const FieldSpec& base, std::size_t d) {
  if (d < 1) throw Error(ErrorCode::kDegreeMismatch, "degree must be at least 1");
  const std::size_t b = base.degree();
  const Coeff p = base.characteristic();
  std::vector<Coeff> poly((d + 1) * b, 0);
  poly[d * b] = 1;
  if (d == 1) return poly;
  const std::size_t lower = d * b;
  const std::size_t t = base.level_count();
  // f(x) = g(x^p) is a p-th power, hence reducible.
  auto is_pth_power = [&]() {
    for (std::size_t i = 1; i < d; ++i) {
      if (i % p != 0 && !base.is_zero(t, poly.data() + i * b)) return false;
    }
    return d % p == 0;
  };
  while (true) {
    if (!base.is_zero(t, poly.data()) && !is_pth_power() && GcdTest(base, poly)) return poly;
    std::size_t i = 0;
    while (i < lower) {
      if (++poly[i] < p) break;
      poly[i++] = 0;
    }
    if (i == lower) throw Error(ErrorCode::kReduciblePolynomial, "no irreducible found");
  }
}

bool is_irreducible_gcd_test(const FieldSpec& base, const std::vector<Coeff>& poly) {
  return GcdTest(base, poly);
}

FieldElement::FieldElement(FieldPtr field, std::vector<Coeff> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {}

void FieldElement::check_same(const FieldElement& b) const {
  if (!field_ || !b.field_) throw Error(ErrorCode::kFieldMismatch, "uninitialized field element");
  if (field_.get() != b.field_.get() && !field_->equals(*b.field_)) {
    throw Error(ErrorCode::kFieldMismatch, "operands belong to different fields");
  }
}

bool FieldElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Coeff c) { return c == 0; });
}

bool FieldElement::is_one() const {
  if (coeffs_.empty() || coeffs_[0] != 1) return false;
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](Coeff c) { return c == 0; });
}

std::string FieldElement::to_string() const { return field_->element_to_string(coeffs_); }

FieldElement FieldElement::operator+(const FieldElement& b) const {
  check_same(b);
  std::vector<Coeff> out(coeffs_.size());
  field_->add(field_->level_count(), coeffs_.data(), b.coeffs_.data(), out.data());
  return FieldElement(field_, std::move(out));
}

FieldElement FieldElement::operator-(const FieldElement& b) const {
  check_same(b);
  std::vector<Coeff> out(coeffs_.size());
  field_->sub(field_->level_count(), coeffs_.data(), b.coeffs_.data(), out.data());
  return FieldElement(field_, std::move(out));
}

FieldElement FieldElement::operator*(const FieldElement& b) const {
  check_same(b);
  std::vector<Coeff> out(coeffs_.size());
  field_->mul(field_->level_count(), coeffs_.data(), b.coeffs_.data(), out.data());
  return FieldElement(field_, std::move(out));
}

FieldElement FieldElement::operator/(const FieldElement& b) const { return *this * b.inverse(); }

FieldElement FieldElement::operator-() const {
  std::vector<Coeff> out(coeffs_.size());
  field_->neg(field_->level_count(), coeffs_.data(), out.data());
  return FieldElement(field_, std::move(out));
}

FieldElement FieldElement::inverse() const {
  if (!field_) throw Error(ErrorCode::kFieldMismatch, "uninitialized field element");
  if (is_zero()) throw Error(ErrorCode::kDivisionByZero, "inverse of zero");
  std::vector<Coeff> out(coeffs_.size());
  field_->inv(field_->level_count(), coeffs_.data(), out.data());
  return FieldElement(field_, std::move(out));
}

FieldElement FieldElement::pow(u128 e) const {
  std::vector<Coeff> out(coeffs_.size());
  field_->pow(field_->level_count(), coeffs_.data(), e, out.data());
  return FieldElement(field_, std::move(out));
}

bool FieldElement::operator==(const FieldElement& b) const {
  if (field_.get() != b.field_.get() && (!field_ || !b.field_ || !field_->equals(*b.field_))) return false;
  return coeffs_ == b.coeffs_;
}

FieldElement ff_add(const FieldElement& a, const FieldElement& b) { return a + b; }
FieldElement ff_sub(const FieldElement& a, const FieldElement& b) { return a - b; }
FieldElement ff_mul(const FieldElement& a, const FieldElement& b) { return a * b; }
FieldElement ff_neg(const FieldElement& a) { return -a; }
FieldElement ff_inv(const FieldElement& a) { return a.inverse(); }

FieldElement ff_inv_fermat(const FieldElement& a) {
  if (a.is_zero()) throw Error(ErrorCode::kDivisionByZero, "inverse of zero");
  std::optional<u128> q = a.field()->order();
  if (!q || *q >= (u128{1} << 127)) throw Error(ErrorCode::kInvalidArgument, "field too large for Fermat inverse");
  return a.pow(*q - 2);
}

FieldElement frobenius(const FieldElement& a) { return a.pow(a.field()->characteristic()); }

FieldPtr parse_field_block(const std::vector<std::string>& lines) {
  if (lines.empty() || !text::StartsWith(text::Trim(lines[0]), "field")) {
    throw Error(ErrorCode::kParseError, "expected a 'field p=<p>' line");
  }
  auto head = text::ParseKeyValues(lines[0]);
  if (!head.count("p")) throw Error(ErrorCode::kParseError, "field line lacks p=");
  const Coeff p = text::ParseU64(head["p"]);
  std::vector<ExtensionRequest> ext;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::string line = text::Trim(lines[i]);
    if (!text::StartsWith(line, "ext")) throw Error(ErrorCode::kParseError, "expected an 'ext' line");
    auto kv = text::ParseKeyValues(line);
    if (!kv.count("d")) throw Error(ErrorCode::kParseError, "ext line lacks d=");
    ExtensionRequest req;
    req.degree = text::ParseU64(kv["d"]);
    if (kv.count("poly")) {
      std::vector<Coeff> poly;
      for (const std::string& s : text::Split(kv["poly"], ',')) poly.push_back(text::ParseU64(s));
      req.minpoly = std::move(poly);
    }
    ext.push_back(std::move(req));
  }
  return field_make(p, ext);
}

FieldElement parse_element(const FieldPtr& field, const std::string& s) {
  std::vector<Coeff> c;
  for (const std::string& part : text::Split(text::Trim(s), ',')) c.push_back(text::ParseU64(part));
  return field->from_coeffs(std::move(c));
}

}  // namespace hmds
