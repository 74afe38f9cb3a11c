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

#include "hmds/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "hmds/error.hpp"
#include "hmds/text.hpp"

namespace hmds {
namespace {

constexpr std::uint64_t kHigh = 0x8080808080808080ull;

unsigned Lane(PackedMonomial m, std::size_t var) {
  return static_cast<unsigned>((m >> (8 * (7 - var))) & 0xff);
}

PackedMonomial WithLane(PackedMonomial m, std::size_t var, unsigned e) {
  const unsigned shift = 8 * (7 - static_cast<unsigned>(var));
  return (m & ~(std::uint64_t{0xff} << shift)) | (std::uint64_t{e} << shift);
}

}  // namespace

PackedMonomial PackMonomial(const std::vector<unsigned>& exps) {
  if (exps.size() > kMaxVars) throw Error(ErrorCode::kArityMismatch, "at most 8 variables are supported");
  PackedMonomial m = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] > kMaxExponent) throw Error(ErrorCode::kDegreeTooHigh, "exponent above 127");
    m = WithLane(m, i, exps[i]);
  }
  return m;
}

std::vector<unsigned> UnpackMonomial(PackedMonomial m, std::size_t nvars) {
  std::vector<unsigned> out(nvars);
  for (std::size_t i = 0; i < nvars; ++i) out[i] = Lane(m, i);
  return out;
}

unsigned MonomialExponent(PackedMonomial m, std::size_t var) { return Lane(m, var); }

unsigned MonomialDegree(PackedMonomial m) {
  unsigned d = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) d += Lane(m, i);
  return d;
}

bool MonomialDivides(PackedMonomial a, PackedMonomial b) { return (((b | kHigh) - a) & kHigh) == kHigh; }

PackedMonomial MonomialLcm(PackedMonomial a, PackedMonomial b) {
  PackedMonomial m = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) m = WithLane(m, i, std::max(Lane(a, i), Lane(b, i)));
  return m;
}

PackedMonomial MonomialMul(PackedMonomial a, PackedMonomial b) {
  PackedMonomial s = a + b;
  if (s & kHigh) throw Error(ErrorCode::kDegreeTooHigh, "exponent above 127");
  return s;
}

PackedMonomial MonomialDiv(PackedMonomial a, PackedMonomial b) { return a - b; }

bool MonomialsCoprime(PackedMonomial a, PackedMonomial b) {
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (Lane(a, i) && Lane(b, i)) return false;
  }
  return true;
}

int MonomialOrder::compare(PackedMonomial a, PackedMonomial b) const {
  if (a == b) return 0;
  if (perm.empty()) {
    if (kind == Kind::kLex) return a > b ? 1 : -1;
    unsigned da = MonomialDegree(a), db = MonomialDegree(b);
    if (da != db) return da > db ? 1 : -1;
    return __builtin_bswap64(a) < __builtin_bswap64(b) ? 1 : -1;
  }
  if (kind == Kind::kLex) {
    for (std::size_t v : perm) {
      unsigned x = Lane(a, v), y = Lane(b, v);
      if (x != y) return x > y ? 1 : -1;
    }
    return 0;
  }
  unsigned da = MonomialDegree(a), db = MonomialDegree(b);
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = perm.size(); i-- > 0;) {
    unsigned x = Lane(a, perm[i]), y = Lane(b, perm[i]);
    if (x != y) return x < y ? 1 : -1;
  }
  return 0;
}

std::string MonomialOrder::name() const {
  std::string out = kind == Kind::kLex ? "lex" : "degrevlex";
  if (!perm.empty()) out += "(" + text::JoinNumbers(perm, ",") + ")";
  return out;
}

SparsePoly::SparsePoly(Coeff p, std::size_t nvars, MonomialOrder order)
    : p_(p), nvars_(nvars), order_(std::move(order)) {
  if (nvars > kMaxVars) throw Error(ErrorCode::kArityMismatch, "at most 8 variables are supported");
}

SparsePoly SparsePoly::constant(Coeff p, std::size_t nvars, std::int64_t c, MonomialOrder order) {
  SparsePoly out(p, nvars, std::move(order));
  Coeff v = PrimeField(p).from_int(c);
  if (v) out.terms_.push_back({0, v});
  return out;
}

SparsePoly SparsePoly::variable(Coeff p, std::size_t nvars, std::size_t i, MonomialOrder order) {
  if (i >= nvars) throw Error(ErrorCode::kArityMismatch, "variable index out of range");
  SparsePoly out(p, nvars, std::move(order));
  out.terms_.push_back({WithLane(0, i, 1), 1 % p});
  return out;
}

SparsePoly SparsePoly::from_terms(Coeff p, std::size_t nvars, std::vector<Term> terms, MonomialOrder order) {
  SparsePoly out(p, nvars, std::move(order));
  for (Term& t : terms) t.coeff %= p;
  out.terms_ = std::move(terms);
  out.normalize();
  return out;
}

void SparsePoly::normalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.mono < b.mono; });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (const Term& t : terms_) {
    if (!merged.empty() && merged.back().mono == t.mono) {
      Coeff s = merged.back().coeff + t.coeff;
      if (s >= p_ || s < t.coeff) s -= p_;
      merged.back().coeff = s;
    } else {
      merged.push_back(t);
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.coeff == 0; });
  std::sort(merged.begin(), merged.end(),
            [this](const Term& a, const Term& b) { return order_.compare(a.mono, b.mono) > 0; });
  terms_ = std::move(merged);
}

void SparsePoly::check_compatible(const SparsePoly& b) const {
  if (p_ != b.p_) throw Error(ErrorCode::kCharacteristicMismatch, "polynomials over different primes");
  if (nvars_ != b.nvars_) throw Error(ErrorCode::kArityMismatch, "polynomials in different numbers of variables");
}

unsigned SparsePoly::total_degree() const {
  unsigned d = 0;
  for (const Term& t : terms_) d = std::max(d, MonomialDegree(t.mono));
  return d;
}

unsigned SparsePoly::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const Term& t : terms_) d = std::max(d, Lane(t.mono, var));
  return d;
}

SparsePoly SparsePoly::with_order(const MonomialOrder& order) const {
  SparsePoly out(p_, nvars_, order);
  out.terms_ = terms_;
  std::sort(out.terms_.begin(), out.terms_.end(),
            [&order](const Term& a, const Term& b) { return order.compare(a.mono, b.mono) > 0; });
  return out;
}

SparsePoly SparsePoly::operator+(const SparsePoly& b) const {
  check_compatible(b);
  SparsePoly out(p_, nvars_, order_);
  const std::vector<Term>& bt = (b.order_ == order_) ? b.terms_ : b.with_order(order_).terms_;
  std::size_t i = 0, j = 0;
  out.terms_.reserve(terms_.size() + bt.size());
  while (i < terms_.size() || j < bt.size()) {
    int c = i == terms_.size() ? -1 : j == bt.size() ? 1 : order_.compare(terms_[i].mono, bt[j].mono);
    if (c > 0) {
      out.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      out.terms_.push_back(bt[j++]);
    } else {
      Coeff s = terms_[i].coeff + bt[j].coeff;
      if (s >= p_ || s < bt[j].coeff) s -= p_;
      if (s) out.terms_.push_back({terms_[i].mono, s});
      ++i;
      ++j;
    }
  }
  return out;
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly out = *this;
  for (Term& t : out.terms_) t.coeff = p_ - t.coeff;
  return out;
}

SparsePoly SparsePoly::operator-(const SparsePoly& b) const { return *this + (-b); }

SparsePoly SparsePoly::operator*(const SparsePoly& b) const {
  check_compatible(b);
  SparsePoly out(p_, nvars_, order_);
  if (is_zero() || b.is_zero()) return out;
  PrimeField fp(p_);
  out.terms_.reserve(terms_.size() * b.terms_.size());
  for (const Term& x : terms_) {
    for (const Term& y : b.terms_) out.terms_.push_back({MonomialMul(x.mono, y.mono), fp.mul(x.coeff, y.coeff)});
  }
  out.normalize();
  return out;
}

SparsePoly SparsePoly::scaled(Coeff c) const {
  SparsePoly out(p_, nvars_, order_);
  c %= p_;
  if (c == 0) return out;
  PrimeField fp(p_);
  out.terms_ = terms_;
  for (Term& t : out.terms_) t.coeff = fp.mul(t.coeff, c);
  return out;
}

SparsePoly SparsePoly::times_monomial(PackedMonomial m, Coeff c) const {
  SparsePoly out = scaled(c);
  for (Term& t : out.terms_) t.mono = MonomialMul(t.mono, m);
  return out;
}

SparsePoly SparsePoly::pow(unsigned e) const {
  SparsePoly result = constant(p_, nvars_, 1, order_);
  SparsePoly base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

SparsePoly SparsePoly::monic() const {
  if (is_zero()) return *this;
  return scaled(PrimeField(p_).inv(leading().coeff));
}

bool SparsePoly::operator==(const SparsePoly& b) const {
  if (p_ != b.p_ || nvars_ != b.nvars_ || terms_.size() != b.terms_.size()) return false;
  const std::vector<Term>& bt = (b.order_ == order_) ? b.terms_ : b.with_order(order_).terms_;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].mono != bt[i].mono || terms_[i].coeff != bt[i].coeff) return false;
  }
  return true;
}

SparsePoly SparsePoly::coefficient_of(std::size_t var, unsigned power) const {
  if (var >= nvars_) throw Error(ErrorCode::kArityMismatch, "variable index out of range");
  SparsePoly out(p_, nvars_ - 1, order_);
  for (const Term& t : terms_) {
    if (Lane(t.mono, var) != power) continue;
    std::vector<unsigned> e = UnpackMonomial(t.mono, nvars_);
    e.erase(e.begin() + static_cast<long>(var));
    out.terms_.push_back({PackMonomial(e), t.coeff});
  }
  if (!order_.perm.empty()) out.order_ = MonomialOrder{order_.kind, {}};
  out.normalize();
  return out;
}

SparsePoly SparsePoly::compose(const std::vector<SparsePoly>& values) const {
  if (values.size() != nvars_) throw Error(ErrorCode::kArityMismatch, "one value per variable is required");
  if (values.empty()) return *this;
  const SparsePoly& proto = values[0];
  for (const SparsePoly& v : values) proto.check_compatible(v);
  if (proto.p_ != p_) throw Error(ErrorCode::kCharacteristicMismatch, "different primes");
  std::vector<std::vector<SparsePoly>> powers(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) {
    unsigned d = degree_in(i);
    powers[i].push_back(constant(p_, proto.nvars_, 1, proto.order_));
    for (unsigned e = 1; e <= d; ++e) powers[i].push_back(powers[i].back() * values[i]);
  }
  SparsePoly out(p_, proto.nvars_, proto.order_);
  for (const Term& t : terms_) {
    SparsePoly term = constant(p_, proto.nvars_, 1, proto.order_).scaled(t.coeff);
    for (std::size_t i = 0; i < nvars_; ++i) {
      unsigned e = Lane(t.mono, i);
      if (e) term = term * powers[i][e];
    }
    out = out + term;
  }
  return out;
}

std::string SparsePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) out += " + ";
    out += std::to_string(terms_[i].coeff);
    for (std::size_t v = 0; v < nvars_; ++v) {
      unsigned e = Lane(terms_[i].mono, v);
      if (!e) continue;
      out += "*x" + std::to_string(v + 1);
      if (e > 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

SparsePoly SparsePoly::parse(const std::string& s, Coeff p, std::size_t nvars, MonomialOrder order) {
  PrimeField fp(p);
  std::vector<Term> terms;
  std::size_t i = 0;
  auto skip = [&]() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  auto number = [&]() -> std::uint64_t {
    skip();
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i) throw Error(ErrorCode::kParseError, "expected a number at offset " + std::to_string(i));
    std::uint64_t v = text::ParseU64(s.substr(i, j - i));
    i = j;
    return v;
  };
  skip();
  if (i == s.size()) throw Error(ErrorCode::kParseError, "empty polynomial");
  bool first = true;
  while (true) {
    skip();
    if (i == s.size()) break;
    bool negative = false;
    if (s[i] == '+' || s[i] == '-') {
      negative = s[i] == '-';
      ++i;
    } else if (!first) {
      throw Error(ErrorCode::kParseError, "expected '+' or '-' at offset " + std::to_string(i));
    }
    first = false;
    Coeff c = 1;
    std::vector<unsigned> exps(nvars, 0);
    bool need_factor = true;
    while (need_factor) {
      skip();
      if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        c = fp.mul(c, number() % p);
      } else if (i < s.size() && s[i] == 'x') {
        ++i;
        std::uint64_t v = number();
        if (v < 1 || v > nvars) throw Error(ErrorCode::kParseError, "variable x" + std::to_string(v) + " out of range");
        unsigned e = 1;
        skip();
        if (i < s.size() && s[i] == '^') {
          ++i;
          e = static_cast<unsigned>(number());
        }
        exps[v - 1] += e;
      } else {
        throw Error(ErrorCode::kParseError, "expected a coefficient or variable at offset " + std::to_string(i));
      }
      skip();
      if (i < s.size() && s[i] == '*') {
        ++i;
      } else {
        need_factor = false;
      }
    }
    if (negative) c = fp.neg(c);
    terms.push_back({PackMonomial(exps), c});
  }
  return from_terms(p, nvars, std::move(terms), std::move(order));
}

SparsePoly poly_add(const SparsePoly& a, const SparsePoly& b) { return a + b; }
SparsePoly poly_mul(const SparsePoly& a, const SparsePoly& b) { return a * b; }

FieldElement poly_eval(const SparsePoly& f, const std::vector<FieldElement>& point) {
  if (point.size() != f.nvars()) throw Error(ErrorCode::kArityMismatch, "point has the wrong number of coordinates");
  if (point.empty()) throw Error(ErrorCode::kArityMismatch, "cannot infer the target field from an empty point");
  FieldPtr field = point[0].field();
  if (field->characteristic() != f.characteristic()) {
    throw Error(ErrorCode::kCharacteristicMismatch, "evaluation field has a different characteristic");
  }
  std::vector<std::vector<FieldElement>> powers(f.nvars());
  for (std::size_t i = 0; i < f.nvars(); ++i) {
    powers[i].push_back(field->one());
    for (unsigned e = 1; e <= f.degree_in(i); ++e) powers[i].push_back(powers[i].back() * point[i]);
  }
  FieldElement acc = field->zero();
  for (const Term& t : f.terms()) {
    std::vector<Coeff> c(field->degree(), 0);
    c[0] = t.coeff;
    FieldElement m(field, std::move(c));
    for (std::size_t i = 0; i < f.nvars(); ++i) {
      unsigned e = MonomialExponent(t.mono, i);
      if (e) m = m * powers[i][e];
    }
    acc = acc + m;
  }
  return acc;
}

}  // namespace hmds
