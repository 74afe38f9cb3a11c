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


#include "hmds/applications.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <optional>
#include <numeric>
#include <random>
#include <unordered_map>

#include "hmds/error.hpp"
#include "hmds/parallel.hpp"
#include "hmds/text.hpp"
#include "small_field.hpp"

namespace hmds {
namespace {

using Clock = std::chrono::steady_clock;
using detail::SmallField;

double MillisSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::uint64_t SaturatingAdd(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

std::uint64_t SaturatingMul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::uint64_t SaturatingPow(std::uint64_t base, std::size_t e) {
  std::uint64_t acc = 1;
  for (std::size_t i = 0; i < e; ++i) acc = SaturatingMul(acc, base);
  return acc;
}

// Number of vectors in F_q^n of weight at most w.
std::uint64_t BallSize(std::size_t n, std::uint64_t q, std::size_t w) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i <= std::min(w, n); ++i) {
    total = SaturatingAdd(total, SaturatingMul(Binomial(n, i), SaturatingPow(q - 1, i)));
  }
  return total;
}

// Packs a vector of field indices into base-q digits; fails when q^len does
// not fit in 64 bits.
class Packer {
 public:
  Packer(std::uint64_t q, std::size_t len) : q_(q) {
    if (SaturatingPow(q, len) == std::numeric_limits<std::uint64_t>::max()) {
      throw Error(ErrorCode::kBudgetExceeded, "vector space too large to index");
    }
  }
  std::uint64_t pack(const std::uint32_t* v, std::size_t len) const {
    std::uint64_t key = 0;
    for (std::size_t i = len; i-- > 0;) key = key * q_ + v[i];
    return key;
  }

 private:
  std::uint64_t q_;
};

// Calls visit(vector) for every vector of weight <= max_weight, by weight
// ascending, supports in lexicographic order, and values in base-q order.
void ForEachLowWeight(const SmallField& f, std::size_t n, std::size_t max_weight,
                      const std::function<void(const std::vector<std::uint32_t>&, std::size_t)>& visit) {
  std::vector<std::uint32_t> v(n, 0);
  const std::uint32_t q = static_cast<std::uint32_t>(f.q());
  for (std::size_t w = 0; w <= std::min(max_weight, n); ++w) {
    for (Mask support : combinations(n, w)) {
      const std::vector<std::size_t> pos = MaskMembers(support);
      for (std::size_t p : pos) v[p] = 1;
      while (true) {
        visit(v, w);
        std::size_t i = 0;
        while (i < pos.size() && v[pos[i]] == q - 1) v[pos[i++]] = 1;
        if (i == pos.size()) break;
        ++v[pos[i]];
      }
      for (std::size_t p : pos) v[p] = 0;
    }
  }
}

std::string VectorText(const std::vector<std::uint32_t>& v) { return text::JoinNumbers(v, ","); }

std::string PatternText(const std::vector<std::size_t>& cells, std::size_t n) {
  ErasurePattern e;
  e.n = n;
  for (std::size_t c : cells) e.cells.emplace_back(c / n, c % n);
  return e.to_string();
}

}  // namespace

CheckReport ld_mds_check(const CodeSpec& code, std::size_t list_size, bool up_to, std::uint64_t budget) {
  const auto start = Clock::now();
  if (list_size == 0) throw Error(ErrorCode::kInvalidArgument, "list size must be at least 1");
  CheckReport r;
  r.property = (up_to ? "ld-mds<=" : "ld-mds") + std::to_string(list_size);
  const std::size_t n = code.n;
  const std::size_t redundancy = n - code.k;
  const MatrixF h = dual_code(code).generator_matrix();
  const SmallField f(code.field);
  const std::size_t max_weight = std::min(n, list_size * redundancy);
  if (BallSize(n, f.q(), max_weight) > budget) {
    throw Error(ErrorCode::kBudgetExceeded, "weight-bounded enumeration exceeds the budget of " +
                                                std::to_string(budget) + " vectors");
  }
  const std::size_t rows = h.rows();
  const Packer packer(f.q(), rows);
  // Column j of the parity check, as field indices.
  std::vector<std::vector<std::uint32_t>> columns(n, std::vector<std::uint32_t>(rows));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < rows; ++i) columns[j][i] = f.index(h.at(i, j));
  }
  struct Entry {
    std::size_t weight;
    std::vector<std::uint32_t> vec;
  };
  // Enumeration is by weight ascending, so the first L + 1 vectors reaching a
  // bucket are the lightest ones with that syndrome.
  std::unordered_map<std::uint64_t, std::vector<Entry>> buckets;
  std::vector<std::uint32_t> syndrome(rows);
  ForEachLowWeight(f, n, max_weight, [&](const std::vector<std::uint32_t>& v, std::size_t w) {
    std::fill(syndrome.begin(), syndrome.end(), 0);
    for (std::size_t j = 0; j < n; ++j) {
      if (v[j] == 0) continue;
      for (std::size_t i = 0; i < rows; ++i) syndrome[i] = f.add(syndrome[i], f.mul(v[j], columns[j][i]));
    }
    ++r.tuples;
    std::vector<Entry>& bucket = buckets[packer.pack(syndrome.data(), rows)];
    if (bucket.size() <= list_size) bucket.push_back({w, v});
  });
  const std::size_t first_level = up_to ? 1 : list_size;
  for (std::size_t level = first_level; level <= list_size; ++level) {
    const std::size_t bound = level * redundancy;
    std::optional<std::uint64_t> worst;
    for (const auto& [key, bucket] : buckets) {
      if (bucket.size() < level + 1) continue;
      std::size_t sum = 0;
      for (std::size_t i = 0; i <= level; ++i) sum += bucket[i].weight;
      if (sum <= bound && (!worst || key < *worst)) worst = key;
    }
    if (worst) {
      r.verdict = Verdict::kFail;
      std::vector<std::string> parts;
      for (std::size_t i = 0; i <= level; ++i) parts.push_back(VectorText(buckets[*worst][i].vec));
      r.witness_text = text::Join(parts, ";");
      r.add_detail("level", std::to_string(level));
      break;
    }
  }
  r.add_detail("max_weight", std::to_string(max_weight));
  r.add_detail("buckets", std::to_string(buckets.size()));
  r.time_ms = MillisSince(start);
  return r;
}

CheckReport duality_test(const CodeSpec& code, std::size_t ell, std::uint64_t budget) {
  const auto start = Clock::now();
  if (ell == 0) throw Error(ErrorCode::kInvalidArgument, "ell must be at least 1");
  CheckOptions options;
  options.threads = 1;
  const CheckReport mds = is_mds_ell(code, ell + 1, options);
  const CheckReport ld = ld_mds_check(dual_code(code), ell, true, budget);
  CheckReport r;
  r.property = "duality" + std::to_string(ell);
  r.verdict = mds.verdict == ld.verdict ? Verdict::kPass : Verdict::kFail;
  r.tuples = mds.tuples + ld.tuples;
  r.add_detail("mds" + std::to_string(ell + 1), VerdictName(mds.verdict));
  r.add_detail("dual_ld_mds<=" + std::to_string(ell), VerdictName(ld.verdict));
  if (mds.witness) r.add_detail("mds_witness", mds.witness->to_string());
  if (!ld.witness_text.empty()) r.add_detail("ld_witness", ld.witness_text);
  if (!r.passed()) r.witness_text = "verdicts disagree";
  r.time_ms = MillisSince(start);
  return r;
}

CheckReport worst_case_ld_check(const CodeSpec& code, std::size_t list_size, std::uint64_t radius_numerator,
                                std::uint64_t radius_denominator, std::uint64_t budget) {
  const auto start = Clock::now();
  if (radius_denominator == 0) throw Error(ErrorCode::kInvalidArgument, "radius denominator must be positive");
  CheckReport r;
  r.property = "worst-case-ld" + std::to_string(list_size);
  const std::size_t n = code.n;
  const std::size_t k = code.k;
  const std::size_t radius =
      static_cast<std::size_t>(std::min<u128>(n, static_cast<u128>(radius_numerator) * n / radius_denominator));
  const SmallField f(code.field);
  const std::uint64_t q = f.q();
  const std::uint64_t codewords = SaturatingPow(q, k);
  if (SaturatingPow(q, n) > budget || SaturatingMul(codewords, BallSize(n, q, radius)) > budget) {
    throw Error(ErrorCode::kBudgetExceeded, "ball enumeration exceeds the budget of " + std::to_string(budget));
  }
  const Packer packer(q, n);
  const std::vector<std::uint32_t> g = f.from_matrix(code.generator_matrix());
  // All codewords, in base-q message order.
  std::vector<std::vector<std::uint32_t>> words;
  words.reserve(codewords);
  std::vector<std::uint32_t> msg(k, 0);
  for (std::uint64_t idx = 0; idx < codewords; ++idx) {
    std::uint64_t rest = idx;
    for (std::size_t i = 0; i < k; ++i) {
      msg[i] = static_cast<std::uint32_t>(rest % q);
      rest /= q;
    }
    std::vector<std::uint32_t> c(n, 0);
    for (std::size_t i = 0; i < k; ++i) {
      if (msg[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[j] = f.add(c[j], f.mul(msg[i], g[i * n + j]));
    }
    words.push_back(std::move(c));
  }
  std::unordered_map<std::uint64_t, std::uint32_t> counts;
  std::vector<std::uint32_t> y(n);
  for (const auto& c : words) {
    ForEachLowWeight(f, n, radius, [&](const std::vector<std::uint32_t>& e, std::size_t) {
      for (std::size_t j = 0; j < n; ++j) y[j] = f.add(c[j], e[j]);
      ++counts[packer.pack(y.data(), n)];
      ++r.tuples;
    });
  }
  std::optional<std::uint64_t> worst;
  for (const auto& [key, count] : counts) {
    if (count > list_size && (!worst || key < *worst)) worst = key;
  }
  if (worst) {
    r.verdict = Verdict::kFail;
    std::uint64_t rest = *worst;
    for (std::size_t j = 0; j < n; ++j) {
      y[j] = static_cast<std::uint32_t>(rest % q);
      rest /= q;
    }
    std::vector<std::string> parts{VectorText(y)};
    for (const auto& c : words) {
      std::size_t dist = 0;
      for (std::size_t j = 0; j < n; ++j) dist += c[j] != y[j];
      if (dist <= radius) parts.push_back(VectorText(c));
    }
    r.witness_text = text::Join(parts, ";");
    r.add_detail("list", std::to_string(counts[*worst]));
  }
  r.add_detail("radius", std::to_string(radius));
  r.time_ms = MillisSince(start);
  return r;
}

std::string ErasurePattern::to_string() const {
  std::vector<std::string> parts;
  for (const auto& [row, col] : cells) parts.push_back(std::to_string(row + 1) + "," + std::to_string(col + 1));
  return text::Join(parts, ";");
}

ErasurePattern ErasurePattern::parse(const std::string& textual, std::size_t m, std::size_t n) {
  ErasurePattern e;
  e.m = m;
  e.n = n;
  const std::string trimmed = text::Trim(textual);
  if (trimmed.empty()) return e;
  for (const std::string& part : text::Split(trimmed, ';')) {
    const std::vector<std::string> rc = text::Split(text::Trim(part), ',');
    if (rc.size() != 2) throw Error(ErrorCode::kParseError, "expected `r,c` in erasure pattern: " + part);
    const std::uint64_t row = text::ParseU64(text::Trim(rc[0]));
    const std::uint64_t col = text::ParseU64(text::Trim(rc[1]));
    if (row < 1 || row > m || col < 1 || col > n) {
      throw Error(ErrorCode::kInvalidArgument, "cell outside the grid: " + part);
    }
    e.cells.emplace_back(row - 1, col - 1);
  }
  std::sort(e.cells.begin(), e.cells.end());
  if (std::adjacent_find(e.cells.begin(), e.cells.end()) != e.cells.end()) {
    throw Error(ErrorCode::kInvalidArgument, "repeated cell in erasure pattern");
  }
  return e;
}

std::vector<std::size_t> ErasurePattern::linear() const {
  std::vector<std::size_t> out;
  for (const auto& [row, col] : cells) out.push_back(row * n + col);
  std::sort(out.begin(), out.end());
  return out;
}

TensorCodeSpec parity_column_tensor(const CodeSpec& row, std::size_t m) {
  if (m < 2) throw Error(ErrorCode::kInvalidArgument, "column length must be at least 2");
  MatrixF g(row.field, m - 1, m);
  const FieldElement minus_one = -row.field->one();
  for (std::size_t i = 0; i + 1 < m; ++i) {
    g.set(i, i, row.field->one());
    g.set(i, m - 1, minus_one);
  }
  return TensorCodeSpec{CodeSpec::explicit_code(std::move(g)), row};
}

MatrixF tensor_parity_from_checks(const MatrixF& h_col, const MatrixF& h_row) {
  const FieldPtr& field = h_col.field();
  const std::size_t m = h_col.cols();
  const std::size_t n = h_row.cols();
  if (m * n > 64) throw Error(ErrorCode::kBudgetExceeded, "tensor grid larger than 64 cells");
  MatrixF all(field, h_col.rows() * n + m * h_row.rows(), m * n);
  std::size_t out = 0;
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t h = 0; h < h_col.rows(); ++h, ++out) {
      for (std::size_t i = 0; i < m; ++i) all.set(out, i * n + c, h_col.at(h, i));
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t h = 0; h < h_row.rows(); ++h, ++out) {
      for (std::size_t c = 0; c < n; ++c) all.set(out, i * n + c, h_row.at(h, c));
    }
  }
  const RrefResult reduced = rref(all);
  std::vector<std::size_t> keep(reduced.pivots.size());
  std::iota(keep.begin(), keep.end(), 0);
  return reduced.reduced.select_rows(keep);
}

MatrixF tensor_parity(const TensorCodeSpec& spec) {
  if (!spec.col.field->equals(*spec.row.field)) {
    throw Error(ErrorCode::kFieldMismatch, "component codes over different fields");
  }
  const CodeSpec dual_col = dual_code(spec.col);
  const CodeSpec dual_row = dual_code(spec.row);
  return tensor_parity_from_checks(dual_col.generator_matrix(), dual_row.generator_matrix());
}

bool pattern_correctable(const MatrixF& parity, const std::vector<std::size_t>& cells) {
  if (cells.empty()) return true;
  if (cells.size() > parity.rows()) return false;
  return rank(parity.select_columns(cells)) == cells.size();
}

GenericTensorOracle::GenericTensorOracle(std::size_t m, std::size_t n, std::size_t a, std::size_t b,
                                         std::uint64_t seed, std::size_t trials) {
  if (a > m || b > n) throw Error(ErrorCode::kDimensionMismatch, "redundancy exceeds the code length");
  const FieldPtr field = generic_field();
  for (std::size_t t = 0; t < trials; ++t) {
    const MatrixF h_col = random_matrix(field, a, m, seed * 1000003 + 2 * t);
    const MatrixF h_row = random_matrix(field, b, n, seed * 1000003 + 2 * t + 1);
    parity_.push_back(tensor_parity_from_checks(h_col, h_row));
    rank_ = std::max(rank_, parity_.back().rows());
  }
}

bool GenericTensorOracle::correctable(Mask cells) {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    if (auto it = memo_.find(cells); it != memo_.end()) return it->second;
  }
  const std::vector<std::size_t> members = MaskMembers(cells);
  std::size_t votes = 0;
  for (const MatrixF& h : parity_) votes += pattern_correctable(h, members);
  const bool result = 2 * votes > parity_.size();
  std::lock_guard<std::mutex> lock(mutex_);
  memo_.emplace(cells, result);
  return result;
}

CheckReport mr_check(const TensorCodeSpec& spec, const MrOptions& options) {
  const auto start = Clock::now();
  CheckReport r;
  r.property = "mr";
  const std::size_t m = spec.m();
  const std::size_t n = spec.n();
  const std::size_t cells = m * n;
  if (cells > 64) throw Error(ErrorCode::kBudgetExceeded, "tensor grid larger than 64 cells");
  const MatrixF parity = tensor_parity(spec);
  std::shared_ptr<GenericTensorOracle> oracle = options.oracle;
  if (!oracle) oracle = std::make_shared<GenericTensorOracle>(m, n, spec.a(), spec.b(), options.seed);
  const std::size_t max_size = oracle->rank();
  std::uint64_t total = 0;
  for (std::size_t w = 0; w <= max_size; ++w) total = SaturatingAdd(total, Binomial(cells, w));

  std::vector<Mask> patterns;
  const bool exhaustive = total <= options.pattern_budget;
  if (exhaustive) {
    for (std::size_t w = 0; w <= max_size; ++w) {
      const std::vector<Mask> layer = combinations(cells, w);
      patterns.insert(patterns.end(), layer.begin(), layer.end());
    }
  } else {
    std::mt19937_64 rng(options.seed);
    std::vector<double> weights;
    for (std::size_t w = 0; w <= max_size; ++w) weights.push_back(static_cast<double>(Binomial(cells, w)));
    std::discrete_distribution<std::size_t> size_dist(weights.begin(), weights.end());
    std::vector<std::size_t> order(cells);
    for (std::size_t s = 0; s < options.samples; ++s) {
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), rng);
      const std::size_t w = size_dist(rng);
      Mask mask = 0;
      for (std::size_t i = 0; i < w; ++i) mask |= Mask{1} << order[i];
      patterns.push_back(mask);
    }
  }
  std::vector<char> specific(patterns.size());
  const std::size_t fail = FirstFailure(patterns.size(), options.threads, [&](std::size_t i) {
    const bool mine = pattern_correctable(parity, MaskMembers(patterns[i]));
    specific[i] = mine;
    return mine == oracle->correctable(patterns[i]);
  });
  r.tuples = fail == kNoFailure ? patterns.size() : fail + 1;
  if (fail != kNoFailure) {
    r.verdict = Verdict::kFail;
    r.witness_text = PatternText(MaskMembers(patterns[fail]), n);
    r.add_detail("code_correctable", specific[fail] ? "yes" : "no");
    r.add_detail("generic_correctable", specific[fail] ? "no" : "yes");
  }
  r.add_detail("parity_rank", std::to_string(parity.rows()));
  r.add_detail("generic_rank", std::to_string(max_size));
  r.add_detail("mode", exhaustive ? "exhaustive" : "sampled");
  r.add_detail("patterns_total", std::to_string(total));
  if (!exhaustive) {
    r.add_detail("coverage", std::to_string(static_cast<double>(patterns.size()) / static_cast<double>(total)));
  }
  r.time_ms = MillisSince(start);
  return r;
}

}  // namespace hmds
