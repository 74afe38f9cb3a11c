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

#include "hmds/codes.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <utility>

#include "hmds/error.hpp"

namespace hmds {
namespace {

void CheckSizes(const SetTuple& tuple) {
  const std::size_t ell = tuple.ell();
  if (ell == 0) throw Error(ErrorCode::kSizeConstraintViolated, "empty tuple");
  for (Mask m : tuple.sets) {
    if (static_cast<std::size_t>(MaskSize(m)) > tuple.k) {
      throw Error(ErrorCode::kSizeConstraintViolated, "set larger than k in " + tuple.to_string());
    }
  }
  if (tuple.total_size() != (ell - 1) * tuple.k) {
    throw Error(ErrorCode::kSizeConstraintViolated, "set sizes of " + tuple.to_string() + " do not sum to (l-1)k");
  }
}

// Visits every set partition of [l] as a block label per element.
bool AllPartitions(std::size_t ell, const std::function<bool(const std::vector<std::size_t>&, std::size_t)>& visit) {
  std::vector<std::size_t> label(ell, 0);
  std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t blocks) {
    if (i == ell) return visit(label, blocks);
    for (std::size_t b = 0; b <= blocks; ++b) {
      label[i] = b;
      if (!rec(i + 1, std::max(blocks, b + 1))) return false;
    }
    return true;
  };
  return rec(0, 0);
}

}  // namespace

CodeSpec CodeSpec::reed_solomon(FieldPtr field, std::vector<FieldElement> generators, std::size_t k) {
  if (!field) throw Error(ErrorCode::kInvalidArgument, "missing field");
  if (k > generators.size()) throw Error(ErrorCode::kDimensionMismatch, "k exceeds the number of generators");
  for (const FieldElement& g : generators) {
    if (!g.valid() || (g.field().get() != field.get() && !g.field()->equals(*field))) {
      throw Error(ErrorCode::kFieldMismatch, "generator from a different field");
    }
  }
  CodeSpec c;
  c.field = std::move(field);
  c.n = generators.size();
  c.k = k;
  c.kind = Kind::kReedSolomon;
  c.generators = std::move(generators);
  return c;
}

CodeSpec CodeSpec::explicit_code(MatrixF generator) {
  if (!generator.field()) throw Error(ErrorCode::kInvalidArgument, "missing field");
  if (rank(generator) != generator.rows()) {
    throw Error(ErrorCode::kRankLoss, "generator matrix does not have full row rank");
  }
  CodeSpec c;
  c.field = generator.field();
  c.n = generator.cols();
  c.k = generator.rows();
  c.kind = Kind::kExplicit;
  c.matrix = std::move(generator);
  return c;
}

MatrixF CodeSpec::generator_matrix() const { return is_rs() ? rs_generator_matrix(*this) : matrix; }

MatrixF rs_generator_matrix(const CodeSpec& code) {
  if (!code.is_rs()) throw Error(ErrorCode::kWrongKind, "not a Reed-Solomon code");
  if (code.generators.empty()) return MatrixF(code.field, code.k, 0);
  return vandermonde(code.generators, code.k);
}

CodeSpec dual_code(const CodeSpec& code) {
  MatrixF h = kernel_matrix(code.generator_matrix());
  if (h.rows() == 0) {
    CodeSpec c;
    c.field = code.field;
    c.n = code.n;
    c.k = 0;
    c.kind = CodeSpec::Kind::kExplicit;
    c.matrix = MatrixF(code.field, 0, code.n);
    return c;
  }
  return CodeSpec::explicit_code(std::move(h));
}

CodeSpec puncture(const CodeSpec& code, const std::vector<std::size_t>& keep) {
  for (std::size_t j : keep) {
    if (j >= code.n) throw Error(ErrorCode::kDimensionMismatch, "puncture index out of range");
  }
  if (code.is_rs()) {
    if (keep.size() < code.k) throw Error(ErrorCode::kRankLoss, "fewer kept coordinates than k");
    std::vector<FieldElement> g;
    for (std::size_t j : keep) g.push_back(code.generators[j]);
    return CodeSpec::reed_solomon(code.field, std::move(g), code.k);
  }
  MatrixF m = code.matrix.select_columns(keep);
  if (rank(m) != code.k) throw Error(ErrorCode::kRankLoss, "punctured generator matrix loses rank");
  return CodeSpec::explicit_code(std::move(m));
}

bool generically_zero_partitions(const SetTuple& tuple) {
  CheckSizes(tuple);
  const std::size_t ell = tuple.ell();
  return AllPartitions(ell, [&](const std::vector<std::size_t>& label, std::size_t blocks) {
    std::vector<Mask> inter(blocks, ~Mask{0});
    for (std::size_t i = 0; i < ell; ++i) inter[label[i]] &= tuple.sets[i];
    std::size_t sum = 0;
    for (Mask m : inter) sum += static_cast<std::size_t>(MaskSize(m));
    return sum <= (blocks - 1) * tuple.k;
  });
}

bool generically_zero_three(const SetTuple& tuple) {
  CheckSizes(tuple);
  if (tuple.ell() != 3) throw Error(ErrorCode::kArityMismatch, "three sets expected");
  const Mask a = tuple.sets[0], b = tuple.sets[1], c = tuple.sets[2];
  if (a & b & c) return false;
  const std::size_t k = tuple.k;
  return static_cast<std::size_t>(MaskSize(a & b) + MaskSize(c)) <= k &&
         static_cast<std::size_t>(MaskSize(a & c) + MaskSize(b)) <= k &&
         static_cast<std::size_t>(MaskSize(b & c) + MaskSize(a)) <= k;
}

bool generically_zero(const SetTuple& tuple) {
  if (tuple.ell() == 3) return generically_zero_three(tuple);
  return generically_zero_partitions(tuple);
}

std::vector<Mask> combinations(std::size_t n, std::size_t r) {
  std::vector<Mask> out;
  if (r > n) return out;
  if (n > 64) throw Error(ErrorCode::kInvalidArgument, "at most 64 coordinates");
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    out.push_back(MaskOf(idx));
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == n - r + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

std::vector<std::vector<std::size_t>> feasible_profiles(std::size_t n, std::size_t k, std::size_t ell,
                                                        std::size_t max_size) {
  std::vector<std::vector<std::size_t>> out;
  if (ell == 0) return out;
  const std::size_t cap = std::min({max_size, k, n});
  const std::size_t total = (ell - 1) * k;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t remaining) {
    if (cur.size() == ell) {
      if (remaining == 0) out.push_back(cur);
      return;
    }
    for (std::size_t s = 0; s <= std::min(cap, remaining); ++s) {
      cur.push_back(s);
      rec(remaining - s);
      cur.pop_back();
    }
  };
  rec(total);
  return out;
}

void enumerate_tuples(std::size_t n, std::size_t k, std::size_t ell,
                      const std::optional<std::vector<std::size_t>>& profile, bool only_generically_zero,
                      const std::function<bool(const SetTuple&)>& visit) {
  std::vector<std::vector<std::size_t>> profiles;
  if (profile) {
    std::size_t sum = 0;
    for (std::size_t s : *profile) {
      if (s > k || s > n) throw Error(ErrorCode::kInfeasibleProfile, "profile entry exceeds k or n");
      sum += s;
    }
    if (profile->size() != ell || ell == 0 || sum != (ell - 1) * k) {
      throw Error(ErrorCode::kInfeasibleProfile, "profile must have l entries summing to (l-1)k");
    }
    profiles.push_back(*profile);
  } else {
    profiles = feasible_profiles(n, k, ell, k);
  }
  std::map<std::size_t, std::vector<Mask>> combos;
  SetTuple t;
  t.n = n;
  t.k = k;
  t.sets.assign(ell, 0);
  for (const auto& prof : profiles) {
    for (std::size_t s : prof) {
      if (!combos.count(s)) combos[s] = combinations(n, s);
    }
    std::function<bool(std::size_t)> rec = [&](std::size_t i) {
      if (i == ell) {
        if (only_generically_zero && !generically_zero(t)) return true;
        return visit(t);
      }
      for (Mask m : combos[prof[i]]) {
        t.sets[i] = m;
        if (!rec(i + 1)) return false;
      }
      return true;
    };
    if (!rec(0)) return;
  }
}

std::uint64_t count_tuples(std::size_t n, std::size_t k, std::size_t ell,
                           const std::optional<std::vector<std::size_t>>& profile, bool only_generically_zero) {
  std::uint64_t count = 0;
  enumerate_tuples(n, k, ell, profile, only_generically_zero, [&](const SetTuple&) {
    ++count;
    return true;
  });
  return count;
}

FieldPtr generic_field() {
  static const FieldPtr kField = field_make(kGenericPrime);
  return kField;
}

MatrixF random_matrix(const FieldPtr& field, std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Coeff p = field->characteristic();
  MatrixF m(field, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      Coeff* e = m.entry(r, c);
      for (std::size_t i = 0; i < m.dim(); ++i) e[i] = rng() % p;
    }
  }
  return m;
}

std::vector<MatrixF> column_blocks(const MatrixF& v, const SetTuple& tuple) {
  std::vector<MatrixF> out;
  for (Mask m : tuple.sets) out.push_back(v.select_columns(MaskMembers(m)));
  return out;
}

std::size_t generic_intersection_dim(const SetTuple& tuple, std::uint64_t seed, std::size_t trials) {
  if (trials == 0) throw Error(ErrorCode::kInvalidArgument, "at least one trial");
  std::map<std::size_t, std::size_t> freq;
  std::mt19937_64 seeder(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    MatrixF w = random_matrix(generic_field(), tuple.k, tuple.n, seeder());
    ++freq[subspace_intersection_dim(column_blocks(w, tuple))];
  }
  std::size_t best = 0, best_count = 0;
  for (const auto& [dim, count] : freq) {
    if (count > best_count) {
      best = dim;
      best_count = count;
    }
  }
  return best;
}

}  // namespace hmds
