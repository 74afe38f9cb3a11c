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


#include <benchmark/benchmark.h>

#include <random>

#include "hmds/codes.hpp"
#include "hmds/constructions.hpp"
#include "hmds/fields.hpp"
#include "hmds/linalg.hpp"
#include "hmds/mdscheck.hpp"

namespace {

hmds::MatrixF RandomSquare(const hmds::FieldPtr& f, std::size_t n, std::uint64_t seed) {
  return hmds::random_matrix(f, n, n, seed);
}

void BM_FieldMultiply(benchmark::State& state) {
  const hmds::FieldPtr f = hmds::field_make(7, {{static_cast<std::size_t>(state.range(0)), std::nullopt}});
  std::mt19937_64 rng(1);
  hmds::FieldElement a = f->from_index(rng() % 1000 + 1), b = f->from_index(rng() % 1000 + 2);
  for (auto _ : state) {
    a = a * b + b;
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_FieldMultiply)->Arg(4)->Arg(25)->Arg(64);

void BM_Determinant(benchmark::State& state) {
  const hmds::FieldPtr f = hmds::field_make(11, {{7, std::nullopt}});
  const hmds::MatrixF m = RandomSquare(f, static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(hmds::det(m));
}
BENCHMARK(BM_Determinant)->Arg(6)->Arg(9)->Arg(12);

void BM_Rank(benchmark::State& state) {
  const hmds::FieldPtr f = hmds::field_make(2147483659ull);
  const hmds::MatrixF m = RandomSquare(f, static_cast<std::size_t>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(hmds::rank(m));
}
BENCHMARK(BM_Rank)->Arg(16)->Arg(32);

void BM_Mds3FastPath(benchmark::State& state) {
  const hmds::CodeSpec code = hmds::construct_k3_n4(static_cast<std::size_t>(state.range(0))).code;
  hmds::CheckOptions opts;
  opts.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(hmds::is_mds3_rs_fast(code, opts));
}
BENCHMARK(BM_Mds3FastPath)->Arg(7)->Arg(9)->Unit(benchmark::kMillisecond);

void BM_Mds3BlockPath(benchmark::State& state) {
  const hmds::CodeSpec code = hmds::construct_k4(static_cast<std::size_t>(state.range(0))).code;
  hmds::CheckOptions opts;
  opts.threads = 1;
  opts.method = hmds::CheckOptions::Method::kBlock;
  for (auto _ : state) benchmark::DoNotOptimize(hmds::is_mds_ell(code, 3, opts));
}
BENCHMARK(BM_Mds3BlockPath)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_GenericallyZero(benchmark::State& state) {
  std::vector<hmds::SetTuple> tuples;
  hmds::enumerate_tuples(8, 4, 3, std::nullopt, false, [&](const hmds::SetTuple& t) {
    tuples.push_back(t);
    return tuples.size() < 4096;
  });
  for (auto _ : state) {
    std::size_t zero = 0;
    for (const auto& t : tuples) zero += hmds::generically_zero(t);
    benchmark::DoNotOptimize(zero);
  }
}
BENCHMARK(BM_GenericallyZero);

}  // namespace
BENCHMARK_MAIN();
