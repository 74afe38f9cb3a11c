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

#ifndef HMDS_GROEBNER_HPP_
#define HMDS_GROEBNER_HPP_

#include <cstdint>
#include <vector>

#include "hmds/multipoly.hpp"

namespace hmds {

struct GroebnerBasis {
  MonomialOrder order;
  // Reduced basis, monic, sorted by leading monomial descending.
  std::vector<SparsePoly> polys;
  std::uint64_t pairs_processed = 0;
};

inline constexpr std::uint64_t kDefaultPairBudget = 1'000'000;

// Buchberger's algorithm with the Gebauer-Moeller criteria and the normal
// selection strategy. Throws Error(kBudgetExceeded) after `pair_budget`
// S-pairs.
GroebnerBasis buchberger(const std::vector<SparsePoly>& generators, const MonomialOrder& order,
                         std::uint64_t pair_budget = kDefaultPairBudget);

// Fully reduced normal form of f with respect to the polynomials of `basis`
// (assumed monic). Zero iff f lies in the ideal when `basis` is a Groebner
// basis.
SparsePoly gb_reduce(const SparsePoly& f, const GroebnerBasis& basis);
SparsePoly reduce_by(const SparsePoly& f, const std::vector<SparsePoly>& divisors);

SparsePoly s_polynomial(const SparsePoly& a, const SparsePoly& b);

}  // namespace hmds

#endif  // HMDS_GROEBNER_HPP_
