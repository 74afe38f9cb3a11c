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

#include "hmds/groebner.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "hmds/error.hpp"

namespace hmds {
namespace {

SparsePoly ReduceByPointers(const SparsePoly& f0, const std::vector<const SparsePoly*>& divisors) {
  if (f0.is_zero()) return f0;
  const MonomialOrder& order = divisors.empty() ? f0.order() : divisors[0]->order();
  SparsePoly f = f0.order() == order ? f0 : f0.with_order(order);
  const Coeff p = f.characteristic();
  PrimeField fp(p);
  // Pending terms live in a max-heap; equal monomials are combined on pop.
  auto less = [&order](const Term& a, const Term& b) { return order.compare(a.mono, b.mono) < 0; };
  std::vector<Term> heap(f.terms().begin(), f.terms().end());
  std::make_heap(heap.begin(), heap.end(), less);
  std::vector<Term> rem;
  while (!heap.empty()) {
    std::pop_heap(heap.begin(), heap.end(), less);
    Term lt = heap.back();
    heap.pop_back();
    while (!heap.empty() && heap.front().mono == lt.mono) {
      std::pop_heap(heap.begin(), heap.end(), less);
      lt.coeff = fp.add(lt.coeff, heap.back().coeff);
      heap.pop_back();
    }
    if (lt.coeff == 0) continue;
    const SparsePoly* g = nullptr;
    for (const SparsePoly* d : divisors) {
      if (MonomialDivides(d->leading().mono, lt.mono)) {
        g = d;
        break;
      }
    }
    if (!g) {
      rem.push_back(lt);
      continue;
    }
    const Coeff c = fp.mul(lt.coeff, fp.inv(g->leading().coeff));
    const PackedMonomial m = MonomialDiv(lt.mono, g->leading().mono);
    const std::vector<Term>& gt = g->terms();
    for (std::size_t i = 1; i < gt.size(); ++i) {
      heap.push_back({MonomialMul(gt[i].mono, m), fp.neg(fp.mul(c, gt[i].coeff))});
      std::push_heap(heap.begin(), heap.end(), less);
    }
  }
  return SparsePoly::from_terms(p, f.nvars(), std::move(rem), order);
}

struct Pair {
  std::size_t i;
  std::size_t j;
  PackedMonomial lcm;
};

}  // namespace

SparsePoly s_polynomial(const SparsePoly& a, const SparsePoly& b) {
  PrimeField fp(a.characteristic());
  const PackedMonomial l = MonomialLcm(a.leading().mono, b.leading().mono);
  SparsePoly left = a.times_monomial(MonomialDiv(l, a.leading().mono), fp.inv(a.leading().coeff));
  SparsePoly right = b.times_monomial(MonomialDiv(l, b.leading().mono), fp.inv(b.leading().coeff));
  return left - right;
}

SparsePoly reduce_by(const SparsePoly& f, const std::vector<SparsePoly>& divisors) {
  std::vector<const SparsePoly*> ptrs;
  for (const SparsePoly& d : divisors) {
    if (!d.is_zero()) ptrs.push_back(&d);
  }
  return ReduceByPointers(f, ptrs);
}

SparsePoly gb_reduce(const SparsePoly& f, const GroebnerBasis& basis) { return reduce_by(f, basis.polys); }

GroebnerBasis buchberger(const std::vector<SparsePoly>& generators, const MonomialOrder& order,
                         std::uint64_t pair_budget) {
  if (generators.empty()) throw Error(ErrorCode::kInvalidArgument, "no generators");
  for (const SparsePoly& g : generators) {
    if (g.characteristic() != generators[0].characteristic()) {
      throw Error(ErrorCode::kCharacteristicMismatch, "generators over different primes");
    }
    if (g.nvars() != generators[0].nvars()) throw Error(ErrorCode::kArityMismatch, "generators in different rings");
  }
  std::vector<SparsePoly> polys;
  std::vector<bool> active;
  std::vector<Pair> pairs;

  auto active_ptrs = [&]() {
    std::vector<const SparsePoly*> out;
    for (std::size_t i = 0; i < polys.size(); ++i) {
      if (active[i]) out.push_back(&polys[i]);
    }
    return out;
  };

  auto update = [&](std::size_t h) {
    const PackedMonomial lh = polys[h].leading().mono;
    std::vector<std::size_t> c;
    for (std::size_t g = 0; g < polys.size(); ++g) {
      if (active[g] && g != h) c.push_back(g);
    }
    std::vector<std::size_t> d;
    for (std::size_t idx = 0; idx < c.size(); ++idx) {
      const std::size_t g = c[idx];
      const PackedMonomial lg = polys[g].leading().mono;
      const PackedMonomial l = MonomialLcm(lg, lh);
      bool keep = MonomialsCoprime(lg, lh);
      if (!keep) {
        keep = true;
        for (std::size_t k = idx + 1; k < c.size() && keep; ++k) {
          if (MonomialDivides(MonomialLcm(polys[c[k]].leading().mono, lh), l)) keep = false;
        }
        for (std::size_t k = 0; k < d.size() && keep; ++k) {
          if (MonomialDivides(MonomialLcm(polys[d[k]].leading().mono, lh), l)) keep = false;
        }
      }
      if (keep) d.push_back(g);
    }
    std::vector<Pair> next;
    for (const Pair& pr : pairs) {
      const PackedMonomial li = MonomialLcm(polys[pr.i].leading().mono, lh);
      const PackedMonomial lj = MonomialLcm(polys[pr.j].leading().mono, lh);
      if (MonomialDivides(lh, pr.lcm) && li != pr.lcm && lj != pr.lcm) continue;
      next.push_back(pr);
    }
    for (std::size_t g : d) {
      const PackedMonomial lg = polys[g].leading().mono;
      if (MonomialsCoprime(lg, lh)) continue;
      next.push_back({g, h, MonomialLcm(lg, lh)});
    }
    pairs = std::move(next);
    for (std::size_t g = 0; g < polys.size(); ++g) {
      if (active[g] && g != h && MonomialDivides(lh, polys[g].leading().mono)) active[g] = false;
    }
    active[h] = true;
  };

  auto add = [&](SparsePoly h) {
    polys.push_back(h.monic());
    active.push_back(false);
    update(polys.size() - 1);
  };

  for (const SparsePoly& g : generators) {
    SparsePoly h = ReduceByPointers(g.with_order(order), active_ptrs());
    if (!h.is_zero()) add(std::move(h));
  }

  GroebnerBasis out;
  out.order = order;
  while (!pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < pairs.size(); ++i) {
      if (order.compare(pairs[i].lcm, pairs[best].lcm) < 0) best = i;
    }
    Pair pr = pairs[best];
    pairs.erase(pairs.begin() + static_cast<long>(best));
    if (++out.pairs_processed > pair_budget) {
      throw Error(ErrorCode::kBudgetExceeded,
                  "Buchberger pair budget of " + std::to_string(pair_budget) + " exhausted");
    }
    SparsePoly h = ReduceByPointers(s_polynomial(polys[pr.i], polys[pr.j]), active_ptrs());
    if (!h.is_zero()) add(std::move(h));
  }

  std::vector<SparsePoly> basis;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (active[i]) basis.push_back(polys[i]);
  }
  for (std::size_t i = 0; i < basis.size(); ++i) {
    std::vector<const SparsePoly*> others;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (j != i) others.push_back(&basis[j]);
    }
    basis[i] = ReduceByPointers(basis[i], others).monic();
  }
  std::sort(basis.begin(), basis.end(), [&order](const SparsePoly& a, const SparsePoly& b) {
    return order.compare(a.leading().mono, b.leading().mono) > 0;
  });
  out.polys = std::move(basis);
  return out;
}

}  // namespace hmds
