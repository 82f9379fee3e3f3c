// Copyright 2026 The Authors.
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

#include "matroidkit/greedy.h"

#include <algorithm>
#include <numeric>
#include <optional>

namespace matroidkit {

WeightFn WeightFn::FromNamed(const Carrier& carrier,
                             const std::map<std::string, Rational>& named) {
  std::vector<std::optional<Rational>> slots(carrier.size());
  for (const auto& [id, w] : named) slots[carrier.IndexOf(id)] = w;
  std::vector<Rational> weights;
  weights.reserve(carrier.size());
  for (Index i = 0; i < carrier.size(); ++i) {
    if (!slots[i]) throw InputError("no weight given for element '" + carrier.id(i) + "'");
    weights.push_back(*slots[i]);
  }
  return WeightFn(std::move(weights));
}

Rational WeightFn::Cost(const ElementSet& s) const {
  Rational total(0);
  s.ForEach([&](Index i) { total += weights_.at(i); });
  return total;
}

bool WeightFn::IsNonnegative() const {
  return std::all_of(weights_.begin(), weights_.end(),
                     [](const Rational& w) { return w >= 0; });
}

Order CanonicalOrder(std::size_t n) {
  Order order(n);
  std::iota(order.begin(), order.end(), Index{0});
  return order;
}

void ValidateOrder(std::size_t n, const Order& order) {
  if (order.size() != n) {
    throw InputError("order lists " + std::to_string(order.size()) +
                     " elements, carrier has " + std::to_string(n));
  }
  std::vector<bool> seen(n, false);
  for (Index e : order) {
    if (e >= n) throw InputError("order names an element outside the carrier");
    if (seen[e]) throw InputError("order lists an element twice");
    seen[e] = true;
  }
}

Order OrderFromNames(const Carrier& carrier, const std::vector<std::string>& names) {
  Order order;
  order.reserve(names.size());
  for (const std::string& name : names) order.push_back(carrier.IndexOf(name));
  ValidateOrder(carrier.size(), order);
  return order;
}

Order SortDesc(const WeightFn& cost, const Order& order) {
  ValidateOrder(cost.size(), order);
  Order sorted = order;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [&](Index a, Index b) { return cost[a] > cost[b]; });
  return sorted;
}

GreedyRun BestInGreedy(const OracleSystem& sys, const WeightFn& cost,
                       const Order& order, IndependenceQuery query) {
  if (cost.size() != sys.size()) {
    throw InputError("cost function does not cover the carrier");
  }
  if (!cost.IsNonnegative()) {
    throw InputError("Best-In-Greedy requires nonnegative costs");
  }
  if (query == IndependenceQuery::kWeakOracle && !sys.has_weak_oracle()) {
    throw ContractError("weak-oracle greedy requested on a system without one");
  }

  GreedyRun run{SortDesc(cost, order), ElementSet(sys.size()), {}};
  run.steps.reserve(run.sorted_order.size());
  for (Index e : run.sorted_order) {
    const bool accept = query == IndependenceQuery::kWeakOracle
                            ? sys.WeakIndependent(run.result, e)
                            : sys.IsIndependent(run.result.With(e));
    if (accept) run.result.insert(e);
    run.steps.push_back({e, accept});
  }
  if (query == IndependenceQuery::kWeakOracle && !sys.IsIndependent(run.result)) {
    throw ContractError("weak oracle accepted a set the independence oracle rejects");
  }
  return run;
}

TightnessWitness BuildTightnessWitness(const ExplicitSetSystem& sys) {
  const Rational q = RankQuotient(sys);
  const std::size_t n = sys.carrier_size();

  std::vector<std::uint32_t> supports;
  for (std::uint32_t f = 0; f <= sys.FullMask(); ++f) supports.push_back(f);
  std::sort(supports.begin(), supports.end(),
            [](std::uint32_t a, std::uint32_t b) { return CardinalityLexLess(a, b); });

  std::optional<std::uint32_t> chosen;
  for (std::uint32_t f : supports) {
    const RankPair rp = RankPairOf(sys, sys.SetOf(f));
    if (rp.upper == 0) continue;
    if (Frac(static_cast<std::int64_t>(rp.lower),
             static_cast<std::int64_t>(rp.upper)) == q) {
      chosen = f;
      break;
    }
  }

  TightnessWitness w;
  w.support = sys.SetOf(chosen.value_or(0));
  // Bases come back sorted by CardinalityLexLess, so the first of each size
  // is the lexicographically smallest one.
  const std::vector<ElementSet> bases = BasesOf(sys, w.support);
  w.small_basis = bases.front();
  w.x = bases.front();
  for (const ElementSet& b : bases) {
    if (b.size() > w.x.size()) w.x = b;
  }

  std::vector<Rational> cost(n, Rational(0));
  w.support.ForEach([&](Index e) { cost[e] = Rational(1); });
  w.cost = WeightFn(std::move(cost));

  const ElementSet rest = w.support - w.small_basis;
  const ElementSet outside = w.support.Complement();
  const ElementSet* const parts[] = {&w.small_basis, &rest, &outside};
  for (const ElementSet* part : parts) {
    part->ForEach([&](Index e) { w.order.push_back(e); });
  }
  return w;
}

}  // namespace matroidkit
