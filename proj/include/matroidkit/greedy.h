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

// Best-In-Greedy over independence systems: sort the carrier by
// non-increasing cost (stably), then keep every element that leaves the
// current result independent.

#ifndef MATROIDKIT_GREEDY_H_
#define MATROIDKIT_GREEDY_H_

#include <map>
#include <string>
#include <vector>

#include "matroidkit/core.h"

namespace matroidkit {

// Per-element rational weights indexed by carrier position. The induced set
// cost is the sum over members.
class WeightFn {
 public:
  WeightFn() = default;
  explicit WeightFn(std::vector<Rational> weights) : weights_(std::move(weights)) {}

  // Throws InputError when an element is unknown or has no weight.
  static WeightFn FromNamed(const Carrier& carrier,
                            const std::map<std::string, Rational>& named);
  static WeightFn Constant(std::size_t n, Rational value) {
    return WeightFn(std::vector<Rational>(n, value));
  }

  std::size_t size() const { return weights_.size(); }
  const Rational& operator[](Index i) const { return weights_.at(i); }
  const std::vector<Rational>& values() const { return weights_; }

  Rational Cost(const ElementSet& s) const;
  bool IsNonnegative() const;

  bool operator==(const WeightFn&) const = default;

 private:
  std::vector<Rational> weights_;
};

// A sequence listing each carrier element exactly once.
using Order = std::vector<Index>;

Order CanonicalOrder(std::size_t n);
// Throws InputError on duplicates, missing or out-of-range elements.
void ValidateOrder(std::size_t n, const Order& order);
Order OrderFromNames(const Carrier& carrier, const std::vector<std::string>& names);

// Stable sort by non-increasing cost.
Order SortDesc(const WeightFn& cost, const Order& order);

struct GreedyStep {
  Index element;
  bool accepted;
  bool operator==(const GreedyStep&) const = default;
};

struct GreedyRun {
  Order sorted_order;
  ElementSet result;
  std::vector<GreedyStep> steps;
};

enum class IndependenceQuery {
  kFullOracle,  // test result + e with the independence oracle
  kWeakOracle,  // ask the weak oracle about (result, e)
};

// Throws InputError for negative costs or an invalid order, ContractError if
// the weak oracle is requested but missing or the final result is reported
// dependent by the full oracle.
GreedyRun BestInGreedy(const OracleSystem& sys, const WeightFn& cost,
                       const Order& order,
                       IndependenceQuery query = IndependenceQuery::kFullOracle);

// Cost function, order and comparison set on which greedy meets the
// rank-quotient bound with equality. The cost is 1 on `support` and 0
// elsewhere; `order` lists `small_basis` first so the stable sort puts it at
// the front; `x` is a largest basis of `support`.
struct TightnessWitness {
  WeightFn cost;
  Order order;
  ElementSet x;
  ElementSet support;
  ElementSet small_basis;
};

// Picks the first support set in CardinalityLexLess order attaining the rank
// quotient among those with nonzero rank; the empty support is used only when
// every set has rank 0. The bases are the first smallest and first largest
// in the same order. Requires an independence system.
TightnessWitness BuildTightnessWitness(const ExplicitSetSystem& sys);

}  // namespace matroidkit

#endif  // MATROIDKIT_GREEDY_H_
