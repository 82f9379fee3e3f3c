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

// Exhaustive reference implementations. Everything here is exponential and
// meant for small carriers in tests. Ties are broken by CardinalityLexLess.

#ifndef MATROIDKIT_BRUTEFORCE_H_
#define MATROIDKIT_BRUTEFORCE_H_

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "matroidkit/core.h"
#include "matroidkit/greedy.h"
#include "matroidkit/instances.h"
#include "matroidkit/intersect.h"

namespace matroidkit {

enum class SystemClass {
  kAll,  // every family containing the empty set
  kIndependenceSystems,
  kMatroids,
  kGreedoids,
  kAntimatroids,
};

struct EnumerationConfig {
  std::size_t n = 0;
  SystemClass filter = SystemClass::kAll;
};

// Largest n accepted for each filter.
std::size_t MaxEnumerationSize(SystemClass filter);

// Calls `visit` once per family over the carrier {a, b, ...} of size n that
// passes the filter, in a fixed order. Downward-closed classes are generated
// directly by a pruned search; the others scan all families containing the
// empty set. Throws InputError when n exceeds MaxEnumerationSize(filter).
void EnumerateSystems(const EnumerationConfig& config,
                      const std::function<void(const ExplicitSetSystem&)>& visit);
std::vector<ExplicitSetSystem> CollectSystems(const EnumerationConfig& config);

// The carrier used by EnumerateSystems: the first n lowercase letters.
Carrier LetterCarrier(std::size_t n);

struct WeightedSet {
  ElementSet set;
  Rational value;
};

// Heaviest member of the family.
WeightedSet BruteMaxWeightIndependent(const ExplicitSetSystem& sys, const WeightFn& cost);
// Heaviest inclusion-maximal member of the family.
WeightedSet BruteMaxWeightBasis(const ExplicitSetSystem& sys, const WeightFn& cost);

// Largest set independent in both matroids. Throws InputError above 12 elements.
std::pair<ElementSet, std::size_t> BruteMaxCommonIndependent(const DoubleMatroid& dm);
// Q minimising r1(Q) + r2(E - Q) with GreedyRank. Throws InputError above 12
// elements.
std::pair<ElementSet, std::size_t> BruteMinRankSum(const DoubleMatroid& dm);

// The rank quotient straight from its definition: for every X, every member
// of the family inside X that no larger member inside X contains is a basis.
// Throws ContractError unless sys is an independence system, InputError above
// 12 elements.
Rational BruteRankQuotient(const ExplicitSetSystem& sys);

struct GreedoidCounterexample {
  Order order;
  WeightFn cost;
  ElementSet greedy;
  Rational optimum;
};

// Scans all orders and all weight functions into {0, ..., max_weight} for a
// case where GreedoidGreedy misses the heaviest basis. Orders vary slowest.
std::optional<GreedoidCounterexample> FindGreedoidCounterexample(const ExplicitSetSystem& sys,
                                                                 int max_weight = 3);

// Optimal total weight over all spanning forests.
Rational BruteOptimalSpanningForestWeight(const UndirectedGraph& g, Direction direction);
// Optimal total weight over all spanning trees of root's component.
Rational BruteOptimalSpanningTreeWeight(const UndirectedGraph& g, std::string_view root,
                                        Direction direction);
// True when x is a spanning tree of root's component (empty if root is isolated).
bool IsSpanningTreeOfRootComponent(const UndirectedGraph& g, std::string_view root,
                                   const ElementSet& x);
std::size_t BruteMaxMatchingSize(const BipartiteGraph& b);

}  // namespace matroidkit

#endif  // MATROIDKIT_BRUTEFORCE_H_
