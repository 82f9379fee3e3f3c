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

// Maximum-cardinality matroid intersection by repeated augmentation along
// shortest paths in the exchange graph.
//
// For a common independent set X the exchange graph has
//   sources S = { y outside X : X + y independent in the first matroid },
//   targets T = { y outside X : X + y independent in the second matroid },
//   arcs (x, y) when X - x + y is independent in the first matroid and
//   arcs (y, x) when X - x + y is independent in the second,
// for x in X and y outside X with X + y dependent in the respective matroid.
// A shortest S-T path y0 x1 y1 ... xs ys swaps in the y's and swaps out the
// x's, growing X by one. When no path exists, the set of vertices not
// reachable from S certifies optimality.

#ifndef MATROIDKIT_INTERSECT_H_
#define MATROIDKIT_INTERSECT_H_

#include <compare>
#include <optional>
#include <vector>

#include "matroidkit/core.h"

namespace matroidkit {

// Two matroids over the same carrier.
class DoubleMatroid {
 public:
  // Throws InputError if the carriers differ.
  DoubleMatroid(OracleSystem first, OracleSystem second);

  const Carrier& carrier() const { return first_.carrier(); }
  std::size_t size() const { return first_.size(); }
  const OracleSystem& first() const { return first_; }
  const OracleSystem& second() const { return second_; }

  bool IsCommonIndependent(const ElementSet& x) const {
    return first_.IsIndependent(x) && second_.IsIndependent(x);
  }

 private:
  OracleSystem first_;
  OracleSystem second_;
};

struct Arc {
  Index from;
  Index to;
  auto operator<=>(const Arc&) const = default;
};

struct ExchangeGraph {
  ElementSet x;
  ElementSet sources;
  ElementSet targets;
  // Sorted and duplicate-free.
  std::vector<Arc> arcs;
  bool operator==(const ExchangeGraph&) const = default;
};

enum class GraphConstruction {
  // Per matroid: circuit oracle when present, independence oracle otherwise.
  kAuto,
  // Test X - x + y for every x in X (weak oracle if available).
  kIndependenceOracle,
  // Read arcs off C(X, y) - {y}.
  kCircuitOracle,
};

// Throws ContractError if x is not independent in both matroids, or if a
// circuit oracle is requested but missing.
ExchangeGraph BuildExchangeGraph(const DoubleMatroid& dm, const ElementSet& x,
                                 GraphConstruction construction = GraphConstruction::kAuto);

using AugmentingPath = std::vector<Index>;

// A source-to-target path with the fewest vertices; the lexicographically
// smallest such path. A single vertex when S and T meet.
std::optional<AugmentingPath> FindAugmentingPath(const ExchangeGraph& g);

// (X + even-position vertices) - odd-position vertices. Throws ContractError
// on an even-length path or when the positions do not alternate out/in of X.
ElementSet Augment(const ElementSet& x, const AugmentingPath& path);

struct IntersectionOptions {
  GraphConstruction construction = GraphConstruction::kAuto;
  // Re-check common independence and the +1 cardinality step after every
  // augmentation.
  ContractChecks checks = ContractChecks::kOff;
};

struct IntersectionState {
  ElementSet sol;
  std::vector<AugmentingPath> history;
};

IntersectionState MatroidIntersection(const DoubleMatroid& dm,
                                      const IntersectionOptions& options = {});

// Vertices reachable from the sources, sources included.
ElementSet ReachableFromSources(const ExchangeGraph& g);

// r1(q) + r2(E - q), with ranks from GreedyRank.
std::size_t CertificateValue(const DoubleMatroid& dm, const ElementSet& q);

// Q = E - R for R the vertices reachable from S in the exchange graph of x.
// Throws ContractError if an augmenting path exists or if the rank sum of Q
// differs from |x|.
ElementSet OptimalityCertificate(const DoubleMatroid& dm, const ElementSet& x);

// Brute-force max |X| over common independent sets equals brute-force
// min r1(Q) + r2(E - Q). Carrier limited to 12 elements.
bool VerifyMinMax(const DoubleMatroid& dm);

}  // namespace matroidkit

#endif  // MATROIDKIT_INTERSECT_H_
