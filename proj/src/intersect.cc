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

#include "matroidkit/intersect.h"

#include <algorithm>
#include <deque>
#include <limits>

#include "matroidkit/bruteforce.h"

namespace matroidkit {

DoubleMatroid::DoubleMatroid(OracleSystem first, OracleSystem second)
    : first_(std::move(first)), second_(std::move(second)) {
  if (!(first_.carrier() == second_.carrier())) {
    throw InputError("the two matroids must share one carrier");
  }
}

namespace {

bool UseCircuits(const OracleSystem& m, GraphConstruction construction) {
  switch (construction) {
    case GraphConstruction::kAuto:
      return m.has_circuit_oracle();
    case GraphConstruction::kIndependenceOracle:
      return false;
    case GraphConstruction::kCircuitOracle:
      if (!m.has_circuit_oracle()) {
        throw ContractError("circuit-oracle construction needs circuit oracles");
      }
      return true;
  }
  return false;
}

// Elements x of X such that X - x + y is independent in m, for X + y dependent.
std::vector<Index> SwapPartners(const OracleSystem& m, bool use_circuit,
                                const ElementSet& x, Index y) {
  std::vector<Index> partners;
  if (use_circuit) {
    const ElementSet circuit = m.CircuitWithout(x, y);
    if (!circuit.IsSubsetOf(x)) {
      throw ContractError("circuit oracle returned elements outside X");
    }
    circuit.ForEach([&](Index c) { partners.push_back(c); });
  } else {
    x.ForEach([&](Index c) {
      if (m.CanExtend(x.Without(c), y)) partners.push_back(c);
    });
  }
  return partners;
}

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

std::vector<std::vector<Index>> Adjacency(const ExchangeGraph& g) {
  std::vector<std::vector<Index>> adj(g.x.universe());
  // Arcs are sorted, so every adjacency list comes out ascending.
  for (const Arc& a : g.arcs) adj[a.from].push_back(a.to);
  return adj;
}

std::vector<std::size_t> BfsLayers(const ExchangeGraph& g,
                                   const std::vector<std::vector<Index>>& adj) {
  std::vector<std::size_t> dist(g.x.universe(), kUnreached);
  std::deque<Index> queue;
  g.sources.ForEach([&](Index s) {
    dist[s] = 0;
    queue.push_back(s);
  });
  while (!queue.empty()) {
    const Index v = queue.front();
    queue.pop_front();
    for (Index w : adj[v]) {
      if (dist[w] != kUnreached) continue;
      dist[w] = dist[v] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

}  // namespace

ExchangeGraph BuildExchangeGraph(const DoubleMatroid& dm, const ElementSet& x,
                                 GraphConstruction construction) {
  const std::size_t n = dm.size();
  if (x.universe() != n) throw ContractError("X is not a subset of the carrier");
  if (!dm.IsCommonIndependent(x)) {
    throw ContractError("exchange graph requires X independent in both matroids");
  }
  const bool circuits1 = UseCircuits(dm.first(), construction);
  const bool circuits2 = UseCircuits(dm.second(), construction);

  ExchangeGraph g{x, ElementSet(n), ElementSet(n), {}};
  for (Index y = 0; y < n; ++y) {
    if (x.contains(y)) continue;
    if (dm.first().CanExtend(x, y)) {
      g.sources.insert(y);
    } else {
      for (Index c : SwapPartners(dm.first(), circuits1, x, y)) g.arcs.push_back({c, y});
    }
    if (dm.second().CanExtend(x, y)) {
      g.targets.insert(y);
    } else {
      for (Index c : SwapPartners(dm.second(), circuits2, x, y)) g.arcs.push_back({y, c});
    }
  }
  std::sort(g.arcs.begin(), g.arcs.end());
  g.arcs.erase(std::unique(g.arcs.begin(), g.arcs.end()), g.arcs.end());
  return g;
}

std::optional<AugmentingPath> FindAugmentingPath(const ExchangeGraph& g) {
  const ElementSet both = g.sources & g.targets;
  if (!both.empty()) return AugmentingPath{both.Members().front()};

  const auto adj = Adjacency(g);
  const std::vector<std::size_t> dist = BfsLayers(g, adj);
  std::size_t shortest = kUnreached;
  g.targets.ForEach([&](Index t) { shortest = std::min(shortest, dist[t]); });
  if (shortest == kUnreached) return std::nullopt;

  // DFS through consecutive BFS layers in ascending vertex order. The first
  // path reaching a target in the last layer is the lexicographically
  // smallest shortest path.
  std::vector<bool> dead(g.x.universe(), false);
  AugmentingPath path;
  auto descend = [&](auto& self, Index v) -> bool {
    if (dist[v] == shortest) return g.targets.contains(v);
    for (Index w : adj[v]) {
      if (dist[w] != dist[v] + 1 || dead[w]) continue;
      path.push_back(w);
      if (self(self, w)) return true;
      path.pop_back();
    }
    dead[v] = true;
    return false;
  };
  for (Index s : g.sources.Members()) {
    path.assign(1, s);
    if (descend(descend, s)) return path;
  }
  return std::nullopt;
}

ElementSet Augment(const ElementSet& x, const AugmentingPath& path) {
  if (path.size() % 2 == 0) {
    throw ContractError("augmenting path must have an odd number of vertices");
  }
  ElementSet out = x;
  for (std::size_t i = 0; i < path.size(); ++i) {
    const Index v = path[i];
    if (v >= x.universe()) throw ContractError("path vertex outside the carrier");
    const bool outside = i % 2 == 0;
    if (outside == x.contains(v)) {
      throw ContractError(outside ? "even path position must lie outside X"
                                  : "odd path position must lie inside X");
    }
    if (outside) {
      out.insert(v);
    } else {
      out.erase(v);
    }
  }
  if (out.size() != x.size() + 1) {
    throw ContractError("augmenting path repeats a vertex");
  }
  return out;
}

IntersectionState MatroidIntersection(const DoubleMatroid& dm,
                                      const IntersectionOptions& options) {
  IntersectionState state{ElementSet(dm.size()), {}};
  while (true) {
    const ExchangeGraph g = BuildExchangeGraph(dm, state.sol, options.construction);
    std::optional<AugmentingPath> path = FindAugmentingPath(g);
    if (!path) return state;
    ElementSet next = Augment(state.sol, *path);
    if (options.checks == ContractChecks::kOn) {
      if (!dm.IsCommonIndependent(next)) {
        throw ContractError(
            "independence invariant violated: augmented set " +
            dm.carrier().Format(next) + " is dependent in one of the matroids");
      }
      if (next.size() != state.sol.size() + 1) {
        throw ContractError("cardinality invariant violated: augmentation must add one element");
      }
    }
    state.sol = std::move(next);
    state.history.push_back(std::move(*path));
  }
}

ElementSet ReachableFromSources(const ExchangeGraph& g) {
  const std::vector<std::size_t> dist = BfsLayers(g, Adjacency(g));
  ElementSet reached(g.x.universe());
  for (Index v = 0; v < dist.size(); ++v) {
    if (dist[v] != kUnreached) reached.insert(v);
  }
  return reached;
}

std::size_t CertificateValue(const DoubleMatroid& dm, const ElementSet& q) {
  return GreedyRank(dm.first(), q) + GreedyRank(dm.second(), q.Complement());
}

ElementSet OptimalityCertificate(const DoubleMatroid& dm, const ElementSet& x) {
  const ExchangeGraph g = BuildExchangeGraph(dm, x);
  if (FindAugmentingPath(g)) {
    throw ContractError("an augmenting path exists, so X is not maximum");
  }
  const ElementSet q = ReachableFromSources(g).Complement();
  const std::size_t value = CertificateValue(dm, q);
  if (value != x.size()) {
    throw ContractError("certificate rank sum " + std::to_string(value) +
                        " differs from |X| = " + std::to_string(x.size()));
  }
  return q;
}

bool VerifyMinMax(const DoubleMatroid& dm) {
  return BruteMaxCommonIndependent(dm).second == BruteMinRankSum(dm).second;
}

}  // namespace matroidkit
