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

#include "matroidkit/instances.h"

#include <algorithm>
#include <deque>
#include <set>

#include <boost/pending/disjoint_sets.hpp>

#include "matroidkit/greedoid.h"
#include "matroidkit/intersect.h"

namespace matroidkit {
namespace {

std::vector<std::string> EdgeIds(const std::vector<Edge>& edges) {
  std::vector<std::string> ids;
  ids.reserve(edges.size());
  for (const Edge& e : edges) ids.push_back(e.id);
  return ids;
}

std::vector<std::string> EdgeIds(const std::vector<BipartiteEdge>& edges) {
  std::vector<std::string> ids;
  ids.reserve(edges.size());
  for (const BipartiteEdge& e : edges) ids.push_back(e.id);
  return ids;
}

// Reorders `edges` so that edges[i] has carrier index i.
template <typename E>
std::vector<E> InCarrierOrder(const Carrier& carrier, std::vector<E> edges) {
  std::vector<E> out(edges.size());
  for (E& e : edges) {
    const Index i = carrier.IndexOf(e.id);
    out[i] = std::move(e);
  }
  return out;
}

std::vector<std::string> SortedUnique(std::vector<std::string> names, const char* what) {
  std::sort(names.begin(), names.end());
  const auto dup = std::adjacent_find(names.begin(), names.end());
  if (dup != names.end()) throw InputError(std::string("duplicate ") + what + " " + *dup);
  return names;
}

class Forest {
 public:
  explicit Forest(std::size_t n) : rank_(n), parent_(n), sets_(rank_.data(), parent_.data()) {
    for (std::size_t v = 0; v < n; ++v) sets_.make_set(v);
  }
  std::size_t Find(std::size_t v) { return sets_.find_set(v); }
  // False when u and v were already connected.
  bool Union(std::size_t u, std::size_t v) {
    if (Find(u) == Find(v)) return false;
    sets_.union_set(u, v);
    return true;
  }

 private:
  std::vector<std::size_t> rank_;
  std::vector<std::size_t> parent_;
  boost::disjoint_sets<std::size_t*, std::size_t*> sets_;
};

// Adjacency over the edges of x: vertex -> (neighbour, edge index).
std::vector<std::vector<std::pair<Index, Index>>> AdjacencyOf(const UndirectedGraph& g,
                                                              const ElementSet& x) {
  std::vector<std::vector<std::pair<Index, Index>>> adj(g.num_vertices());
  x.ForEach([&](Index e) {
    const auto [u, v] = g.Endpoints(e);
    adj[u].emplace_back(v, e);
    if (u != v) adj[v].emplace_back(u, e);
  });
  return adj;
}

// Edge sequence of some path from `from` to `to` inside x, if one exists.
std::optional<std::vector<Index>> PathIn(const UndirectedGraph& g, const ElementSet& x,
                                         Index from, Index to) {
  const auto adj = AdjacencyOf(g, x);
  constexpr Index kNone = static_cast<Index>(-1);
  std::vector<Index> via(g.num_vertices(), kNone);
  std::vector<bool> seen(g.num_vertices(), false);
  std::vector<Index> stack{from};
  seen[from] = true;
  while (!stack.empty()) {
    const Index u = stack.back();
    stack.pop_back();
    if (u == to) break;
    for (const auto& [w, e] : adj[u]) {
      if (seen[w]) continue;
      seen[w] = true;
      via[w] = e;
      stack.push_back(w);
    }
  }
  if (!seen[to]) return std::nullopt;
  std::vector<Index> path;
  for (Index v = to; v != from;) {
    const Index e = via[v];
    path.push_back(e);
    const auto [a, b] = g.Endpoints(e);
    v = a == v ? b : a;
  }
  return path;
}

Index RootIndex(const UndirectedGraph& g, std::string_view root) {
  const std::optional<Index> r = g.FindVertex(root);
  if (!r) throw InputError("root " + std::string(root) + " is not a vertex");
  return *r;
}

std::vector<bool> TouchedVertices(const UndirectedGraph& g, const ElementSet& x) {
  std::vector<bool> touched(g.num_vertices(), false);
  x.ForEach([&](Index e) {
    const auto [u, v] = g.Endpoints(e);
    touched[u] = touched[v] = true;
  });
  return touched;
}

WeightFn DirectedWeights(const UndirectedGraph& g, Direction direction) {
  WeightFn w = g.Weights();
  if (direction == Direction::kMax || w.size() == 0) return w;
  const Rational w_max = *std::max_element(w.values().begin(), w.values().end());
  std::vector<Rational> flipped;
  flipped.reserve(w.size());
  for (const Rational& x : w.values()) flipped.push_back(w_max - x);
  return WeightFn(std::move(flipped));
}

}  // namespace

UndirectedGraph::UndirectedGraph(std::vector<std::string> vertices, std::vector<Edge> edges)
    : vertices_(SortedUnique(std::move(vertices), "vertex")),
      edge_carrier_(EdgeIds(edges)) {
  edges_ = InCarrierOrder(edge_carrier_, std::move(edges));
  endpoints_.reserve(edges_.size());
  for (const Edge& e : edges_) {
    const auto u = FindVertex(e.u);
    const auto v = FindVertex(e.v);
    if (!u || !v) throw InputError("edge " + e.id + " has an endpoint that is not a vertex");
    endpoints_.emplace_back(*u, *v);
  }
}

std::optional<Index> UndirectedGraph::FindVertex(std::string_view name) const {
  const auto it = std::lower_bound(vertices_.begin(), vertices_.end(), name);
  if (it == vertices_.end() || *it != name) return std::nullopt;
  return static_cast<Index>(it - vertices_.begin());
}

WeightFn UndirectedGraph::Weights() const {
  std::vector<Rational> w;
  w.reserve(edges_.size());
  for (const Edge& e : edges_) w.push_back(e.weight);
  return WeightFn(std::move(w));
}

Rational UndirectedGraph::Weight(const ElementSet& edges) const {
  Rational total = 0;
  edges.ForEach([&](Index e) { total += edges_[e].weight; });
  return total;
}

bool IsAcyclic(const UndirectedGraph& g, const ElementSet& x) {
  Forest forest(g.num_vertices());
  bool acyclic = true;
  x.ForEach([&](Index e) {
    const auto [u, v] = g.Endpoints(e);
    if (!forest.Union(u, v)) acyclic = false;
  });
  return acyclic;
}

bool GraphicWeakOracle(const UndirectedGraph& g, const ElementSet& x, Index e,
                       ContractChecks checks) {
  if (checks == ContractChecks::kOn) {
    if (x.contains(e)) throw ContractError("weak oracle called with e already in X");
    if (!IsAcyclic(g, x)) throw ContractError("weak oracle called with a cyclic X");
  }
  const auto [u, v] = g.Endpoints(e);
  if (u == v) return false;
  return !PathIn(g, x, u, v).has_value();
}

ElementSet GraphicCircuitOracle(const UndirectedGraph& g, const ElementSet& x, Index e) {
  ElementSet circuit(g.num_edges());
  const auto [u, v] = g.Endpoints(e);
  if (u == v) return circuit;
  const auto path = PathIn(g, x, u, v);
  if (!path) throw ContractError("circuit oracle called with X + e acyclic");
  for (Index edge : *path) circuit.insert(edge);
  return circuit;
}

OracleSystem GraphicMatroid(const UndirectedGraph& g) {
  return OracleSystem(
      g.edge_carrier(), [g](const ElementSet& x) { return IsAcyclic(g, x); },
      [g](const ElementSet& x, Index e) { return GraphicWeakOracle(g, x, e); },
      [g](const ElementSet& x, Index e) { return GraphicCircuitOracle(g, x, e); });
}

bool IsSpanningForest(const UndirectedGraph& g, const ElementSet& x) {
  if (!IsAcyclic(g, x)) return false;
  Forest within_x(g.num_vertices());
  x.ForEach([&](Index e) {
    const auto [u, v] = g.Endpoints(e);
    within_x.Union(u, v);
  });
  for (Index e = 0; e < g.num_edges(); ++e) {
    const auto [u, v] = g.Endpoints(e);
    if (within_x.Find(u) != within_x.Find(v)) return false;
  }
  return true;
}

ElementSet Kruskal(const UndirectedGraph& g, Direction direction, const Order& order) {
  ValidateOrder(g.num_edges(), order);
  const WeightFn w = DirectedWeights(g, direction);
  return BestInGreedy(GraphicMatroid(g), w, order, IndependenceQuery::kWeakOracle).result;
}

ElementSet Kruskal(const UndirectedGraph& g, Direction direction) {
  return Kruskal(g, direction, CanonicalOrder(g.num_edges()));
}

bool IsArborescence(const UndirectedGraph& g, Index root, const ElementSet& x) {
  if (x.empty()) return true;
  if (!IsAcyclic(g, x)) return false;
  const std::vector<bool> touched = TouchedVertices(g, x);
  if (!touched[root]) return false;
  Forest forest(g.num_vertices());
  x.ForEach([&](Index e) {
    const auto [u, v] = g.Endpoints(e);
    forest.Union(u, v);
  });
  for (Index v = 0; v < g.num_vertices(); ++v) {
    if (touched[v] && forest.Find(v) != forest.Find(root)) return false;
  }
  return true;
}

bool ArborescenceWeakOracle(const UndirectedGraph& g, std::string_view root,
                            const ElementSet& x, Index e) {
  const Index r = RootIndex(g, root);
  std::vector<bool> tree = TouchedVertices(g, x);
  tree[r] = true;
  const auto [u, v] = g.Endpoints(e);
  return tree[u] != tree[v];
}

OracleSystem ArborescenceGreedoid(const UndirectedGraph& g, std::string_view root) {
  const Index r = RootIndex(g, root);
  const std::string name(root);
  return OracleSystem(
      g.edge_carrier(), [g, r](const ElementSet& x) { return IsArborescence(g, r, x); },
      [g, name](const ElementSet& x, Index e) {
        return ArborescenceWeakOracle(g, name, x, e);
      });
}

ElementSet Prim(const UndirectedGraph& g, std::string_view root, Direction direction,
                const Order& order) {
  const OracleSystem greedoid = ArborescenceGreedoid(g, root);
  return GreedoidGreedy(greedoid, DirectedWeights(g, direction), order);
}

ElementSet Prim(const UndirectedGraph& g, std::string_view root, Direction direction) {
  return Prim(g, root, direction, CanonicalOrder(g.num_edges()));
}

BipartiteGraph::BipartiteGraph(std::vector<std::string> left, std::vector<std::string> right,
                               std::vector<BipartiteEdge> edges)
    : left_(SortedUnique(std::move(left), "left vertex")),
      right_(SortedUnique(std::move(right), "right vertex")),
      edge_carrier_(EdgeIds(edges)) {
  for (const std::string& v : left_) {
    if (std::binary_search(right_.begin(), right_.end(), v)) {
      throw InputError("vertex " + v + " is on both sides");
    }
  }
  edges_ = InCarrierOrder(edge_carrier_, std::move(edges));
  for (const BipartiteEdge& e : edges_) {
    if (!std::binary_search(left_.begin(), left_.end(), e.left)) {
      throw InputError("edge " + e.id + ": " + e.left + " is not a left vertex");
    }
    if (!std::binary_search(right_.begin(), right_.end(), e.right)) {
      throw InputError("edge " + e.id + ": " + e.right + " is not a right vertex");
    }
  }
}

const std::string& Endpoint(const BipartiteGraph& b, Side side, Index e) {
  return side == Side::kLeft ? b.edge(e).left : b.edge(e).right;
}

MatchingMaps BuildMatchingMaps(const BipartiteGraph& b, const ElementSet& m) {
  MatchingMaps maps;
  m.ForEach([&](Index e) {
    if (!maps.left.emplace(b.edge(e).left, e).second ||
        !maps.right.emplace(b.edge(e).right, e).second) {
      throw ContractError(b.edge_carrier().Format(m) + " is not a matching");
    }
  });
  return maps;
}

bool IsSideIndependent(const BipartiteGraph& b, Side side, const ElementSet& m) {
  std::set<std::string_view> used;
  bool ok = true;
  m.ForEach([&](Index e) {
    if (!used.insert(Endpoint(b, side, e)).second) ok = false;
  });
  return ok;
}

bool IsMatching(const BipartiteGraph& b, const ElementSet& m) {
  return IsSideIndependent(b, Side::kLeft, m) && IsSideIndependent(b, Side::kRight, m);
}

namespace {

// Vertex on `side` -> the edge of m covering it.
std::map<std::string, Index> SideMap(const BipartiteGraph& b, Side side, const ElementSet& m,
                                     ContractChecks checks) {
  std::map<std::string, Index> map;
  m.ForEach([&](Index e) {
    if (!map.emplace(Endpoint(b, side, e), e).second && checks == ContractChecks::kOn) {
      throw ContractError("matching oracle called with a dependent M");
    }
  });
  return map;
}

}  // namespace

bool MatchingWeakOracle(const BipartiteGraph& b, Side side, const ElementSet& m, Index e,
                        ContractChecks checks) {
  if (checks == ContractChecks::kOn && m.contains(e)) {
    throw ContractError("matching oracle called with e already in M");
  }
  return !SideMap(b, side, m, checks).contains(Endpoint(b, side, e));
}

ElementSet MatchingCircuitOracle(const BipartiteGraph& b, Side side, const ElementSet& m,
                                 Index e) {
  const auto map = SideMap(b, side, m, ContractChecks::kOff);
  const auto it = map.find(Endpoint(b, side, e));
  if (it == map.end() || it->second == e) {
    throw ContractError("circuit oracle called with M + e independent");
  }
  return ElementSet::Of(b.num_edges(), {it->second});
}

OracleSystem SideMatroid(const BipartiteGraph& b, Side side) {
  return OracleSystem(
      b.edge_carrier(),
      [b, side](const ElementSet& m) { return IsSideIndependent(b, side, m); },
      [b, side](const ElementSet& m, Index e) { return MatchingWeakOracle(b, side, m, e); },
      [b, side](const ElementSet& m, Index e) { return MatchingCircuitOracle(b, side, m, e); });
}

ElementSet MaxBipartiteMatching(const BipartiteGraph& b) {
  const DoubleMatroid dm(SideMatroid(b, Side::kLeft), SideMatroid(b, Side::kRight));
  return MatroidIntersection(dm, {GraphConstruction::kCircuitOracle, ContractChecks::kOff}).sol;
}

OracleSystem UniformMatroid(const Carrier& carrier, std::size_t rank) {
  return OracleSystem(
      carrier, [rank](const ElementSet& x) { return x.size() <= rank; },
      [rank](const ElementSet& x, Index) { return x.size() + 1 <= rank; },
      [rank](const ElementSet& x, Index) {
        if (x.size() < rank) throw ContractError("circuit oracle called with X + y independent");
        return x;
      });
}

OracleSystem PartitionMatroid(const Carrier& carrier, std::vector<std::size_t> block,
                              std::vector<std::size_t> capacity) {
  if (block.size() != carrier.size()) {
    throw InputError("partition must assign a block to every element");
  }
  for (std::size_t k : block) {
    if (k >= capacity.size()) throw InputError("block without a capacity");
  }
  auto count_in = [block](const ElementSet& x, std::size_t k) {
    std::size_t n = 0;
    x.ForEach([&](Index e) { n += block[e] == k; });
    return n;
  };
  auto indep = [block, capacity, count_in](const ElementSet& x) {
    for (std::size_t k = 0; k < capacity.size(); ++k) {
      if (count_in(x, k) > capacity[k]) return false;
    }
    return true;
  };
  auto weak = [block, capacity, count_in](const ElementSet& x, Index e) {
    return count_in(x, block[e]) < capacity[block[e]];
  };
  auto circuit = [block, capacity, count_in](const ElementSet& x, Index y) {
    if (count_in(x, block[y]) < capacity[block[y]]) {
      throw ContractError("circuit oracle called with X + y independent");
    }
    ElementSet same(x.universe());
    x.ForEach([&](Index e) {
      if (block[e] == block[y]) same.insert(e);
    });
    return same;
  };
  return OracleSystem(carrier, indep, weak, circuit);
}

}  // namespace matroidkit
