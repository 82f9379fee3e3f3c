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

// Concrete systems built on graphs:
//   - the graphic matroid (acyclic edge sets), solved by Kruskal;
//   - the arborescence greedoid around a root, solved by Prim;
//   - the two side-partition matroids of a bipartite graph, whose
//     intersection is maximum bipartite matching.
// Plus uniform and general partition matroids with weak and circuit oracles.
//
// Matroid elements are edge ids, so parallel edges are distinct elements
// and a self-loop is always dependent.

#ifndef MATROIDKIT_INSTANCES_H_
#define MATROIDKIT_INSTANCES_H_

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "matroidkit/core.h"
#include "matroidkit/greedy.h"

namespace matroidkit {

enum class Direction { kMax, kMin };

struct Edge {
  std::string id;
  std::string u;
  std::string v;
  Rational weight{1};
};

class UndirectedGraph {
 public:
  // Throws InputError on duplicate edge ids or endpoints not in `vertices`.
  UndirectedGraph(std::vector<std::string> vertices, std::vector<Edge> edges);

  const std::vector<std::string>& vertices() const { return vertices_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  const Carrier& edge_carrier() const { return edge_carrier_; }

  // Edge at carrier index e.
  const Edge& edge(Index e) const { return edges_.at(e); }
  // Vertex indices of e's endpoints.
  std::pair<Index, Index> Endpoints(Index e) const { return endpoints_.at(e); }
  std::optional<Index> FindVertex(std::string_view name) const;

  WeightFn Weights() const;
  Rational Weight(const ElementSet& edges) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::pair<Index, Index>> endpoints_;
  Carrier edge_carrier_;
};

bool IsAcyclic(const UndirectedGraph& g, const ElementSet& x);

// X + e acyclic, decided by a depth-first search over X for a path between
// e's endpoints. With checks on, throws ContractError if X is cyclic or
// already contains e.
bool GraphicWeakOracle(const UndirectedGraph& g, const ElementSet& x, Index e,
                       ContractChecks checks = ContractChecks::kOff);

// The edges of X on the cycle closed by e (the tree path between its
// endpoints). Throws ContractError if X + e is acyclic.
ElementSet GraphicCircuitOracle(const UndirectedGraph& g, const ElementSet& x, Index e);

OracleSystem GraphicMatroid(const UndirectedGraph& g);

// Acyclic and connecting every pair of vertices connected in g.
bool IsSpanningForest(const UndirectedGraph& g, const ElementSet& x);

// Best-In-Greedy on the graphic matroid with the weak oracle. For kMin the
// weights are replaced by (max weight - w). Throws InputError for negative
// weights under kMax and for orders that are not a permutation.
ElementSet Kruskal(const UndirectedGraph& g, Direction direction, const Order& order);
ElementSet Kruskal(const UndirectedGraph& g, Direction direction = Direction::kMax);

// X is empty, or X is an acyclic connected edge set touching root.
bool IsArborescence(const UndirectedGraph& g, Index root, const ElementSet& x);

// Whether X + e is still an arborescence around root: e has exactly one
// endpoint in the vertex set of X (just root when X is empty).
bool ArborescenceWeakOracle(const UndirectedGraph& g, std::string_view root,
                            const ElementSet& x, Index e);

OracleSystem ArborescenceGreedoid(const UndirectedGraph& g, std::string_view root);

// GreedoidGreedy on the arborescence greedoid: a spanning tree of root's
// component, optimal in the given direction. Linear candidate scans, no
// priority queue. Throws InputError if root is not a vertex.
ElementSet Prim(const UndirectedGraph& g, std::string_view root, Direction direction,
                const Order& order);
ElementSet Prim(const UndirectedGraph& g, std::string_view root,
                Direction direction = Direction::kMax);

struct BipartiteEdge {
  std::string id;
  std::string left;
  std::string right;
};

class BipartiteGraph {
 public:
  // Throws InputError if the sides overlap, an edge id repeats, or an edge
  // endpoint is not on its side.
  BipartiteGraph(std::vector<std::string> left, std::vector<std::string> right,
                 std::vector<BipartiteEdge> edges);

  const std::vector<std::string>& left() const { return left_; }
  const std::vector<std::string>& right() const { return right_; }
  const Carrier& edge_carrier() const { return edge_carrier_; }
  std::size_t num_edges() const { return edges_.size(); }
  const BipartiteEdge& edge(Index e) const { return edges_.at(e); }

 private:
  std::vector<std::string> left_;
  std::vector<std::string> right_;
  std::vector<BipartiteEdge> edges_;
  Carrier edge_carrier_;
};

enum class Side { kLeft, kRight };

const std::string& Endpoint(const BipartiteGraph& b, Side side, Index e);

// Left vertex -> matched edge and right vertex -> matched edge.
struct MatchingMaps {
  std::map<std::string, Index> left;
  std::map<std::string, Index> right;
};

// Throws ContractError if two edges of m share an endpoint on either side.
MatchingMaps BuildMatchingMaps(const BipartiteGraph& b, const ElementSet& m);

// No two edges of m share an endpoint on `side`.
bool IsSideIndependent(const BipartiteGraph& b, Side side, const ElementSet& m);
bool IsMatching(const BipartiteGraph& b, const ElementSet& m);

// e's endpoint on `side` is unmatched in m. The side map is rebuilt from m on
// every call.
bool MatchingWeakOracle(const BipartiteGraph& b, Side side, const ElementSet& m,
                        Index e, ContractChecks checks = ContractChecks::kOff);

// The single edge of m sharing e's endpoint on `side`. Throws ContractError
// if there is none.
ElementSet MatchingCircuitOracle(const BipartiteGraph& b, Side side,
                                 const ElementSet& m, Index e);

OracleSystem SideMatroid(const BipartiteGraph& b, Side side);

// Matroid intersection of the two side matroids with circuit oracles.
ElementSet MaxBipartiteMatching(const BipartiteGraph& b);

// Sets of at most `rank` elements.
OracleSystem UniformMatroid(const Carrier& carrier, std::size_t rank);

// block[e] names e's block; a set is independent when it holds at most
// capacity[k] elements of each block k.
OracleSystem PartitionMatroid(const Carrier& carrier, std::vector<std::size_t> block,
                              std::vector<std::size_t> capacity);

}  // namespace matroidkit

#endif  // MATROIDKIT_INSTANCES_H_
