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
#include <vector>

#include "gtest/gtest.h"
#include "matroidkit/bruteforce.h"
#include "matroidkit/greedoid.h"
#include "testing/generators.h"
#include "testing/reference.h"

namespace matroidkit {
namespace {

using testing::Mask;
using testing::Q;

UndirectedGraph WeightedTriangle() {
  return UndirectedGraph({"u", "v", "w"}, {{"uv", "u", "v", Rational(3)},
                                           {"vw", "v", "w", Rational(2)},
                                           {"wu", "w", "u", Rational(1)}});
}

UndirectedGraph RootedTriangle() {
  return UndirectedGraph({"a", "b", "r"}, {{"ra", "r", "a", Rational(3)},
                                           {"rb", "r", "b", Rational(2)},
                                           {"ab", "a", "b", Rational(1)}});
}

BipartiteGraph WorkedBipartite() {
  return BipartiteGraph({"l1", "l2"}, {"r1", "r2"},
                        {{"l1r1", "l1", "r1"}, {"l1r2", "l1", "r2"}, {"l2r1", "l2", "r1"}});
}

TEST(UndirectedGraphTest, Validation) {
  EXPECT_THROW(UndirectedGraph({"u"}, {{"e", "u", "x"}}), InputError);
  EXPECT_THROW(UndirectedGraph({"u", "v"}, {{"e", "u", "v"}, {"e", "v", "u"}}), InputError);
  EXPECT_THROW(UndirectedGraph({"u", "u"}, {}), InputError);
  const UndirectedGraph g({"v", "u"}, {{"z", "u", "v"}, {"a", "v", "v"}});
  EXPECT_EQ(g.edge(0).id, "a");
  EXPECT_EQ(g.Endpoints(1), (std::pair<Index, Index>{0, 1}));
}

TEST(GraphicWeakOracleTest, Examples) {
  const UndirectedGraph g = WeightedTriangle();
  const Carrier& c = g.edge_carrier();
  EXPECT_FALSE(GraphicWeakOracle(g, c.Subset({"uv", "vw"}), c.IndexOf("wu")));
  for (Index e = 0; e < 3; ++e) EXPECT_TRUE(GraphicWeakOracle(g, c.EmptySet(), e));
  const UndirectedGraph loop({"u"}, {{"l", "u", "u"}});
  EXPECT_FALSE(GraphicWeakOracle(loop, ElementSet(1), 0));
  EXPECT_FALSE(IsAcyclic(loop, ElementSet::Full(1)));
}

TEST(GraphicWeakOracleTest, ChecksContract) {
  const UndirectedGraph g = WeightedTriangle();
  EXPECT_THROW(GraphicWeakOracle(g, ElementSet::Full(3), 0, ContractChecks::kOn),
               ContractError);
  EXPECT_THROW(GraphicWeakOracle(g, ElementSet::Of(3, {0}), 0, ContractChecks::kOn),
               ContractError);
}

TEST(GraphicMatroidTest, ParallelEdgesFormACircuit) {
  const UndirectedGraph g({"u", "v"}, {{"p", "u", "v"}, {"q", "u", "v"}});
  const ExplicitSetSystem sys = ExplicitSetSystem::FromOracle(GraphicMatroid(g));
  EXPECT_EQ(CircuitsOf(sys), (std::vector<ElementSet>{ElementSet::Full(2)}));
  EXPECT_EQ(GraphicCircuitOracle(g, ElementSet::Of(2, {0}), 1), ElementSet::Of(2, {0}));
}

TEST(GraphicMatroidTest, OraclesAgreeAndFamilyIsAMatroid) {
  testing::Rng rng(3);
  for (int round = 0; round < 150; ++round) {
    const int vertices = testing::Uniform(rng, 1, 4);
    const auto gen = testing::RandomGraph(rng, vertices, testing::Uniform(rng, 0, 6), 3, true);
    const OracleSystem m = GraphicMatroid(gen.graph);
    const ExplicitSetSystem sys = ExplicitSetSystem::FromOracle(m);
    ASSERT_TRUE(CheckAxioms(sys).is_matroid);
    for (std::uint32_t x : sys.masks()) {
      EXPECT_TRUE(testing::RefAcyclic(vertices, gen.ref, x));
      const ElementSet xs = sys.SetOf(x);
      for (Index e = 0; e < sys.carrier_size(); ++e) {
        if (xs.contains(e)) continue;
        const bool extends = sys.Contains(xs.With(e));
        EXPECT_EQ(GraphicWeakOracle(gen.graph, xs, e, ContractChecks::kOn), extends);
        if (!extends) {
          EXPECT_EQ(GraphicCircuitOracle(gen.graph, xs, e),
                    FundamentalCircuit(m, xs, e).Without(e));
        }
      }
    }
    // Bases are exactly the spanning forests.
    const auto bases = BasesOf(sys, sys.carrier().FullSet());
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << sys.carrier_size()); ++x) {
      const ElementSet xs = ElementSet::FromMask(sys.carrier_size(), x);
      const bool is_basis = std::find(bases.begin(), bases.end(), xs) != bases.end();
      EXPECT_EQ(IsSpanningForest(gen.graph, xs), is_basis);
    }
  }
}

TEST(IsSpanningForestTest, Examples) {
  const UndirectedGraph g = WeightedTriangle();
  const Carrier& c = g.edge_carrier();
  EXPECT_TRUE(IsSpanningForest(g, c.Subset({"uv", "vw"})));
  EXPECT_FALSE(IsSpanningForest(g, c.Subset({"uv"})));
  EXPECT_FALSE(IsSpanningForest(g, c.FullSet()));
}

TEST(KruskalTest, Examples) {
  const UndirectedGraph g = WeightedTriangle();
  const Carrier& c = g.edge_carrier();
  const ElementSet max = Kruskal(g, Direction::kMax);
  EXPECT_EQ(max, c.Subset({"uv", "vw"}));
  EXPECT_EQ(g.Weight(max), Rational(5));
  const ElementSet min = Kruskal(g, Direction::kMin);
  EXPECT_EQ(min, c.Subset({"vw", "wu"}));
  EXPECT_EQ(g.Weight(min), Rational(3));
  // Reference optimum over all spanning trees of the triangle.
  const std::vector<testing::RefEdge> ref = {{0, 1, 3}, {1, 2, 2}, {2, 0, 1}};
  EXPECT_EQ(testing::RefForestOptimum(3, ref, true), Q(5));
  EXPECT_EQ(testing::RefForestOptimum(3, ref, false), Q(3));

  const UndirectedGraph edgeless({"x", "y"}, {});
  EXPECT_TRUE(Kruskal(edgeless, Direction::kMax).empty());
}

TEST(KruskalTest, Errors) {
  const UndirectedGraph g = WeightedTriangle();
  EXPECT_THROW(OrderFromNames(g.edge_carrier(), {"uv", "vw", "zz"}), InputError);
  EXPECT_THROW(Kruskal(g, Direction::kMax, {0, 1}), InputError);
  const UndirectedGraph negative({"u", "v"}, {{"e", "u", "v", Rational(-1)}});
  EXPECT_THROW(Kruskal(negative, Direction::kMax), InputError);
  EXPECT_EQ(Kruskal(negative, Direction::kMin), ElementSet::Full(1));
}

TEST(KruskalTest, MatchesReferenceOptimum) {
  testing::Rng rng(7);
  for (int round = 0; round < 300; ++round) {
    const int vertices = testing::Uniform(rng, 1, 5);
    const auto gen = testing::RandomGraph(rng, vertices, testing::Uniform(rng, 0, 8), 3, true);
    for (Direction d : {Direction::kMax, Direction::kMin}) {
      Order order = CanonicalOrder(gen.graph.num_edges());
      std::shuffle(order.begin(), order.end(), rng);
      const ElementSet forest = Kruskal(gen.graph, d, order);
      EXPECT_TRUE(IsSpanningForest(gen.graph, forest));
      EXPECT_EQ(gen.graph.Weight(forest),
                testing::RefForestOptimum(vertices, gen.ref, d == Direction::kMax));
    }
  }
}

TEST(ArborescenceWeakOracleTest, Examples) {
  const UndirectedGraph g = RootedTriangle();
  const Carrier& c = g.edge_carrier();
  EXPECT_TRUE(ArborescenceWeakOracle(g, "r", c.EmptySet(), c.IndexOf("ra")));
  EXPECT_FALSE(ArborescenceWeakOracle(g, "r", c.EmptySet(), c.IndexOf("ab")));
  const UndirectedGraph path({"a", "b", "r"}, {{"ra", "r", "a"}, {"ab", "a", "b"}});
  const Carrier& pc = path.edge_carrier();
  EXPECT_TRUE(ArborescenceWeakOracle(path, "r", pc.Subset({"ra"}), pc.IndexOf("ab")));
  EXPECT_THROW(ArborescenceWeakOracle(g, "zz", c.EmptySet(), 0), InputError);
}

TEST(ArborescenceGreedoidTest, IsAGreedoidWithStrongExchange) {
  testing::Rng rng(13);
  int checked = 0;
  for (int round = 0; round < 150; ++round) {
    const int vertices = testing::Uniform(rng, 1, 4);
    const auto gen = testing::RandomGraph(rng, vertices, testing::Uniform(rng, 0, 6), 3, true);
    const std::string root = testing::VertexName(testing::Uniform(rng, 0, vertices - 1));
    const OracleSystem arb = ArborescenceGreedoid(gen.graph, root);
    const ExplicitSetSystem sys = ExplicitSetSystem::FromOracle(arb);
    for (std::uint32_t x : sys.masks()) {
      const ElementSet xs = sys.SetOf(x);
      for (Index e = 0; e < sys.carrier_size(); ++e) {
        if (!xs.contains(e)) {
          EXPECT_EQ(ArborescenceWeakOracle(gen.graph, root, xs, e), sys.Contains(xs.With(e)));
        }
      }
    }
    bool touches_root = false;
    const Index r = *gen.graph.FindVertex(root);
    for (Index e = 0; e < gen.graph.num_edges(); ++e) {
      const auto [u, v] = gen.graph.Endpoints(e);
      touches_root = touches_root || (u != v && (u == r || v == r));
    }
    if (!touches_root) continue;
    ++checked;
    const GreedoidReport report = ClassifyGreedoid(sys);
    EXPECT_TRUE(report.is_greedoid);
    ASSERT_TRUE(report.has_sep.has_value());
    EXPECT_TRUE(*report.has_sep);
  }
  EXPECT_GT(checked, 50);
}

TEST(PrimTest, Examples) {
  const UndirectedGraph g = RootedTriangle();
  const Carrier& c = g.edge_carrier();
  const ElementSet max = Prim(g, "r", Direction::kMax);
  EXPECT_EQ(max, c.Subset({"ra", "rb"}));
  EXPECT_EQ(g.Weight(max), Rational(5));
  const ElementSet min = Prim(g, "r", Direction::kMin);
  EXPECT_EQ(min, c.Subset({"rb", "ab"}));
  EXPECT_EQ(g.Weight(min), Rational(3));
  EXPECT_EQ(BruteOptimalSpanningTreeWeight(g, "r", Direction::kMax), Rational(5));
  EXPECT_EQ(BruteOptimalSpanningTreeWeight(g, "r", Direction::kMin), Rational(3));

  const UndirectedGraph isolated({"a", "b", "r"}, {{"ab", "a", "b"}});
  EXPECT_TRUE(Prim(isolated, "r", Direction::kMax).empty());
  EXPECT_THROW(Prim(g, "zz", Direction::kMax), InputError);
}

TEST(PrimTest, SpansTheRootComponentOptimally) {
  testing::Rng rng(19);
  for (int round = 0; round < 300; ++round) {
    const int vertices = testing::Uniform(rng, 1, 5);
    const auto gen = testing::RandomGraph(rng, vertices, testing::Uniform(rng, 0, 8), 3, true);
    const std::string root = testing::VertexName(testing::Uniform(rng, 0, vertices - 1));
    for (Direction d : {Direction::kMax, Direction::kMin}) {
      Order order = CanonicalOrder(gen.graph.num_edges());
      std::shuffle(order.begin(), order.end(), rng);
      const ElementSet tree = Prim(gen.graph, root, d, order);
      EXPECT_TRUE(IsSpanningTreeOfRootComponent(gen.graph, root, tree));
      EXPECT_EQ(gen.graph.Weight(tree), BruteOptimalSpanningTreeWeight(gen.graph, root, d));
    }
  }
}

TEST(BipartiteGraphTest, Validation) {
  EXPECT_THROW(BipartiteGraph({"x"}, {"x"}, {}), InputError);
  EXPECT_THROW(BipartiteGraph({"l"}, {"r"}, {{"e", "r", "l"}}), InputError);
  EXPECT_THROW(BipartiteGraph({"l"}, {"r"}, {{"e", "l", "r"}, {"e", "l", "r"}}), InputError);
}

TEST(MatchingOracleTest, Examples) {
  const BipartiteGraph b({"l1", "l2"}, {"r1", "r2"},
                         {{"l1r1", "l1", "r1"}, {"l1r2", "l1", "r2"},
                          {"l2r1", "l2", "r1"}, {"l2r2", "l2", "r2"}});
  const Carrier& c = b.edge_carrier();
  const ElementSet m = c.Subset({"l1r1"});
  EXPECT_FALSE(MatchingWeakOracle(b, Side::kLeft, m, c.IndexOf("l1r2")));
  EXPECT_TRUE(MatchingWeakOracle(b, Side::kLeft, m, c.IndexOf("l2r1")));
  for (Index e = 0; e < 4; ++e) EXPECT_TRUE(MatchingWeakOracle(b, Side::kRight, c.EmptySet(), e));

  EXPECT_EQ(MatchingCircuitOracle(b, Side::kLeft, m, c.IndexOf("l1r2")), m);
  EXPECT_EQ(MatchingCircuitOracle(b, Side::kLeft, c.Subset({"l1r1", "l2r2"}), c.IndexOf("l2r1")),
            c.Subset({"l2r2"}));
  EXPECT_EQ(MatchingCircuitOracle(b, Side::kRight, m, c.IndexOf("l2r1")), m);
  EXPECT_THROW(MatchingCircuitOracle(b, Side::kLeft, m, c.IndexOf("l2r1")), ContractError);
  EXPECT_THROW(MatchingWeakOracle(b, Side::kLeft, m, c.IndexOf("l1r1"), ContractChecks::kOn),
               ContractError);

  const MatchingMaps maps = BuildMatchingMaps(b, c.Subset({"l1r2", "l2r1"}));
  EXPECT_EQ(maps.left.at("l1"), c.IndexOf("l1r2"));
  EXPECT_EQ(maps.right.at("r1"), c.IndexOf("l2r1"));
  EXPECT_EQ(maps.left.size(), 2u);
  EXPECT_THROW(BuildMatchingMaps(b, c.Subset({"l1r1", "l1r2"})), ContractError);
}

TEST(MatchingOracleTest, SideFamiliesAreMatroidsAndOraclesAgree) {
  testing::Rng rng(29);
  for (int round = 0; round < 100; ++round) {
    const int nl = testing::Uniform(rng, 1, 3);
    const int nr = testing::Uniform(rng, 1, 3);
    std::vector<BipartiteEdge> edges;
    for (int l = 0; l < nl; ++l) {
      for (int r = 0; r < nr; ++r) {
        if (testing::Uniform(rng, 0, 1)) {
          edges.push_back({"l" + std::to_string(l) + "r" + std::to_string(r),
                           "l" + std::to_string(l), "r" + std::to_string(r)});
        }
      }
    }
    std::vector<std::string> left;
    std::vector<std::string> right;
    for (int l = 0; l < nl; ++l) left.push_back("l" + std::to_string(l));
    for (int r = 0; r < nr; ++r) right.push_back("r" + std::to_string(r));
    const BipartiteGraph b(left, right, edges);
    for (Side side : {Side::kLeft, Side::kRight}) {
      const OracleSystem m = SideMatroid(b, side);
      const ExplicitSetSystem sys = ExplicitSetSystem::FromOracle(m);
      ASSERT_TRUE(CheckAxioms(sys).is_matroid);
      for (const ElementSet& x : sys.Family()) {
        for (Index e = 0; e < b.num_edges(); ++e) {
          if (x.contains(e)) continue;
          const bool extends = IsSideIndependent(b, side, x.With(e));
          EXPECT_EQ(MatchingWeakOracle(b, side, x, e, ContractChecks::kOn), extends);
          if (!extends) {
            EXPECT_EQ(MatchingCircuitOracle(b, side, x, e),
                      FundamentalCircuit(m, x, e).Without(e));
          }
        }
      }
    }
  }
}

TEST(MaxBipartiteMatchingTest, Examples) {
  const BipartiteGraph b = WorkedBipartite();
  const ElementSet m = MaxBipartiteMatching(b);
  EXPECT_EQ(m, b.edge_carrier().Subset({"l1r2", "l2r1"}));
  EXPECT_EQ(testing::RefMaxMatching({{0, 0}, {0, 1}, {1, 0}}), 2);

  EXPECT_TRUE(MaxBipartiteMatching(BipartiteGraph({"l"}, {"r"}, {})).empty());

  const BipartiteGraph k22({"l1", "l2"}, {"r1", "r2"},
                           {{"a", "l1", "r1"}, {"b", "l1", "r2"},
                            {"c", "l2", "r1"}, {"d", "l2", "r2"}});
  EXPECT_EQ(MaxBipartiteMatching(k22).size(), 2u);
  EXPECT_EQ(testing::RefMaxMatching({{0, 0}, {0, 1}, {1, 0}, {1, 1}}), 2);
}

TEST(UniformAndPartitionTest, OraclesAgreeWithIndependence) {
  testing::Rng rng(37);
  for (int round = 0; round < 200; ++round) {
    const int n = testing::Uniform(rng, 0, 6);
    const Carrier carrier(testing::ElementIds(n));
    const testing::GeneratedMatroid gen = testing::RandomMatroid(rng, carrier);
    const ExplicitSetSystem sys = ExplicitSetSystem::FromOracle(gen.matroid);
    ASSERT_TRUE(CheckAxioms(sys).is_matroid) << gen.description;
    for (const ElementSet& x : sys.Family()) {
      for (Index e = 0; e < static_cast<Index>(n); ++e) {
        if (x.contains(e)) continue;
        const bool extends = sys.Contains(x.With(e));
        EXPECT_EQ(gen.matroid.WeakIndependent(x, e), extends) << gen.description;
        if (!extends) {
          EXPECT_EQ(gen.matroid.CircuitWithout(x, e), FundamentalCircuit(gen.matroid, x, e).Without(e))
              << gen.description;
        }
      }
    }
  }
}

TEST(PartitionMatroidTest, Validation) {
  const Carrier c({"a", "b"});
  EXPECT_THROW(PartitionMatroid(c, {0}, {1}), InputError);
  EXPECT_THROW(PartitionMatroid(c, {0, 1}, {1}), InputError);
  const OracleSystem m = PartitionMatroid(c, {0, 0}, {1});
  EXPECT_TRUE(m.IsIndependent(c.Subset({"a"})));
  EXPECT_FALSE(m.IsIndependent(c.FullSet()));
}

}  // namespace
}  // namespace matroidkit
