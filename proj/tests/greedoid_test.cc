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

#include "matroidkit/greedoid.h"

#include <vector>

#include "gtest/gtest.h"
#include "matroidkit/bruteforce.h"
#include "matroidkit/instances.h"
#include "testing/generators.h"
#include "testing/reference.h"

namespace matroidkit {
namespace {

using testing::Mask;
using testing::RefFamily;

UndirectedGraph Triangle() {
  return UndirectedGraph({"a", "b", "r"}, {{"ra", "r", "a", Rational(3)},
                                           {"rb", "r", "b", Rational(2)},
                                           {"ab", "a", "b", Rational(1)}});
}

// Exchange condition with y drawn from B - A.
bool RefStrongExchange(const RefFamily& f) {
  for (Mask b : testing::RefBases(f, f.Full())) {
    for (Mask a : f.Members()) {
      if (!testing::Sub(a, b)) continue;
      for (int x = 0; x < f.n; ++x) {
        const Mask xb = Mask{1} << x;
        if ((b & xb) || !f.Has(a | xb)) continue;
        bool found = false;
        for (int y = 0; y < f.n && !found; ++y) {
          const Mask yb = Mask{1} << y;
          found = (b & yb) && !(a & yb) && f.Has(a | yb) && f.Has((b & ~yb) | xb);
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

TEST(ClassifyGreedoidTest, PathArborescences) {
  const ExplicitSetSystem sys = ExplicitSetSystem::FromNames({"ab", "ra"}, {{}, {"ra"}, {"ra", "ab"}});
  const GreedoidReport report = ClassifyGreedoid(sys);
  EXPECT_TRUE(report.is_set_system);
  EXPECT_TRUE(report.is_greedoid);
  EXPECT_TRUE(report.is_accessible);
  EXPECT_FALSE(CheckAxioms(sys).is_independence_system);
}

TEST(ClassifyGreedoidTest, ThreeElementExampleIsNotAGreedoid) {
  const ExplicitSetSystem sys = ExplicitSetSystem::FromNames(
      {"1", "2", "3"}, {{}, {"1"}, {"2"}, {"3"}, {"2", "3"}});
  const GreedoidReport report = ClassifyGreedoid(sys);
  EXPECT_FALSE(report.has_m3);
  EXPECT_FALSE(report.is_greedoid);
  EXPECT_FALSE(report.has_sep.has_value());
  ASSERT_TRUE(report.violation.has_value());
  EXPECT_EQ(report.violation->property, "augmentation");
  EXPECT_EQ(report.violation->first, sys.carrier().Subset({"2", "3"}));
  EXPECT_EQ(report.violation->second, sys.carrier().Subset({"1"}));
  EXPECT_THROW(HasStrongExchangeProperty(sys), ContractError);
}

TEST(ClassifyGreedoidTest, ChainIsAnAntimatroid) {
  const ExplicitSetSystem sys = ExplicitSetSystem::FromNames({"a", "b"}, {{}, {"a"}, {"a", "b"}});
  const GreedoidReport report = ClassifyGreedoid(sys);
  EXPECT_TRUE(report.is_antimatroid);
  EXPECT_TRUE(report.is_greedoid);
  EXPECT_FALSE(report.violation.has_value());
}

TEST(ClassifyGreedoidTest, MissingEmptySet) {
  const GreedoidReport report =
      ClassifyGreedoid(ExplicitSetSystem::FromNames({"a"}, {{"a"}}));
  EXPECT_FALSE(report.has_empty);
  EXPECT_FALSE(report.is_greedoid);
  EXPECT_FALSE(report.is_accessible);
  ASSERT_TRUE(report.violation.has_value());
  EXPECT_EQ(report.violation->property, "empty set");
}

TEST(ClassifyGreedoidTest, ReportInvariantsOnAllFamilies) {
  for (std::size_t n = 0; n <= 4; ++n) {
    EnumerateSystems({n, SystemClass::kAll}, [&](const ExplicitSetSystem& sys) {
      const GreedoidReport r = ClassifyGreedoid(sys);
      const RefFamily ref(static_cast<int>(n), sys.masks());
      EXPECT_EQ(r.is_greedoid, r.is_set_system && r.has_empty && r.has_m3);
      EXPECT_EQ(r.is_greedoid, ref.Has(0) && testing::RefHasAugmentation(ref));
      if (r.is_antimatroid) {
        EXPECT_TRUE(r.is_greedoid);
      }
      if (r.is_greedoid) {
        EXPECT_TRUE(r.is_accessible);
      }
      if (testing::RefIsMatroid(ref)) {
        EXPECT_TRUE(r.is_greedoid);
      }
      EXPECT_EQ(r.has_sep.has_value(), r.is_greedoid);
      if (r.has_sep) {
        EXPECT_EQ(*r.has_sep, RefStrongExchange(ref));
      }
      const bool all_good = r.has_empty && r.has_m3 && r.is_accessible && r.is_antimatroid &&
                            r.has_sep.value_or(false);
      EXPECT_EQ(r.violation.has_value(), !all_good);
    });
  }
}

TEST(AccessibleOrderingTest, Examples) {
  const ExplicitSetSystem path =
      ExplicitSetSystem::FromNames({"ab", "ra"}, {{}, {"ra"}, {"ra", "ab"}});
  const Carrier& c = path.carrier();
  EXPECT_EQ(AccessibleOrdering(path, c.FullSet()), (Order{c.IndexOf("ra"), c.IndexOf("ab")}));
  EXPECT_TRUE(AccessibleOrdering(path, c.EmptySet()).empty());
  EXPECT_THROW(AccessibleOrdering(path, c.Subset({"ab"})), InputError);

  const ExplicitSetSystem u2 =
      ExplicitSetSystem::FromOracle(UniformMatroid(Carrier({"a", "b", "c"}), 2));
  EXPECT_EQ(AccessibleOrdering(u2, u2.carrier().Subset({"b", "c"})), (Order{1, 2}));

  const ExplicitSetSystem stuck = ExplicitSetSystem::FromNames({"a", "b"}, {{}, {"a", "b"}});
  EXPECT_THROW(AccessibleOrdering(stuck, stuck.carrier().FullSet()), ContractError);
}

TEST(AccessibleOrderingTest, PrefixesStayInTheFamily) {
  for (std::size_t n = 0; n <= 4; ++n) {
    EnumerateSystems({n, SystemClass::kGreedoids}, [&](const ExplicitSetSystem& sys) {
      for (const ElementSet& x : sys.Family()) {
        const Order order = AccessibleOrdering(sys, x);
        ASSERT_EQ(order.size(), x.size());
        ElementSet prefix(n);
        for (Index e : order) {
          prefix.insert(e);
          EXPECT_TRUE(sys.Contains(prefix));
        }
        EXPECT_EQ(prefix, x);
      }
    });
  }
}

TEST(FindBestCandidateTest, Examples) {
  const UndirectedGraph g = Triangle();
  const OracleSystem arb = ArborescenceGreedoid(g, "r");
  const Carrier& c = g.edge_carrier();
  const WeightFn w = g.Weights();
  EXPECT_EQ(FindBestCandidate(arb, w, CanonicalOrder(3), c.EmptySet()), c.IndexOf("ra"));
  EXPECT_FALSE(FindBestCandidate(arb, w, CanonicalOrder(3), c.Subset({"ra", "rb"})));

  const OracleSystem free = UniformMatroid(Carrier({"p", "q"}), 2);
  EXPECT_EQ(FindBestCandidate(free, WeightFn::Constant(2, 4), {0, 1}, ElementSet(2)), 0u);
  EXPECT_EQ(FindBestCandidate(free, WeightFn::Constant(2, 4), {1, 0}, ElementSet(2)), 1u);
}

TEST(GreedoidGreedyTest, Examples) {
  const UndirectedGraph g = Triangle();
  const ElementSet result = GreedoidGreedy(ArborescenceGreedoid(g, "r"), g.Weights(),
                                           CanonicalOrder(3));
  EXPECT_EQ(result, g.edge_carrier().Subset({"ra", "rb"}));
  EXPECT_EQ(g.Weight(result), Rational(5));

  const OracleSystem empty(Carrier{}, [](const ElementSet&) { return true; });
  EXPECT_TRUE(GreedoidGreedy(empty, WeightFn(), {}).empty());

  const OracleSystem u1 = UniformMatroid(Carrier({"a", "b"}), 1);
  EXPECT_EQ(GreedoidGreedy(u1, WeightFn({Rational(0), Rational(7)}), {0, 1}),
            u1.carrier().Subset({"b"}));
  EXPECT_THROW(GreedoidGreedy(u1, WeightFn::Constant(2, 1), {0}), InputError);
}

TEST(GreedoidGreedyTest, ReturnsABasisForAnyWeights) {
  testing::Rng rng(23);
  for (std::size_t n = 0; n <= 4; ++n) {
    EnumerateSystems({n, SystemClass::kGreedoids}, [&](const ExplicitSetSystem& sys) {
      const RefFamily ref(static_cast<int>(n), sys.masks());
      const auto bases = testing::RefBases(ref, ref.Full());
      for (int trial = 0; trial < 3; ++trial) {
        std::vector<Rational> w;
        for (std::size_t i = 0; i < n; ++i) w.emplace_back(testing::Uniform(rng, -2, 3));
        Order order = CanonicalOrder(n);
        std::shuffle(order.begin(), order.end(), rng);
        const ElementSet result = GreedoidGreedy(sys.ToOracle(), WeightFn(w), order);
        const auto mask = static_cast<Mask>(result.ToMask());
        EXPECT_NE(std::find(bases.begin(), bases.end(), mask), bases.end());
      }
    });
  }
}

TEST(ModularWeightTest, SumRepresentationIsModular) {
  const ModularWeight w({Rational(1), Rational(-2, 3), Rational(5), Rational(0)});
  for (std::uint64_t a = 0; a < 16; ++a) {
    for (std::uint64_t b = 0; b < 16; ++b) {
      const ElementSet sa = ElementSet::FromMask(4, a);
      const ElementSet sb = ElementSet::FromMask(4, b);
      EXPECT_EQ(w.Cost(sa | sb), w.Cost(sa) + w.Cost(sb) - w.Cost(sa & sb));
    }
  }
}

}  // namespace
}  // namespace matroidkit
