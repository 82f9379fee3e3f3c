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

#include "matroidkit/bruteforce.h"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>

#include "matroidkit/greedoid.h"

namespace matroidkit {
namespace {

constexpr std::size_t kMaxBruteCarrier = 12;
constexpr std::size_t kMaxBruteEdges = 20;

bool Passes(const ExplicitSetSystem& sys, SystemClass filter) {
  switch (filter) {
    case SystemClass::kAll:
    case SystemClass::kIndependenceSystems:
      return true;
    case SystemClass::kMatroids:
      return CheckAxioms(sys).is_matroid;
    case SystemClass::kGreedoids:
      return ClassifyGreedoid(sys).is_greedoid;
    case SystemClass::kAntimatroids:
      return ClassifyGreedoid(sys).is_antimatroid;
  }
  return false;
}

bool DownwardClosedClass(SystemClass filter) {
  return filter == SystemClass::kIndependenceSystems || filter == SystemClass::kMatroids;
}

std::vector<std::uint32_t> NonemptySubsets(std::size_t n) {
  std::vector<std::uint32_t> subsets;
  for (std::uint32_t m = 1; m < (std::uint32_t{1} << n); ++m) subsets.push_back(m);
  std::sort(subsets.begin(), subsets.end(),
            [](std::uint32_t a, std::uint32_t b) { return CardinalityLexLess(a, b); });
  return subsets;
}

// Depth-first over subsets in CardinalityLexLess order. A subset may join
// only if every subset one element smaller already has, so each leaf is a
// downward-closed family.
class DownSetSearch {
 public:
  DownSetSearch(std::size_t n, const std::function<void(std::vector<std::uint32_t>)>& emit)
      : subsets_(NonemptySubsets(n)), member_(std::size_t{1} << n, false), emit_(emit) {
    member_[0] = true;
    chosen_.push_back(0);
  }

  void Run() { Visit(0); }

 private:
  void Visit(std::size_t i) {
    if (i == subsets_.size()) {
      emit_(chosen_);
      return;
    }
    const std::uint32_t s = subsets_[i];
    Visit(i + 1);
    if (!Admissible(s)) return;
    member_[s] = true;
    chosen_.push_back(s);
    Visit(i + 1);
    chosen_.pop_back();
    member_[s] = false;
  }

  bool Admissible(std::uint32_t s) const {
    for (std::uint32_t rest = s; rest != 0; rest &= rest - 1) {
      if (!member_[s & ~(rest & (~rest + 1))]) return false;
    }
    return true;
  }

  std::vector<std::uint32_t> subsets_;
  std::vector<bool> member_;
  std::vector<std::uint32_t> chosen_;
  const std::function<void(std::vector<std::uint32_t>)>& emit_;
};

void CheckBruteSize(std::size_t n) {
  if (n > kMaxBruteCarrier) {
    throw InputError("brute force is limited to " + std::to_string(kMaxBruteCarrier) +
                     " elements");
  }
}

template <typename Better>
WeightedSet BestOf(const std::vector<ElementSet>& candidates, const WeightFn& cost,
                   Better better) {
  std::optional<WeightedSet> best;
  for (const ElementSet& s : candidates) {
    const Rational value = cost.Cost(s);
    if (!best || better(value, best->value) ||
        (value == best->value && CardinalityLexLess(s, best->set))) {
      best = WeightedSet{s, value};
    }
  }
  return *best;
}

std::optional<Rational> OptimumOver(const UndirectedGraph& g, Direction direction,
                                    const std::function<bool(const ElementSet&)>& accept) {
  const std::size_t m = g.num_edges();
  if (m > kMaxBruteEdges) throw InputError("too many edges for brute force");
  std::optional<Rational> best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    const ElementSet x = ElementSet::FromMask(m, mask);
    if (!accept(x)) continue;
    const Rational w = g.Weight(x);
    if (!best || (direction == Direction::kMax ? w > *best : w < *best)) best = w;
  }
  return best;
}

}  // namespace

std::size_t MaxEnumerationSize(SystemClass filter) {
  return DownwardClosedClass(filter) ? 5 : 4;
}

Carrier LetterCarrier(std::size_t n) {
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < n; ++i) ids.emplace_back(1, static_cast<char>('a' + i));
  return Carrier(std::move(ids));
}

void EnumerateSystems(const EnumerationConfig& config,
                      const std::function<void(const ExplicitSetSystem&)>& visit) {
  if (config.n > MaxEnumerationSize(config.filter)) {
    throw InputError("enumeration size " + std::to_string(config.n) + " is out of range");
  }
  const Carrier carrier = LetterCarrier(config.n);
  const std::function<void(std::vector<std::uint32_t>)> emit =
      [&](std::vector<std::uint32_t> masks) {
        ExplicitSetSystem sys(carrier, std::move(masks));
        if (Passes(sys, config.filter)) visit(sys);
      };

  if (DownwardClosedClass(config.filter)) {
    DownSetSearch(config.n, emit).Run();
    return;
  }
  const std::vector<std::uint32_t> subsets = NonemptySubsets(config.n);
  const std::uint64_t families = std::uint64_t{1} << subsets.size();
  for (std::uint64_t f = 0; f < families; ++f) {
    std::vector<std::uint32_t> masks{0};
    for (std::size_t i = 0; i < subsets.size(); ++i) {
      if ((f >> i) & 1) masks.push_back(subsets[i]);
    }
    emit(std::move(masks));
  }
}

std::vector<ExplicitSetSystem> CollectSystems(const EnumerationConfig& config) {
  std::vector<ExplicitSetSystem> out;
  EnumerateSystems(config, [&](const ExplicitSetSystem& sys) { out.push_back(sys); });
  return out;
}

WeightedSet BruteMaxWeightIndependent(const ExplicitSetSystem& sys, const WeightFn& cost) {
  return BestOf(sys.Family(), cost, std::greater<Rational>());
}

WeightedSet BruteMaxWeightBasis(const ExplicitSetSystem& sys, const WeightFn& cost) {
  return BestOf(BasesOf(sys, sys.carrier().FullSet()), cost, std::greater<Rational>());
}

std::pair<ElementSet, std::size_t> BruteMaxCommonIndependent(const DoubleMatroid& dm) {
  const std::size_t n = dm.size();
  CheckBruteSize(n);
  ElementSet best(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const ElementSet x = ElementSet::FromMask(n, mask);
    if (!dm.IsCommonIndependent(x)) continue;
    if (x.size() > best.size() || (x.size() == best.size() && CardinalityLexLess(x, best))) {
      best = x;
    }
  }
  const std::size_t size = best.size();
  return {std::move(best), size};
}

std::pair<ElementSet, std::size_t> BruteMinRankSum(const DoubleMatroid& dm) {
  const std::size_t n = dm.size();
  CheckBruteSize(n);
  std::optional<std::pair<ElementSet, std::size_t>> best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    ElementSet q = ElementSet::FromMask(n, mask);
    const std::size_t value = CertificateValue(dm, q);
    if (!best || value < best->second ||
        (value == best->second && CardinalityLexLess(q, best->first))) {
      best.emplace(std::move(q), value);
    }
  }
  return *best;
}

Rational BruteRankQuotient(const ExplicitSetSystem& sys) {
  const std::size_t n = sys.carrier_size();
  CheckBruteSize(n);
  if (!IsIndependenceSystem(sys)) {
    throw ContractError("rank quotient requires an independence system");
  }
  Rational quotient = 1;
  for (std::uint32_t x = 0; x <= sys.FullMask(); ++x) {
    std::size_t lower = std::numeric_limits<std::size_t>::max();
    std::size_t upper = 0;
    for (std::uint32_t b : sys.masks()) {
      if ((b & ~x) != 0) continue;
      const bool maximal = std::none_of(
          sys.masks().begin(), sys.masks().end(),
          [&](std::uint32_t y) { return y != b && (y & ~x) == 0 && (b & ~y) == 0; });
      if (!maximal) continue;
      const auto size = static_cast<std::size_t>(std::popcount(b));
      lower = std::min(lower, size);
      upper = std::max(upper, size);
    }
    quotient = std::min(quotient, Frac(static_cast<std::int64_t>(lower),
                                       static_cast<std::int64_t>(upper)));
    if (x == sys.FullMask()) break;
  }
  return quotient;
}

std::optional<GreedoidCounterexample> FindGreedoidCounterexample(const ExplicitSetSystem& sys,
                                                                 int max_weight) {
  const std::size_t n = sys.carrier_size();
  const OracleSystem oracle = sys.ToOracle();
  const std::vector<ElementSet> bases = BasesOf(sys, sys.carrier().FullSet());
  Order order = CanonicalOrder(n);
  std::vector<Rational> w(n);
  std::size_t grid = 1;
  for (std::size_t i = 0; i < n; ++i) grid *= static_cast<std::size_t>(max_weight + 1);
  do {
    for (std::size_t code = 0; code < grid; ++code) {
      std::size_t rest = code;
      for (std::size_t i = 0; i < n; ++i) {
        w[i] = static_cast<std::int64_t>(rest % static_cast<std::size_t>(max_weight + 1));
        rest /= static_cast<std::size_t>(max_weight + 1);
      }
      const WeightFn cost(w);
      const ElementSet greedy = GreedoidGreedy(oracle, cost, order);
      const Rational optimum = BestOf(bases, cost, std::greater<Rational>()).value;
      if (cost.Cost(greedy) != optimum) {
        return GreedoidCounterexample{order, cost, greedy, optimum};
      }
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return std::nullopt;
}

Rational BruteOptimalSpanningForestWeight(const UndirectedGraph& g, Direction direction) {
  return *OptimumOver(g, direction, [&](const ElementSet& x) { return IsSpanningForest(g, x); });
}

bool IsSpanningTreeOfRootComponent(const UndirectedGraph& g, std::string_view root,
                                   const ElementSet& x) {
  const std::optional<Index> r = g.FindVertex(root);
  if (!r) throw InputError("root " + std::string(root) + " is not a vertex");
  if (!IsArborescence(g, *r, x)) return false;
  // Vertices of root's component, by repeated relaxation over all edges.
  std::vector<bool> component(g.num_vertices(), false);
  component[*r] = true;
  for (bool grew = true; grew;) {
    grew = false;
    for (Index e = 0; e < g.num_edges(); ++e) {
      const auto [u, v] = g.Endpoints(e);
      if (component[u] != component[v]) {
        component[u] = component[v] = true;
        grew = true;
      }
    }
  }
  std::vector<bool> covered(g.num_vertices(), false);
  covered[*r] = true;
  x.ForEach([&](Index e) {
    const auto [u, v] = g.Endpoints(e);
    covered[u] = covered[v] = true;
  });
  return covered == component;
}

Rational BruteOptimalSpanningTreeWeight(const UndirectedGraph& g, std::string_view root,
                                        Direction direction) {
  return *OptimumOver(g, direction, [&](const ElementSet& x) {
    return IsSpanningTreeOfRootComponent(g, root, x);
  });
}

std::size_t BruteMaxMatchingSize(const BipartiteGraph& b) {
  const std::size_t m = b.num_edges();
  if (m > kMaxBruteEdges) throw InputError("too many edges for brute force");
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    const ElementSet x = ElementSet::FromMask(m, mask);
    if (x.size() > best && IsMatching(b, x)) best = x.size();
  }
  return best;
}

}  // namespace matroidkit
