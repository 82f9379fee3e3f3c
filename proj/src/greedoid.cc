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

#include <bit>
#include <unordered_set>

namespace matroidkit {
namespace {

inline std::uint32_t LowestBit(std::uint32_t m) { return m & (~m + 1); }

// Nonempty members that lose every element to infeasibility.
std::optional<std::uint32_t> FindInaccessibleMember(const ExplicitSetSystem& sys) {
  for (std::uint32_t x : sys.masks()) {
    if (x == 0) continue;
    bool peelable = false;
    for (std::uint32_t rest = x; rest != 0 && !peelable; rest &= rest - 1) {
      peelable = sys.ContainsMask(x & ~LowestBit(rest));
    }
    if (!peelable) return x;
  }
  return std::nullopt;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> FindUnionViolation(
    const ExplicitSetSystem& sys) {
  for (std::uint32_t a : sys.masks()) {
    for (std::uint32_t b : sys.masks()) {
      if (!sys.ContainsMask(a | b)) return std::make_pair(a, b);
    }
  }
  return std::nullopt;
}

struct SepViolation {
  std::uint32_t a;
  std::uint32_t b;
};

std::optional<SepViolation> FindSepViolation(const ExplicitSetSystem& sys) {
  const std::uint32_t full = sys.FullMask();
  for (const ElementSet& basis : BasesOf(sys, sys.carrier().FullSet())) {
    const auto b = static_cast<std::uint32_t>(basis.ToMask());
    for (std::uint32_t a : sys.masks()) {
      if ((a & ~b) != 0) continue;
      for (std::uint32_t xs = full & ~b; xs != 0; xs &= xs - 1) {
        const std::uint32_t x = LowestBit(xs);
        if (!sys.ContainsMask(a | x)) continue;
        bool exchanged = false;
        for (std::uint32_t ys = b & ~a; ys != 0 && !exchanged; ys &= ys - 1) {
          const std::uint32_t y = LowestBit(ys);
          exchanged = sys.ContainsMask(a | y) && sys.ContainsMask((b & ~y) | x);
        }
        if (!exchanged) return SepViolation{a, b};
      }
    }
  }
  return std::nullopt;
}

void Record(GreedoidReport& report, const ExplicitSetSystem& sys,
            const char* property, std::uint32_t first, std::uint32_t second) {
  if (!report.violation) {
    report.violation = GreedoidViolation{property, sys.SetOf(first), sys.SetOf(second)};
  }
}

}  // namespace

GreedoidReport ClassifyGreedoid(const ExplicitSetSystem& sys) {
  GreedoidReport report;
  // Construction already rejects members outside the carrier.
  report.is_set_system = true;

  report.has_empty = sys.ContainsMask(0);
  if (!report.has_empty) Record(report, sys, "empty set", 0, 0);

  const auto m3 = FindAugmentationViolation(sys);
  report.has_m3 = !m3.has_value();
  if (m3) {
    Record(report, sys, "augmentation", static_cast<std::uint32_t>(m3->first.ToMask()),
           static_cast<std::uint32_t>(m3->second.ToMask()));
  }
  report.is_greedoid = report.is_set_system && report.has_empty && report.has_m3;

  const auto stuck = FindInaccessibleMember(sys);
  report.is_accessible = report.has_empty && !stuck.has_value();
  if (stuck) Record(report, sys, "accessibility", *stuck, 0);

  const auto union_gap = FindUnionViolation(sys);
  report.is_antimatroid = report.is_accessible && !union_gap.has_value();
  if (union_gap) Record(report, sys, "union closure", union_gap->first, union_gap->second);

  if (report.is_greedoid) {
    const auto sep = FindSepViolation(sys);
    report.has_sep = !sep.has_value();
    if (sep) Record(report, sys, "strong exchange", sep->a, sep->b);
  }
  return report;
}

bool HasStrongExchangeProperty(const ExplicitSetSystem& sys) {
  if (!sys.ContainsMask(0) || FindAugmentationViolation(sys)) {
    throw ContractError("strong exchange is only defined for greedoids");
  }
  return !FindSepViolation(sys).has_value();
}

Order AccessibleOrdering(const ExplicitSetSystem& sys, const ElementSet& x) {
  if (!sys.Contains(x)) throw InputError("set is not a member of the family");
  const auto target = static_cast<std::uint32_t>(x.ToMask());

  // Depth-first in ascending element order; the first complete ordering
  // found is the lexicographically smallest one.
  std::unordered_set<std::uint32_t> dead;
  Order prefix;
  auto extend = [&](auto& self, std::uint32_t current) -> bool {
    if (current == target) return true;
    if (dead.contains(current)) return false;
    for (std::uint32_t rest = target & ~current; rest != 0; rest &= rest - 1) {
      const std::uint32_t bit = LowestBit(rest);
      if (!sys.ContainsMask(current | bit)) continue;
      prefix.push_back(static_cast<Index>(std::countr_zero(bit)));
      if (self(self, current | bit)) return true;
      prefix.pop_back();
    }
    dead.insert(current);
    return false;
  };
  if (!sys.ContainsMask(0) || !extend(extend, 0)) {
    throw ContractError("no accessible ordering exists for " + sys.carrier().Format(x));
  }
  return prefix;
}

std::optional<Index> FindBestCandidate(const OracleSystem& sys,
                                       const ModularWeight& cost,
                                       const Order& order, const ElementSet& x) {
  std::optional<Index> best;
  for (Index e : order) {
    if (x.contains(e) || !sys.CanExtend(x, e)) continue;
    if (!best || cost[e] > cost[*best]) best = e;
  }
  return best;
}

ElementSet GreedoidGreedy(const OracleSystem& sys, const ModularWeight& cost,
                          const Order& order) {
  ValidateOrder(sys.size(), order);
  if (cost.size() != sys.size()) {
    throw InputError("weight function does not cover the carrier");
  }
  ElementSet x(sys.size());
  // Each round adds a new element, so at most |E| rounds can succeed.
  for (std::size_t round = 0; round <= sys.size(); ++round) {
    const std::optional<Index> next = FindBestCandidate(sys, cost, order, x);
    if (!next) return x;
    x.insert(*next);
  }
  throw ContractError("GreedoidGreedy exceeded |E| insertions");
}

}  // namespace matroidkit
