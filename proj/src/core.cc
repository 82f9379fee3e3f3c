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

#include "matroidkit/core.h"

#include <algorithm>
#include <bit>
#include <cctype>
#include <limits>
#include <memory>
#include <sstream>

namespace matroidkit {

std::string FormatRational(const Rational& value) {
  if (value.denominator() == 1) return std::to_string(value.numerator());
  return std::to_string(value.numerator()) + "/" +
         std::to_string(value.denominator());
}

// ---------------------------------------------------------------------------
// ElementSet

ElementSet ElementSet::Of(std::size_t universe,
                          std::initializer_list<Index> members) {
  ElementSet s(universe);
  for (Index i : members) s.insert(i);
  return s;
}

ElementSet ElementSet::FromMask(std::size_t universe, std::uint64_t mask) {
  ElementSet s(universe);
  while (mask != 0) {
    const int bit = std::countr_zero(mask);
    s.insert(static_cast<Index>(bit));
    mask &= mask - 1;
  }
  return s;
}

ElementSet ElementSet::Full(std::size_t universe) {
  ElementSet s(universe);
  s.bits_.set();
  return s;
}

ElementSet ElementSet::With(Index i) const {
  ElementSet s = *this;
  s.insert(i);
  return s;
}

ElementSet ElementSet::Without(Index i) const {
  ElementSet s = *this;
  s.erase(i);
  return s;
}

ElementSet ElementSet::Complement() const {
  ElementSet s = *this;
  s.bits_.flip();
  return s;
}

std::vector<Index> ElementSet::Members() const {
  std::vector<Index> out;
  out.reserve(size());
  ForEach([&](Index i) { out.push_back(i); });
  return out;
}

std::uint64_t ElementSet::ToMask() const {
  if (universe() > 64) {
    throw ContractError("ElementSet::ToMask: universe exceeds 64 elements");
  }
  std::uint64_t mask = 0;
  ForEach([&](Index i) { mask |= std::uint64_t{1} << i; });
  return mask;
}

ElementSet operator|(const ElementSet& a, const ElementSet& b) {
  ElementSet s;
  s.bits_ = a.bits_ | b.bits_;
  return s;
}

ElementSet operator&(const ElementSet& a, const ElementSet& b) {
  ElementSet s;
  s.bits_ = a.bits_ & b.bits_;
  return s;
}

ElementSet operator-(const ElementSet& a, const ElementSet& b) {
  ElementSet s;
  s.bits_ = a.bits_ - b.bits_;
  return s;
}

bool CardinalityLexLess(const ElementSet& a, const ElementSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const std::vector<Index> am = a.Members();
  const std::vector<Index> bm = b.Members();
  return am < bm;
}

bool CardinalityLexLess(std::uint64_t a, std::uint64_t b) {
  const int pa = std::popcount(a);
  const int pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  if (a == b) return false;
  // The lowest differing element decides: whoever holds it sorts first.
  const std::uint64_t diff = a ^ b;
  return (a & diff & (~diff + 1)) != 0;
}

// ---------------------------------------------------------------------------
// Carrier

Carrier::Carrier(std::vector<std::string> ids) : ids_(std::move(ids)) {
  for (const std::string& id : ids_) {
    if (id.empty()) throw InputError("element id must be nonempty");
    for (char c : id) {
      if (std::isspace(static_cast<unsigned char>(c))) {
        throw InputError("element id '" + id + "' contains whitespace");
      }
    }
  }
  std::sort(ids_.begin(), ids_.end());
  const auto dup = std::adjacent_find(ids_.begin(), ids_.end());
  if (dup != ids_.end()) {
    throw InputError("duplicate element id '" + *dup + "'");
  }
}

std::optional<Index> Carrier::Find(std::string_view id) const {
  const auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) return std::nullopt;
  return static_cast<Index>(it - ids_.begin());
}

Index Carrier::IndexOf(std::string_view id) const {
  const std::optional<Index> i = Find(id);
  if (!i) throw InputError("unknown element '" + std::string(id) + "'");
  return *i;
}

ElementSet Carrier::Subset(const std::vector<std::string>& ids) const {
  ElementSet s = EmptySet();
  for (const std::string& id : ids) s.insert(IndexOf(id));
  return s;
}

std::vector<std::string> Carrier::Names(const ElementSet& s) const {
  std::vector<std::string> out;
  s.ForEach([&](Index i) { out.push_back(id(i)); });
  return out;
}

std::string Carrier::Format(const ElementSet& s) const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  s.ForEach([&](Index i) {
    if (!first) os << ", ";
    os << id(i);
    first = false;
  });
  os << '}';
  return os.str();
}

// ---------------------------------------------------------------------------
// ExplicitSetSystem

namespace {

void CheckCarrierSize(const Carrier& carrier) {
  if (carrier.size() > ExplicitSetSystem::kMaxCarrier) {
    throw InputError("explicit set systems support at most " +
                     std::to_string(ExplicitSetSystem::kMaxCarrier) +
                     " elements, got " + std::to_string(carrier.size()));
  }
}

}  // namespace

ExplicitSetSystem::ExplicitSetSystem(Carrier carrier,
                                     const std::vector<ElementSet>& family)
    : carrier_(std::move(carrier)) {
  CheckCarrierSize(carrier_);
  masks_.reserve(family.size());
  for (const ElementSet& member : family) {
    if (member.universe() != carrier_.size()) {
      throw InputError("family member is not a subset of the carrier");
    }
    masks_.push_back(static_cast<std::uint32_t>(member.ToMask()));
  }
  Canonicalise();
}

ExplicitSetSystem::ExplicitSetSystem(Carrier carrier,
                                     std::vector<std::uint32_t> masks)
    : carrier_(std::move(carrier)), masks_(std::move(masks)) {
  CheckCarrierSize(carrier_);
  Canonicalise();
}

void ExplicitSetSystem::Canonicalise() {
  const std::uint64_t limit = std::uint64_t{1} << carrier_.size();
  for (std::uint32_t m : masks_) {
    if (m >= limit) {
      throw InputError("family member is not a subset of the carrier");
    }
  }
  std::sort(masks_.begin(), masks_.end(), [](std::uint32_t a, std::uint32_t b) {
    return CardinalityLexLess(a, b);
  });
  masks_.erase(std::unique(masks_.begin(), masks_.end()), masks_.end());
  member_.assign(limit, false);
  for (std::uint32_t m : masks_) member_[m] = true;
}

ExplicitSetSystem ExplicitSetSystem::FromNames(
    std::vector<std::string> carrier,
    const std::vector<std::vector<std::string>>& family) {
  Carrier c(std::move(carrier));
  std::vector<ElementSet> members;
  members.reserve(family.size());
  for (const auto& names : family) members.push_back(c.Subset(names));
  return ExplicitSetSystem(std::move(c), members);
}

ExplicitSetSystem ExplicitSetSystem::FromOracle(const OracleSystem& oracle) {
  CheckCarrierSize(oracle.carrier());
  const std::size_t n = oracle.size();
  std::vector<std::uint32_t> masks;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    if (oracle.IsIndependent(ElementSet::FromMask(n, m))) {
      masks.push_back(static_cast<std::uint32_t>(m));
    }
  }
  return ExplicitSetSystem(oracle.carrier(), std::move(masks));
}

bool ExplicitSetSystem::Contains(const ElementSet& s) const {
  if (s.universe() != carrier_.size()) return false;
  return member_[s.ToMask()];
}

std::vector<ElementSet> ExplicitSetSystem::Family() const {
  std::vector<ElementSet> out;
  out.reserve(masks_.size());
  for (std::uint32_t m : masks_) out.push_back(SetOf(m));
  return out;
}

OracleSystem ExplicitSetSystem::ToOracle() const {
  auto table = std::make_shared<const std::vector<bool>>(member_);
  const std::size_t n = carrier_.size();
  return OracleSystem(carrier_, [table, n](const ElementSet& s) {
    if (s.universe() != n) {
      throw ContractError("oracle queried with a set over a different carrier");
    }
    return static_cast<bool>((*table)[s.ToMask()]);
  });
}

// ---------------------------------------------------------------------------
// OracleSystem

OracleSystem::OracleSystem(Carrier carrier, IndepFn indep, WeakFn weak,
                           CircuitFn circuit)
    : carrier_(std::move(carrier)),
      indep_(std::move(indep)),
      weak_(std::move(weak)),
      circuit_(std::move(circuit)) {
  if (!indep_) throw ContractError("OracleSystem requires an independence oracle");
}

bool OracleSystem::CanExtend(const ElementSet& x, Index e) const {
  if (weak_) return weak_(x, e);
  return indep_(x.With(e));
}

bool OracleSystem::WeakIndependent(const ElementSet& x, Index e) const {
  if (!weak_) throw ContractError("system has no weak independence oracle");
  return weak_(x, e);
}

ElementSet OracleSystem::CircuitWithout(const ElementSet& x, Index y) const {
  if (!circuit_) throw ContractError("system has no circuit oracle");
  return circuit_(x, y);
}

// ---------------------------------------------------------------------------
// Axioms, bases, circuits, ranks

namespace {

void RequireIndependenceSystem(const ExplicitSetSystem& sys, const char* op) {
  if (!IsIndependenceSystem(sys)) {
    throw ContractError(std::string(op) + " requires an independence system");
  }
}

void RequireSameUniverse(const ExplicitSetSystem& sys, const ElementSet& x) {
  if (x.universe() != sys.carrier_size()) {
    throw InputError("set is not a subset of the carrier");
  }
}

// For each member B: the elements e outside B with B + e also a member.
std::vector<std::uint32_t> ExtensionMasks(const ExplicitSetSystem& sys) {
  const std::size_t n = sys.carrier_size();
  std::vector<std::uint32_t> ext(sys.masks().size(), 0);
  for (std::size_t k = 0; k < sys.masks().size(); ++k) {
    const std::uint32_t b = sys.masks()[k];
    for (std::size_t e = 0; e < n; ++e) {
      const std::uint32_t bit = std::uint32_t{1} << e;
      if ((b & bit) == 0 && sys.ContainsMask(b | bit)) ext[k] |= bit;
    }
  }
  return ext;
}

}  // namespace

AxiomReport CheckAxioms(const ExplicitSetSystem& sys) {
  AxiomReport report;
  const std::size_t n = sys.carrier_size();
  const auto& masks = sys.masks();
  std::optional<std::pair<ElementSet, ElementSet>> m2_witness;
  std::optional<std::pair<ElementSet, ElementSet>> m3_witness;

  report.m1 = sys.ContainsMask(0);

  report.m2 = true;
  for (std::uint32_t x : masks) {
    for (std::uint32_t rest = x; rest != 0 && report.m2; rest &= rest - 1) {
      const std::uint32_t y = x & ~(rest & (~rest + 1));
      if (!sys.ContainsMask(y)) {
        report.m2 = false;
        m2_witness.emplace(sys.SetOf(x), sys.SetOf(y));
      }
    }
    if (!report.m2) break;
  }

  m3_witness = FindAugmentationViolation(sys);
  report.m3 = !m3_witness.has_value();

  report.is_independence_system = report.m1 && report.m2;
  report.is_matroid = report.is_independence_system && report.m3;
  if (!report.m1) {
    report.witness_violation.emplace(ElementSet(n), ElementSet(n));
  } else if (!report.m2) {
    report.witness_violation = m2_witness;
  } else if (!report.m3) {
    report.witness_violation = m3_witness;
  }
  return report;
}

std::optional<std::pair<ElementSet, ElementSet>> FindAugmentationViolation(
    const ExplicitSetSystem& sys) {
  for (std::uint32_t x : sys.masks()) {
    for (std::uint32_t y : sys.masks()) {
      if (std::popcount(x) <= std::popcount(y)) continue;
      bool augmentable = false;
      for (std::uint32_t d = x & ~y; d != 0 && !augmentable; d &= d - 1) {
        augmentable = sys.ContainsMask(y | (d & (~d + 1)));
      }
      if (!augmentable) return std::make_pair(sys.SetOf(x), sys.SetOf(y));
    }
  }
  return std::nullopt;
}

bool IsIndependenceSystem(const ExplicitSetSystem& sys) {
  if (!sys.ContainsMask(0)) return false;
  for (std::uint32_t x : sys.masks()) {
    for (std::uint32_t rest = x; rest != 0; rest &= rest - 1) {
      if (!sys.ContainsMask(x & ~(rest & (~rest + 1)))) return false;
    }
  }
  return true;
}

std::vector<ElementSet> BasesOf(const ExplicitSetSystem& sys,
                                const ElementSet& x) {
  RequireSameUniverse(sys, x);
  const auto xm = static_cast<std::uint32_t>(x.ToMask());
  std::vector<std::uint32_t> inside;
  for (std::uint32_t m : sys.masks()) {
    if ((m & ~xm) == 0) inside.push_back(m);
  }
  std::vector<ElementSet> bases;
  for (std::uint32_t b : inside) {
    const bool maximal = std::none_of(
        inside.begin(), inside.end(),
        [b](std::uint32_t other) { return other != b && (b & ~other) == 0; });
    if (maximal) bases.push_back(sys.SetOf(b));
  }
  return bases;
}

std::vector<ElementSet> CircuitsOf(const ExplicitSetSystem& sys) {
  RequireIndependenceSystem(sys, "CircuitsOf");
  std::vector<std::uint32_t> circuits;
  for (std::uint32_t m = 0; m <= sys.FullMask(); ++m) {
    if (sys.ContainsMask(m)) continue;
    bool minimal = true;
    for (std::uint32_t rest = m; rest != 0 && minimal; rest &= rest - 1) {
      minimal = sys.ContainsMask(m & ~(rest & (~rest + 1)));
    }
    if (minimal) circuits.push_back(m);
  }
  std::sort(circuits.begin(), circuits.end(),
            [](std::uint32_t a, std::uint32_t b) { return CardinalityLexLess(a, b); });
  std::vector<ElementSet> out;
  for (std::uint32_t c : circuits) out.push_back(sys.SetOf(c));
  return out;
}

RankPair RankPairOf(const ExplicitSetSystem& sys, const ElementSet& x) {
  const std::vector<ElementSet> bases = BasesOf(sys, x);
  if (bases.empty()) {
    throw ContractError("set has no basis: the family does not contain the empty set");
  }
  RankPair rp{std::numeric_limits<std::size_t>::max(), 0};
  for (const ElementSet& b : bases) {
    rp.lower = std::min(rp.lower, b.size());
    rp.upper = std::max(rp.upper, b.size());
  }
  return rp;
}

Rational Frac(std::int64_t a, std::int64_t b) {
  if (a == b) return Rational(1);
  if (b == 0) throw std::domain_error("Frac: nonzero numerator over zero");
  return Rational(a, b);
}

Rational RankQuotient(const ExplicitSetSystem& sys) {
  RequireIndependenceSystem(sys, "RankQuotient");
  const auto& masks = sys.masks();
  const std::vector<std::uint32_t> ext = ExtensionMasks(sys);
  Rational q(1);
  for (std::uint32_t x = 0;; ++x) {
    // In a downward-closed family, B is a basis of X iff B is inside X and
    // no single element of X extends it.
    std::size_t lower = std::numeric_limits<std::size_t>::max();
    std::size_t upper = 0;
    for (std::size_t k = 0; k < masks.size(); ++k) {
      if ((masks[k] & ~x) != 0 || (ext[k] & x) != 0) continue;
      const auto card = static_cast<std::size_t>(std::popcount(masks[k]));
      lower = std::min(lower, card);
      upper = std::max(upper, card);
    }
    q = std::min(q, Frac(static_cast<std::int64_t>(lower),
                         static_cast<std::int64_t>(upper)));
    if (x == sys.FullMask()) break;
  }
  return q;
}

ExplicitSetSystem Dual(const ExplicitSetSystem& sys) {
  RequireIndependenceSystem(sys, "Dual");
  const std::uint32_t full = sys.FullMask();
  std::vector<bool> seen(std::size_t{full} + 1, false);
  std::vector<std::uint32_t> family;
  for (const ElementSet& basis : BasesOf(sys, sys.carrier().FullSet())) {
    const std::uint32_t avoid = full & ~static_cast<std::uint32_t>(basis.ToMask());
    // Every subset of the complement of a basis.
    for (std::uint32_t s = avoid;; s = (s - 1) & avoid) {
      if (!seen[s]) {
        seen[s] = true;
        family.push_back(s);
      }
      if (s == 0) break;
    }
  }
  return ExplicitSetSystem(sys.carrier(), std::move(family));
}

ElementSet FundamentalCircuit(const OracleSystem& sys, const ElementSet& x,
                              Index y) {
  if (x.universe() != sys.size() || y >= sys.size()) {
    throw ContractError("FundamentalCircuit: arguments outside the carrier");
  }
  if (x.contains(y)) {
    throw ContractError("FundamentalCircuit: y already belongs to X");
  }
  if (!sys.IsIndependent(x)) {
    throw ContractError("FundamentalCircuit: X is not independent");
  }
  const ElementSet xy = x.With(y);
  if (sys.IsIndependent(xy)) {
    throw ContractError("FundamentalCircuit: X + y is independent");
  }
  ElementSet circuit(sys.size());
  xy.ForEach([&](Index z) {
    if (sys.IsIndependent(xy.Without(z))) circuit.insert(z);
  });
  return circuit;
}

std::size_t GreedyRank(const OracleSystem& sys, const ElementSet& q) {
  if (q.universe() != sys.size()) {
    throw ContractError("GreedyRank: set is not over the system's carrier");
  }
  ElementSet acc(sys.size());
  q.ForEach([&](Index e) {
    if (sys.IsIndependent(acc.With(e))) acc.insert(e);
  });
  return acc.size();
}

}  // namespace matroidkit
