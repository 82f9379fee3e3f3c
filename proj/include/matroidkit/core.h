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

// Set systems over a finite carrier: explicit families and oracle-backed
// systems, axiom checks, bases, circuits, ranks, the rank quotient and duals.
//
// Elements are identified by string ids. A Carrier fixes the canonical
// (lexicographic) order of its ids, and every subset is an ElementSet of
// indices into that order.

#ifndef MATROIDKIT_CORE_H_
#define MATROIDKIT_CORE_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>
#include <boost/rational.hpp>

namespace matroidkit {

using Index = std::size_t;
using Rational = boost::rational<std::int64_t>;

// Malformed input: unknown elements, bad tokens, members outside the carrier.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A documented precondition or oracle contract does not hold.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Runtime self-checking of oracle contracts and loop invariants.
enum class ContractChecks { kOff, kOn };

// "p" for integers, "p/q" otherwise, always in lowest terms.
std::string FormatRational(const Rational& value);

// A subset of a carrier, stored as a bitset over canonical indices.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : bits_(universe) {}

  static ElementSet Of(std::size_t universe, std::initializer_list<Index> members);
  static ElementSet FromMask(std::size_t universe, std::uint64_t mask);
  static ElementSet Full(std::size_t universe);

  std::size_t universe() const { return bits_.size(); }
  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  bool contains(Index i) const { return i < bits_.size() && bits_.test(i); }

  void insert(Index i) { bits_.set(i); }
  void erase(Index i) { bits_.reset(i); }
  ElementSet With(Index i) const;
  ElementSet Without(Index i) const;
  ElementSet Complement() const;

  bool IsSubsetOf(const ElementSet& other) const {
    return bits_.is_subset_of(other.bits_);
  }
  bool Intersects(const ElementSet& other) const {
    return bits_.intersects(other.bits_);
  }

  // Members in ascending index order.
  std::vector<Index> Members() const;
  // Requires universe() <= 64.
  std::uint64_t ToMask() const;

  template <typename Fn>
  void ForEach(Fn&& fn) const {
    for (auto i = bits_.find_first(); i != Bits::npos; i = bits_.find_next(i)) {
      fn(static_cast<Index>(i));
    }
  }

  friend ElementSet operator|(const ElementSet& a, const ElementSet& b);
  friend ElementSet operator&(const ElementSet& a, const ElementSet& b);
  friend ElementSet operator-(const ElementSet& a, const ElementSet& b);
  bool operator==(const ElementSet& other) const = default;

 private:
  using Bits = boost::dynamic_bitset<std::uint64_t>;
  Bits bits_;
};

// Cardinality first, then lexicographic on ascending member lists. This is
// the tie-break order used throughout the library.
bool CardinalityLexLess(const ElementSet& a, const ElementSet& b);
bool CardinalityLexLess(std::uint64_t a, std::uint64_t b);

struct CardinalityLexOrder {
  bool operator()(const ElementSet& a, const ElementSet& b) const {
    return CardinalityLexLess(a, b);
  }
};

// The finite ground set. Ids are sorted lexicographically; an element's
// index is its position in that order.
class Carrier {
 public:
  Carrier() = default;
  // Throws InputError on empty ids, ids containing whitespace, or duplicates.
  explicit Carrier(std::vector<std::string> ids);

  std::size_t size() const { return ids_.size(); }
  const std::string& id(Index i) const { return ids_.at(i); }
  const std::vector<std::string>& ids() const { return ids_; }

  std::optional<Index> Find(std::string_view id) const;
  Index IndexOf(std::string_view id) const;
  ElementSet Subset(const std::vector<std::string>& ids) const;
  ElementSet EmptySet() const { return ElementSet(size()); }
  ElementSet FullSet() const { return ElementSet::Full(size()); }

  std::vector<std::string> Names(const ElementSet& s) const;
  // Human-readable "{a, b}" form for diagnostics.
  std::string Format(const ElementSet& s) const;

  bool operator==(const Carrier& other) const = default;

 private:
  std::vector<std::string> ids_;
};

class OracleSystem;

// A set system given by its full family of independent (feasible) sets.
// The family is canonicalised: deduplicated and sorted by CardinalityLexLess.
// Exhaustive checks are exponential, so the carrier is capped at kMaxCarrier.
class ExplicitSetSystem {
 public:
  static constexpr std::size_t kMaxCarrier = 20;

  ExplicitSetSystem(Carrier carrier, const std::vector<ElementSet>& family);
  ExplicitSetSystem(Carrier carrier, std::vector<std::uint32_t> masks);

  // Throws InputError when a member names an element outside the carrier.
  static ExplicitSetSystem FromNames(
      std::vector<std::string> carrier,
      const std::vector<std::vector<std::string>>& family);
  // Materialises the family of an oracle by evaluating every subset.
  static ExplicitSetSystem FromOracle(const OracleSystem& oracle);

  const Carrier& carrier() const { return carrier_; }
  std::size_t carrier_size() const { return carrier_.size(); }
  std::size_t family_size() const { return masks_.size(); }

  bool Contains(const ElementSet& s) const;
  bool ContainsMask(std::uint32_t mask) const { return member_[mask]; }
  const std::vector<std::uint32_t>& masks() const { return masks_; }
  std::vector<ElementSet> Family() const;

  ElementSet SetOf(std::uint32_t mask) const {
    return ElementSet::FromMask(carrier_.size(), mask);
  }
  std::uint32_t FullMask() const {
    return static_cast<std::uint32_t>((std::uint64_t{1} << carrier_.size()) - 1);
  }

  // Full independence oracle backed by the family table.
  OracleSystem ToOracle() const;

  bool operator==(const ExplicitSetSystem& other) const {
    return carrier_ == other.carrier_ && masks_ == other.masks_;
  }

 private:
  void Canonicalise();

  Carrier carrier_;
  std::vector<std::uint32_t> masks_;
  std::vector<bool> member_;
};

// A set system accessed only through oracles. The weak oracle answers
// "is X + e independent" under the promise that X is independent and e is
// not in X. The circuit oracle returns C(X, y) - {y} under the promise that
// X is independent and X + y is dependent. Both are optional.
class OracleSystem {
 public:
  using IndepFn = std::function<bool(const ElementSet&)>;
  using WeakFn = std::function<bool(const ElementSet&, Index)>;
  using CircuitFn = std::function<ElementSet(const ElementSet&, Index)>;

  OracleSystem(Carrier carrier, IndepFn indep, WeakFn weak = {},
               CircuitFn circuit = {});

  const Carrier& carrier() const { return carrier_; }
  std::size_t size() const { return carrier_.size(); }

  bool IsIndependent(const ElementSet& s) const { return indep_(s); }
  bool has_weak_oracle() const { return static_cast<bool>(weak_); }
  bool has_circuit_oracle() const { return static_cast<bool>(circuit_); }

  // Weak oracle when available, full oracle on X + e otherwise.
  bool CanExtend(const ElementSet& x, Index e) const;
  bool WeakIndependent(const ElementSet& x, Index e) const;
  ElementSet CircuitWithout(const ElementSet& x, Index y) const;

  const IndepFn& indep_fn() const { return indep_; }
  const WeakFn& weak_fn() const { return weak_; }
  const CircuitFn& circuit_fn() const { return circuit_; }

 private:
  Carrier carrier_;
  IndepFn indep_;
  WeakFn weak_;
  CircuitFn circuit_;
};

// Result of checking (M1) empty set, (M2) downward closure, (M3) augmentation.
// The witness pair depends on the first failing axiom:
//   M1: (empty, empty); M2: (member X, missing subset Y);
//   M3: (larger X, smaller Y) with no x in X - Y such that Y + x is a member.
struct AxiomReport {
  bool m1 = false;
  bool m2 = false;
  bool m3 = false;
  bool is_independence_system = false;
  bool is_matroid = false;
  std::optional<std::pair<ElementSet, ElementSet>> witness_violation;
};

AxiomReport CheckAxioms(const ExplicitSetSystem& sys);
// First pair (X, Y) of members with |X| > |Y| where no x in X - Y extends Y.
std::optional<std::pair<ElementSet, ElementSet>> FindAugmentationViolation(
    const ExplicitSetSystem& sys);
bool IsIndependenceSystem(const ExplicitSetSystem& sys);

// Inclusion-maximal members of the family contained in x, sorted.
std::vector<ElementSet> BasesOf(const ExplicitSetSystem& sys, const ElementSet& x);

// Minimal dependent sets, sorted. Requires an independence system.
std::vector<ElementSet> CircuitsOf(const ExplicitSetSystem& sys);

struct RankPair {
  std::size_t lower = 0;
  std::size_t upper = 0;
  bool operator==(const RankPair&) const = default;
};

// Smallest and largest basis cardinality of x.
RankPair RankPairOf(const ExplicitSetSystem& sys, const ElementSet& x);

// 1 when a == b (including 0/0), a/b otherwise. Throws std::domain_error for
// a nonzero numerator over zero.
Rational Frac(std::int64_t a, std::int64_t b);

// min over X of Frac(lower rank, upper rank). Requires an independence system.
Rational RankQuotient(const ExplicitSetSystem& sys);

// F is independent in the dual iff it avoids some basis of the carrier.
ExplicitSetSystem Dual(const ExplicitSetSystem& sys);

// The unique circuit inside x + y, for matroids. Throws ContractError unless
// x is independent, y is outside x and x + y is dependent.
ElementSet FundamentalCircuit(const OracleSystem& sys, const ElementSet& x, Index y);

// Size of the independent subset of q built by single-pass insertion in
// canonical order. Equals the rank of q when sys is a matroid.
std::size_t GreedyRank(const OracleSystem& sys, const ElementSet& q);

}  // namespace matroidkit

#endif  // MATROIDKIT_CORE_H_
