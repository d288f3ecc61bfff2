// Copyright 2026 The relchoice Authors
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

// Choice sets of a dominance relation: chains, upper bounds, maximal
// elements, undominated sets, top cycles and the Schwartz set (GOCHA).
//
// Conventions:
//   * (u, v) in R is the edge u -> v, "u weakly dominates v".
//   * Y is undominated when no element outside Y dominates a member of Y.
//     The minimal undominated sets are the source components of the
//     condensation.
//   * A top cycle is a cycle (members pairwise mutually reachable) that is
//     undominated. A singleton {x} without x reaching itself is admitted as a
//     trivial cycle.
//   * Strong top cycles are the top cycles of the asymmetric part P(R).
//
// Lists of sets are returned in lexicographic order.

#ifndef RELCHOICE_SOLUTIONS_HPP_
#define RELCHOICE_SOLUTIONS_HPP_

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "relchoice/relation.hpp"
#include "relchoice/types.hpp"

namespace relchoice {

enum class Variant {
  kGocha,   // minimal R-undominated sets
  kStrict,  // minimal P(R)-undominated sets
};

std::string_view to_string(Variant v);

// Members of a chain with, for each pair of distinct members u < v, the
// direction of R that makes them comparable (u, v) or (v, u).
struct Chain {
  IndexSet members;
  std::vector<IndexPair> order_witness;
};

struct ChainCheck {
  bool holds = false;
  Chain chain;                              // filled when holds
  std::optional<IndexPair> incomparable;    // filled otherwise
  explicit operator bool() const { return holds; }
};

// Distinct members must be comparable; the empty set and singletons are
// chains. Throws InvalidInput on out-of-range indices.
ChainCheck is_chain(const Relation& r, std::span<const Index> subset);

// All x with x R y (x P(R) y when `strict`) for every y in `chain`; x may
// belong to the chain. Throws InvalidInput when `chain` is not an R-chain.
IndexSet upper_bounds(const Relation& r, std::span<const Index> chain,
                      bool strict);

// Elements that nothing strictly dominates.
IndexSet maximal_elements(const Relation& r);

struct UndominatedCheck {
  bool holds = false;
  std::optional<IndexPair> dominating_pair;  // (y, x): y outside, x inside
  explicit operator bool() const { return holds; }
};

// Throws InvalidInput for an empty or out-of-range set.
UndominatedCheck is_undominated(const Relation& r, std::span<const Index> y);

// Source components of the condensation. Throws InvalidInput on an empty
// universe.
std::vector<IndexSet> minimal_undominated_sets(const Relation& r);

// A cycle with, for every ordered pair of members, a shortest R-path. The
// paths are stored as breadth-first predecessor tables, one per source
// member; path(u, v) expands one.
class CycleWitness {
 public:
  CycleWitness(const Relation& r, IndexSet members);

  const IndexSet& members() const { return members_; }
  // Singleton whose element does not reach itself.
  bool trivial() const { return trivial_; }

  // Path u = p0, p1, ..., pk = v with k >= 1 and each (p_i, p_i+1) in R.
  // Empty when no such path exists (only for trivial witnesses).
  std::vector<Index> path(Index from, Index to) const;

  // Re-checks every certificate path against `r`.
  bool verify(const Relation& r) const;

 private:
  IndexSet members_;
  bool trivial_ = false;
  // predecessor_[i][j]: predecessor of members_[j] on the shortest path
  // from members_[i], or npos.
  std::vector<std::vector<Index>> predecessor_;
};

std::vector<CycleWitness> top_cycles(const Relation& r);
std::vector<CycleWitness> strong_top_cycles(const Relation& r);

// Union of the minimal undominated sets of R (kGocha) or P(R) (kStrict).
IndexSet schwartz(const Relation& r, Variant variant);

// GOCHA choice from A: the Schwartz set of R restricted to A, in original
// indices. Throws InvalidInput when A is empty.
IndexSet gocha_choice(const Relation& r, std::span<const Index> a);

struct SolutionReport {
  IndexSet maximal;
  std::vector<IndexSet> minimal_undominated;
  std::vector<CycleWitness> top_cycles;
  std::vector<CycleWitness> strong_top_cycles;
  IndexSet schwartz_gocha;
  IndexSet schwartz_strict;
};

SolutionReport solve(const Relation& r);

// Classification of a minimal undominated set against the dichotomy
// "undominated element or strong top cycle".
enum class DebKind {
  kSingleton,       // an undominated element
  kStrongTopCycle,  // a top cycle of P(R) with at least two members
  kViolation,       // neither
};

std::string_view to_string(DebKind kind);

struct DebEntry {
  IndexSet set;
  DebKind kind = DebKind::kViolation;
  // For violations: two members that are not mutually P(R)-reachable, or an
  // outside element strictly dominating a member.
  std::optional<IndexPair> witness;
  bool witness_is_outside_dominator = false;
};

struct DebReport {
  // Minimal P(R)-undominated sets.
  std::vector<DebEntry> strict;
  // Minimal R-undominated sets checked against the same dichotomy.
  std::vector<DebEntry> literal;

  std::size_t strict_violations() const;
  std::size_t literal_violations() const;
};

DebReport deb_decompose(const Relation& r);

}  // namespace relchoice

#endif  // RELCHOICE_SOLUTIONS_HPP_
