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

// Finite, constructive counterparts of Zorn-style existence arguments for
// arbitrary (not necessarily transitive) relations.
//
// On a finite universe the towers of such proofs become plain iteration of
// an expansive map that adds at most one element per step. This header
// provides that iteration with its side conditions checked at run time, the
// chain-extension tower g(D) = D + {f(D*)}, conforming chains in a partial
// order, an exhaustive check of the "every chain is bounded" hypothesis, and
// direct extraction of a top cycle through a maximal element of the strict
// closure order. Ties are always broken by the smallest element index.

#ifndef RELCHOICE_ZORN_HPP_
#define RELCHOICE_ZORN_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "relchoice/quotient.hpp"
#include "relchoice/relation.hpp"
#include "relchoice/types.hpp"

namespace relchoice {

// One application of a tower map: `candidate_set` is the pool the next
// element is drawn from, `added` the element drawn (absent at the fixed
// point).
struct TowerStep {
  IndexSet current;
  std::optional<Index> added;
  IndexSet candidate_set;
};

struct ZornRun {
  std::vector<TowerStep> steps;
  // extend_chain: the terminal R-chain.
  // trace_top_cycle: the conforming chain of the strict closure order that
  // climbs to the pivot.
  IndexSet terminal_chain;
  std::optional<Index> pivot;
  IndexSet extracted;
};

struct ConformingChain {
  // Strictly increasing in the partial order.
  std::vector<Index> sequence;
  // below[i] = members of the chain strictly below sequence[i].
  std::vector<IndexSet> below;
};

using SetMap = std::function<IndexSet(const IndexSet&)>;

struct FixedPoint {
  IndexSet set;
  std::size_t iterations = 0;  // number of growing steps taken
};

// Iterates `g` from `start` until g(D) == D. Every step must satisfy
// D subset of g(D) and |g(D) - D| <= 1 over the universe 0..n-1; a breach
// raises ContractViolation, more than `cap` growing steps BudgetExceeded.
FixedPoint rudin_fixed_point(std::size_t n, const SetMap& g, IndexSet start,
                             std::size_t cap);

// D -> D + {f(D*)} where D* holds the upper bounds of D outside D; D itself
// when D* is empty.
SetMap chain_extension_step(const Relation& r, ChoiceFunction f);

// Runs the chain-extension tower from the empty chain. ContractViolation
// when `f` chooses outside D*.
ZornRun extend_chain(const Relation& r, const ChoiceFunction& f);

// Partial choice on chains: a strict upper bound of the chain, or nothing.
using ChainSelector = std::function<std::optional<Index>(const IndexSet&)>;

// Smallest-index strict upper bound in `po`.
ChainSelector least_strict_upper_bound(const Relation& po);

// A0 = {}, A(k+1) = A(k) + {f(A(k))} while f answers. Throws InvalidInput
// unless `po` is a partial order, ContractViolation when f answers with
// something that is not a strict upper bound, stays silent although a strict
// upper bound exists, or fails to reproduce a member from its predecessors.
ConformingChain conforming_chain(const Relation& po, const ChainSelector& f);

struct HypothesisCheck {
  bool holds = false;
  // The first chain (depth-first, ascending indices) with no upper bound.
  std::optional<IndexSet> unbounded_chain;
  std::size_t chains_examined = 0;
};

constexpr std::size_t kDefaultChainGuard = 20;

// Whether every R-chain, the empty one included, has an R-upper bound.
// BudgetExceeded when the universe is larger than `guard`.
HypothesisCheck check_hypothesis(const Relation& r,
                                 std::size_t guard = kDefaultChainGuard);

// Picks the smallest maximal element x* of strict_closure_order(R). Returns
// {x*} if nothing outside dominates it, otherwise the elements mutually
// reachable with x*. The result is always a top cycle. InvalidInput on an
// empty universe.
IndexSet find_top_cycle(const Relation& r);

// find_top_cycle with its trace: the conforming chain to x*, then the tower
// that absorbs outside dominators starting from {x*}.
ZornRun trace_top_cycle(const Relation& r);

// Greedy removal of elements from X while keeping the rest undominated and
// the removed part a chain of P(closure(R)).
struct UndominatedPeel {
  IndexSet removed;
  IndexSet remaining;
  // The remaining set is nonempty and a minimal undominated set. Not
  // guaranteed by the peel; reported as observed.
  bool remaining_is_minimal = false;
  std::size_t iterations = 0;
};

struct TheoremReport {
  HypothesisCheck hypothesis;
  std::vector<IndexSet> top_cycles;
  IndexSet found;
  bool found_is_top_cycle = false;
  // Top cycles exist and `found` is one of them.
  bool conclusion_holds = false;
  // The implication hypothesis => conclusion is satisfied.
  bool consistent = false;
  ZornRun chain_run;
  ZornRun top_cycle_run;
  UndominatedPeel peel;
};

TheoremReport verify_theorem(const Relation& r,
                             std::size_t guard = kDefaultChainGuard);

}  // namespace relchoice

#endif  // RELCHOICE_ZORN_HPP_
