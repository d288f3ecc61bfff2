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

#include "relchoice/zorn.hpp"

#include <algorithm>
#include <memory>
#include <string>

#include "relchoice/solutions.hpp"

namespace relchoice {
namespace {

IndexSet external_upper_bounds(const Relation& r, const IndexSet& chain) {
  IndexSet bounds = upper_bounds(r, chain, /*strict=*/false);
  IndexSet outside;
  std::set_difference(bounds.begin(), bounds.end(), chain.begin(), chain.end(),
                      std::back_inserter(outside));
  return outside;
}

IndexSet with(IndexSet set, Index x) {
  set.insert(std::upper_bound(set.begin(), set.end(), x), x);
  return set;
}

bool contains(const IndexSet& set, Index x) {
  return std::binary_search(set.begin(), set.end(), x);
}

bool strictly_above(const Relation& po, Index x, Index y) {
  return po.has(x, y) && !po.has(y, x);
}

bool is_strict_upper_bound(const Relation& po, Index x, const IndexSet& chain) {
  return std::all_of(chain.begin(), chain.end(),
                     [&](Index y) { return strictly_above(po, x, y); });
}

// Smallest element nobody strictly dominates in the strict closure order.
Index closure_maximal_pivot(const Relation& order) {
  for (Index x = 0; x < order.size(); ++x) {
    bool dominated = false;
    for (Index y = 0; y < order.size() && !dominated; ++y) {
      dominated = y != x && order.has(y, x);
    }
    if (!dominated) return x;
  }
  // Unreachable: a finite partial order has a maximal element.
  throw ContractViolation("strict closure order has no maximal element");
}

// Outside elements dominating some member of `set`.
IndexSet outside_dominators(const Relation& r, const IndexSet& set) {
  Bits inside = to_bits(set, r.size());
  IndexSet out;
  for (Index y = 0; y < r.size(); ++y) {
    if (inside[y]) continue;
    if (r.row(y).intersects(inside)) out.push_back(y);
  }
  return out;
}

// Undominated, with the empty set counting as undominated.
bool undominated_or_empty(const Relation& r, const IndexSet& set) {
  return set.empty() || outside_dominators(r, set).empty();
}

UndominatedPeel peel_undominated(const Relation& r) {
  const std::size_t n = r.size();
  const Relation strict_closure = asymmetric_part(transitive_closure(r));

  auto admissible = [&](const IndexSet& removed) {
    // Distinct removed elements must be comparable in P(closure(R)).
    for (std::size_t i = 0; i < removed.size(); ++i) {
      for (std::size_t j = i + 1; j < removed.size(); ++j) {
        if (!strict_closure.has(removed[i], removed[j]) &&
            !strict_closure.has(removed[j], removed[i])) {
          return false;
        }
      }
    }
    Bits rest(n);
    rest.set();
    for (Index x : removed) rest.reset(x);
    return undominated_or_empty(r, to_index_set(rest));
  };

  SetMap step = [&](const IndexSet& removed) {
    for (Index x = 0; x < n; ++x) {
      if (contains(removed, x)) continue;
      IndexSet grown = with(removed, x);
      if (admissible(grown)) return grown;
    }
    return removed;
  };

  const FixedPoint fixed = rudin_fixed_point(n, step, {}, n);
  UndominatedPeel peel;
  peel.removed = fixed.set;
  peel.iterations = fixed.iterations;
  Bits rest(n);
  rest.set();
  for (Index x : peel.removed) rest.reset(x);
  peel.remaining = to_index_set(rest);
  if (!peel.remaining.empty()) {
    const auto minimal = minimal_undominated_sets(r);
    peel.remaining_is_minimal =
        std::find(minimal.begin(), minimal.end(), peel.remaining) !=
        minimal.end();
  }
  return peel;
}

}  // namespace

FixedPoint rudin_fixed_point(std::size_t n, const SetMap& g, IndexSet start,
                             std::size_t cap) {
  FixedPoint result{normalize(start, n), 0};
  while (true) {
    IndexSet next = normalize(g(result.set), n);
    if (!std::includes(next.begin(), next.end(), result.set.begin(),
                       result.set.end())) {
      throw ContractViolation("tower map is not expansive");
    }
    if (next.size() > result.set.size() + 1) {
      throw ContractViolation("tower map added more than one element");
    }
    if (next.size() == result.set.size()) return result;
    if (result.iterations == cap) {
      throw BudgetExceeded("tower did not stabilize within " +
                           std::to_string(cap) + " steps");
    }
    result.set = std::move(next);
    ++result.iterations;
  }
}

SetMap chain_extension_step(const Relation& r, ChoiceFunction f) {
  auto shared = std::make_shared<const Relation>(r);
  return [shared, f = std::move(f)](const IndexSet& chain) {
    IndexSet candidates = external_upper_bounds(*shared, chain);
    if (candidates.empty()) return chain;
    return with(chain, f.select(candidates));
  };
}

ZornRun extend_chain(const Relation& r, const ChoiceFunction& f) {
  if (f.domain_size() != r.size()) {
    throw InvalidInput("choice function domain does not match the relation");
  }
  ZornRun run;
  IndexSet chain;
  while (true) {
    IndexSet candidates = external_upper_bounds(r, chain);
    if (candidates.empty()) {
      run.steps.push_back({chain, std::nullopt, {}});
      break;
    }
    const Index chosen = f.select(candidates);
    run.steps.push_back({chain, chosen, candidates});
    chain = with(std::move(chain), chosen);
  }
  run.terminal_chain = std::move(chain);
  return run;
}

ChainSelector least_strict_upper_bound(const Relation& po) {
  auto shared = std::make_shared<const Relation>(po);
  return [shared](const IndexSet& chain) -> std::optional<Index> {
    for (Index x = 0; x < shared->size(); ++x) {
      if (is_strict_upper_bound(*shared, x, chain)) return x;
    }
    return std::nullopt;
  };
}

ConformingChain conforming_chain(const Relation& po, const ChainSelector& f) {
  if (!classify(po).is_partial_order) {
    throw InvalidInput("conforming chains require a partial order");
  }
  ConformingChain result;
  IndexSet chain;
  while (true) {
    const std::optional<Index> next = f(chain);
    if (!next) {
      for (Index x = 0; x < po.size(); ++x) {
        if (is_strict_upper_bound(po, x, chain)) {
          throw ContractViolation("chain selector is silent although " +
                                  std::to_string(x) +
                                  " is a strict upper bound");
        }
      }
      break;
    }
    if (*next >= po.size() || !is_strict_upper_bound(po, *next, chain)) {
      throw ContractViolation("chain selector returned " +
                              std::to_string(*next) +
                              ", which is not a strict upper bound");
    }
    result.sequence.push_back(*next);
    chain = with(std::move(chain), *next);
  }

  for (Index x : result.sequence) {
    IndexSet below;
    for (Index y : chain) {
      if (strictly_above(po, x, y)) below.push_back(y);
    }
    if (f(below) != std::optional<Index>(x)) {
      throw ContractViolation("chain selector does not reproduce " +
                              std::to_string(x) + " from its predecessors");
    }
    result.below.push_back(std::move(below));
  }
  return result;
}

HypothesisCheck check_hypothesis(const Relation& r, std::size_t guard) {
  const std::size_t n = r.size();
  if (n > guard) {
    throw BudgetExceeded("chain enumeration is limited to " +
                         std::to_string(guard) + " elements");
  }
  const std::vector<Bits> dominators = detail::transpose(r.rows());
  std::vector<Bits> comparable(n);
  for (Index u = 0; u < n; ++u) comparable[u] = r.row(u) | dominators[u];

  HypothesisCheck check;
  IndexSet chain;
  // Depth-first over chains in ascending index order. Upper-bound sets only
  // shrink as a chain grows.
  std::function<bool(const Bits&, const Bits&)> visit =
      [&](const Bits& candidates, const Bits& bounds) {
        ++check.chains_examined;
        if (bounds.none()) {
          check.unbounded_chain = chain;
          return false;
        }
        Bits rest = candidates;
        for (auto c = rest.find_first(); c != Bits::npos;
             c = rest.find_next(c)) {
          rest.reset(c);
          chain.push_back(c);
          const bool ok = visit(rest & comparable[c], bounds & dominators[c]);
          chain.pop_back();
          if (!ok) return false;
        }
        return true;
      };

  Bits all(n);
  all.set();
  check.holds = visit(all, all);
  return check;
}

IndexSet find_top_cycle(const Relation& r) {
  if (r.size() == 0) throw InvalidInput("relation has an empty universe");
  const Index pivot = closure_maximal_pivot(strict_closure_order(r));
  if (outside_dominators(r, {pivot}).empty()) return {pivot};
  const Relation closure = transitive_closure(r);
  IndexSet cycle;
  for (Index y = 0; y < r.size(); ++y) {
    if (y == pivot || (closure.has(pivot, y) && closure.has(y, pivot))) {
      cycle.push_back(y);
    }
  }
  return cycle;
}

ZornRun trace_top_cycle(const Relation& r) {
  if (r.size() == 0) throw InvalidInput("relation has an empty universe");
  const Relation order = strict_closure_order(r);
  const Index pivot = closure_maximal_pivot(order);

  // Climb to the pivot through elements below or equal to it.
  const ConformingChain climb = conforming_chain(
      order, [&order, pivot](const IndexSet& chain) -> std::optional<Index> {
        for (Index x = 0; x < order.size(); ++x) {
          if (order.has(pivot, x) && is_strict_upper_bound(order, x, chain)) {
            return x;
          }
        }
        return std::nullopt;
      });

  ZornRun run;
  run.pivot = pivot;
  run.terminal_chain = normalize(climb.sequence, r.size());
  IndexSet current{pivot};
  while (true) {
    IndexSet dominators = outside_dominators(r, current);
    if (dominators.empty()) {
      run.steps.push_back({current, std::nullopt, {}});
      break;
    }
    const Index added = dominators.front();
    run.steps.push_back({current, added, std::move(dominators)});
    current = with(std::move(current), added);
  }
  run.extracted = std::move(current);
  return run;
}

TheoremReport verify_theorem(const Relation& r, std::size_t guard) {
  if (r.size() == 0) throw InvalidInput("relation has an empty universe");
  TheoremReport report;
  report.hypothesis = check_hypothesis(r, guard);
  report.top_cycles = minimal_undominated_sets(r);
  report.found = find_top_cycle(r);
  report.found_is_top_cycle =
      std::find(report.top_cycles.begin(), report.top_cycles.end(),
                report.found) != report.top_cycles.end();
  report.conclusion_holds =
      !report.top_cycles.empty() && report.found_is_top_cycle;
  report.consistent = !report.hypothesis.holds || report.conclusion_holds;
  report.chain_run = extend_chain(r, ChoiceFunction::min_index(r.size()));
  report.top_cycle_run = trace_top_cycle(r);
  report.peel = peel_undominated(r);
  return report;
}

}  // namespace relchoice
