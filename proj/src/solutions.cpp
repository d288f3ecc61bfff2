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

#include "relchoice/solutions.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

#include "relchoice/quotient.hpp"

namespace relchoice {
namespace {

constexpr Index kNone = std::numeric_limits<Index>::max();

std::vector<DebEntry> classify_for_deb(const Relation& strict,
                                       const Relation& strict_closure,
                                       const std::vector<IndexSet>& sets) {
  std::vector<DebEntry> out;
  out.reserve(sets.size());
  for (const IndexSet& set : sets) {
    DebEntry entry{set, DebKind::kViolation, std::nullopt, false};
    if (set.size() == 1) {
      entry.kind = DebKind::kSingleton;
      out.push_back(std::move(entry));
      continue;
    }
    for (Index u : set) {
      for (Index v : set) {
        if (!strict_closure.has(u, v)) {
          entry.witness = IndexPair{u, v};
          break;
        }
      }
      if (entry.witness) break;
    }
    if (!entry.witness) {
      auto check = is_undominated(strict, set);
      if (!check) {
        entry.witness = check.dominating_pair;
        entry.witness_is_outside_dominator = true;
      }
    }
    if (!entry.witness) entry.kind = DebKind::kStrongTopCycle;
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::kGocha:
      return "gocha";
    case Variant::kStrict:
      return "strict";
  }
  return "?";
}

std::string_view to_string(DebKind kind) {
  switch (kind) {
    case DebKind::kSingleton:
      return "singleton";
    case DebKind::kStrongTopCycle:
      return "strong_top_cycle";
    case DebKind::kViolation:
      return "violation";
  }
  return "?";
}

ChainCheck is_chain(const Relation& r, std::span<const Index> subset) {
  const IndexSet members = normalize(subset, r.size());
  ChainCheck check;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const Index u = members[i];
      const Index v = members[j];
      if (r.has(u, v)) {
        check.chain.order_witness.emplace_back(u, v);
      } else if (r.has(v, u)) {
        check.chain.order_witness.emplace_back(v, u);
      } else {
        check.incomparable = IndexPair{u, v};
        check.chain.order_witness.clear();
        return check;
      }
    }
  }
  check.holds = true;
  check.chain.members = members;
  return check;
}

IndexSet upper_bounds(const Relation& r, std::span<const Index> chain,
                      bool strict) {
  auto check = is_chain(r, chain);
  if (!check) {
    throw InvalidInput("upper bounds requested for a set that is not a chain");
  }
  const std::size_t n = r.size();
  Bits bounds(n);
  bounds.set();
  for (Index y : check.chain.members) {
    for (Index x = 0; x < n; ++x) {
      if (!bounds[x]) continue;
      const bool above = r.has(x, y) && !(strict && r.has(y, x));
      if (!above) bounds.reset(x);
    }
  }
  return to_index_set(bounds);
}

IndexSet maximal_elements(const Relation& r) {
  IndexSet out;
  for (Index x = 0; x < r.size(); ++x) {
    bool dominated = false;
    for (Index y = 0; y < r.size() && !dominated; ++y) {
      dominated = r.has(y, x) && !r.has(x, y);
    }
    if (!dominated) out.push_back(x);
  }
  return out;
}

UndominatedCheck is_undominated(const Relation& r, std::span<const Index> y) {
  const IndexSet members = normalize(y, r.size());
  if (members.empty()) throw InvalidInput("undominated check on the empty set");
  const Bits inside = to_bits(members, r.size());
  UndominatedCheck check;
  for (Index x : members) {
    for (Index d = 0; d < r.size(); ++d) {
      if (!inside[d] && r.has(d, x)) {
        check.dominating_pair = IndexPair{d, x};
        return check;
      }
    }
  }
  check.holds = true;
  return check;
}

std::vector<IndexSet> minimal_undominated_sets(const Relation& r) {
  const Partition partition = equivalence_classes(r);
  std::vector<bool> dominated(partition.class_count(), false);
  for (Index u = 0; u < r.size(); ++u) {
    const ClassId cu = partition.class_of(u);
    const Bits& row = r.row(u);
    for (auto v = row.find_first(); v != Bits::npos; v = row.find_next(v)) {
      const ClassId cv = partition.class_of(v);
      if (cu != cv) dominated[cv] = true;
    }
  }
  // Classes are numbered by smallest member, which is lexicographic order
  // for disjoint sets.
  std::vector<IndexSet> out;
  for (ClassId c = 0; c < partition.class_count(); ++c) {
    if (!dominated[c]) out.push_back(partition.members(c));
  }
  return out;
}

CycleWitness::CycleWitness(const Relation& r, IndexSet members)
    : members_(normalize(members, r.size())) {
  const std::size_t k = members_.size();
  std::vector<Index> position(r.size(), kNone);
  for (std::size_t i = 0; i < k; ++i) position[members_[i]] = i;

  predecessor_.assign(k, std::vector<Index>(k, kNone));
  std::deque<Index> queue;
  for (std::size_t s = 0; s < k; ++s) {
    auto& pred = predecessor_[s];
    // The source is not pre-marked, so it is reached only through a cycle
    // and every recorded path has length >= 1.
    queue.assign(1, s);
    while (!queue.empty()) {
      const Index at = queue.front();
      queue.pop_front();
      const Bits& row = r.row(members_[at]);
      for (auto v = row.find_first(); v != Bits::npos; v = row.find_next(v)) {
        const Index j = position[v];
        if (j == kNone || pred[j] != kNone) continue;
        pred[j] = at;
        queue.push_back(j);
      }
    }
  }
  trivial_ = k == 1 && predecessor_[0][0] == kNone;
}

std::vector<Index> CycleWitness::path(Index from, Index to) const {
  auto locate = [&](Index x) {
    auto it = std::lower_bound(members_.begin(), members_.end(), x);
    if (it == members_.end() || *it != x) {
      throw InvalidInput("element " + std::to_string(x) +
                         " is not a member of the cycle");
    }
    return static_cast<Index>(it - members_.begin());
  };
  const Index s = locate(from);
  Index t = locate(to);
  const auto& pred = predecessor_[s];
  if (pred[t] == kNone) return {};
  std::vector<Index> reversed{members_[t]};
  // Walk back until the source is reached by a predecessor link; at most k
  // hops, since BFS predecessors form a tree rooted at the source.
  do {
    t = pred[t];
    reversed.push_back(members_[t]);
  } while (t != s);
  return {reversed.rbegin(), reversed.rend()};
}

bool CycleWitness::verify(const Relation& r) const {
  if (trivial_) return members_.size() == 1 && !r.has(members_[0], members_[0]);
  for (Index u : members_) {
    for (Index v : members_) {
      const auto p = path(u, v);
      if (p.size() < 2 || p.front() != u || p.back() != v) return false;
      for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        if (!r.has(p[i], p[i + 1])) return false;
      }
    }
  }
  return true;
}

std::vector<CycleWitness> top_cycles(const Relation& r) {
  std::vector<CycleWitness> out;
  for (auto& set : minimal_undominated_sets(r)) {
    out.emplace_back(r, std::move(set));
  }
  return out;
}

std::vector<CycleWitness> strong_top_cycles(const Relation& r) {
  return top_cycles(asymmetric_part(r));
}

IndexSet schwartz(const Relation& r, Variant variant) {
  const auto sets = variant == Variant::kGocha
                        ? minimal_undominated_sets(r)
                        : minimal_undominated_sets(asymmetric_part(r));
  IndexSet out;
  for (const auto& set : sets) out.insert(out.end(), set.begin(), set.end());
  std::sort(out.begin(), out.end());
  return out;
}

IndexSet gocha_choice(const Relation& r, std::span<const Index> a) {
  const IndexSet members = normalize(a, r.size());
  if (members.empty()) throw InvalidInput("choice from the empty set");
  IndexSet local = schwartz(restrict(r, members), Variant::kGocha);
  for (Index& i : local) i = members[i];
  return local;
}

SolutionReport solve(const Relation& r) {
  SolutionReport report;
  const Relation strict = asymmetric_part(r);
  report.maximal = maximal_elements(r);
  report.minimal_undominated = minimal_undominated_sets(r);
  report.top_cycles = top_cycles(r);
  report.strong_top_cycles = top_cycles(strict);
  report.schwartz_gocha = schwartz(r, Variant::kGocha);
  report.schwartz_strict = schwartz(r, Variant::kStrict);
  return report;
}

std::size_t DebReport::strict_violations() const {
  return std::count_if(strict.begin(), strict.end(), [](const DebEntry& e) {
    return e.kind == DebKind::kViolation;
  });
}

std::size_t DebReport::literal_violations() const {
  return std::count_if(literal.begin(), literal.end(), [](const DebEntry& e) {
    return e.kind == DebKind::kViolation;
  });
}

DebReport deb_decompose(const Relation& r) {
  const Relation strict = asymmetric_part(r);
  const Relation strict_closure = transitive_closure(strict);
  DebReport report;
  report.strict = classify_for_deb(strict, strict_closure,
                                   minimal_undominated_sets(strict));
  report.literal =
      classify_for_deb(strict, strict_closure, minimal_undominated_sets(r));
  return report;
}

}  // namespace relchoice
