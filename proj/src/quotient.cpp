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

#include "relchoice/quotient.hpp"

#include <algorithm>
#include <limits>
#include <memory>
#include <string>
#include <utility>

namespace relchoice {
namespace {

constexpr std::size_t kUnvisited = std::numeric_limits<std::size_t>::max();

struct Components {
  // Component of each vertex, numbered in Tarjan completion order. A
  // component completes only after every component it reaches, so ascending
  // numbers form a reverse topological order of the condensation.
  std::vector<std::size_t> component;
  std::size_t count = 0;
};

Components tarjan(const std::vector<Bits>& rows) {
  const std::size_t n = rows.size();
  std::vector<std::size_t> order(n, kUnvisited);
  std::vector<std::size_t> low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<Index> stack;
  Components result{std::vector<std::size_t>(n, kUnvisited), 0};
  std::size_t next_order = 0;

  struct Frame {
    Index vertex;
    std::size_t cursor;  // next successor bit to examine
  };
  std::vector<Frame> frames;

  for (Index root = 0; root < n; ++root) {
    if (order[root] != kUnvisited) continue;
    order[root] = low[root] = next_order++;
    stack.push_back(root);
    on_stack[root] = true;
    frames.push_back({root, rows[root].find_first()});

    while (!frames.empty()) {
      Frame& frame = frames.back();
      const Index v = frame.vertex;
      if (frame.cursor != Bits::npos) {
        const Index w = frame.cursor;
        frame.cursor = rows[v].find_next(w);
        if (order[w] == kUnvisited) {
          order[w] = low[w] = next_order++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, rows[w].find_first()});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], order[w]);
        }
        continue;
      }

      if (low[v] == order[v]) {
        Index w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          result.component[w] = result.count;
        } while (w != v);
        ++result.count;
      }
      frames.pop_back();
      if (!frames.empty()) {
        const Index parent = frames.back().vertex;
        low[parent] = std::min(low[parent], low[v]);
      }
    }
  }
  return result;
}

// Maps Tarjan numbers to class ids ordered by smallest member; fills the
// per-element class ids and returns the Tarjan-number-to-class-id table.
std::vector<ClassId> renumber(const Components& comps,
                              std::vector<ClassId>& class_of) {
  std::vector<ClassId> rename(comps.count, kUnvisited);
  class_of.assign(comps.component.size(), 0);
  ClassId next = 0;
  for (Index x = 0; x < comps.component.size(); ++x) {
    auto& id = rename[comps.component[x]];
    if (id == kUnvisited) id = next++;
    class_of[x] = id;
  }
  return rename;
}

void require_nonempty(const Relation& r) {
  if (r.size() == 0) throw InvalidInput("relation has an empty universe");
}

}  // namespace

Partition::Partition(std::vector<ClassId> class_of)
    : class_of_(std::move(class_of)) {
  for (Index x = 0; x < class_of_.size(); ++x) {
    const ClassId c = class_of_[x];
    if (c == classes_.size()) {
      classes_.emplace_back();
    } else if (c > classes_.size()) {
      throw InvalidInput("class ids must be numbered by first appearance");
    }
    classes_[c].push_back(x);
  }
}

IndexSet Partition::project(std::span<const Index> elements) const {
  IndexSet image;
  for (Index x : normalize(elements, element_count())) {
    image.push_back(class_of_[x]);
  }
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  return image;
}

Partition equivalence_classes(const Relation& r) {
  require_nonempty(r);
  const Components comps = tarjan(r.rows());
  std::vector<ClassId> class_of;
  renumber(comps, class_of);
  return Partition(std::move(class_of));
}

QuotientRelation quotient_relation(const Relation& r) {
  require_nonempty(r);
  const Components comps = tarjan(r.rows());
  const std::size_t k = comps.count;

  std::vector<ClassId> class_of;
  const std::vector<ClassId> rename = renumber(comps, class_of);

  // Direct edges between distinct classes, indexed by Tarjan number.
  std::vector<Bits> edges(k, Bits(k));
  for (Index u = 0; u < r.size(); ++u) {
    const std::size_t cu = comps.component[u];
    const Bits& row = r.row(u);
    for (auto v = row.find_first(); v != Bits::npos; v = row.find_next(v)) {
      const std::size_t cv = comps.component[v];
      if (cu != cv) edges[cu].set(cv);
    }
  }
  // Successors complete earlier, so their reach sets are final when used.
  std::vector<Bits> reach(k, Bits(k));
  for (std::size_t c = 0; c < k; ++c) {
    for (auto d = edges[c].find_first(); d != Bits::npos;
         d = edges[c].find_next(d)) {
      reach[c] |= reach[d];
      reach[c].set(d);
    }
  }

  std::vector<Bits> order(k, Bits(k));
  for (std::size_t c = 0; c < k; ++c) {
    const ClassId from = rename[c];
    order[from].set(from);
    for (auto d = reach[c].find_first(); d != Bits::npos;
         d = reach[c].find_next(d)) {
      order[from].set(rename[d]);
    }
  }

  Partition partition(std::move(class_of));
  std::vector<std::string> labels;
  labels.reserve(k);
  for (const auto& members : partition.classes()) {
    labels.push_back("[" + r.universe().label(members.front()) + "]");
  }
  Relation order_relation =
      Relation::from_rows(Universe(std::move(labels)), std::move(order));
  return QuotientRelation{r.universe(), std::move(partition),
                          std::move(order_relation)};
}

Index representative(const Partition& partition, ClassId c,
                     std::optional<std::span<const Index>> within) {
  if (c >= partition.class_count()) {
    throw InvalidInput("unknown class id " + std::to_string(c));
  }
  const IndexSet& members = partition.members(c);
  if (!within) return members.front();
  const IndexSet allowed = normalize(*within, partition.element_count());
  for (Index x : members) {
    if (std::binary_search(allowed.begin(), allowed.end(), x)) return x;
  }
  throw InvalidInput("class " + std::to_string(c) +
                     " has no member inside the given set");
}

ChoiceFunction::ChoiceFunction(std::size_t domain_size, Selector selector)
    : domain_size_(domain_size), selector_(std::move(selector)) {
  if (!selector_) throw InvalidInput("choice function needs a selector");
}

ChoiceFunction ChoiceFunction::min_index(std::size_t domain_size) {
  return ChoiceFunction(domain_size,
                        [](const IndexSet& subset) { return subset.front(); });
}

ChoiceFunction ChoiceFunction::from_table(std::size_t domain_size,
                                          std::vector<Index> table) {
  if (domain_size > kMaxTableDomain) {
    throw InvalidInput("choice tables are limited to " +
                       std::to_string(kMaxTableDomain) + " elements");
  }
  if (table.size() != (std::size_t{1} << domain_size)) {
    throw InvalidInput("choice table must have 2^n entries");
  }
  auto shared = std::make_shared<const std::vector<Index>>(std::move(table));
  return ChoiceFunction(domain_size, [shared](const IndexSet& subset) {
    std::size_t mask = 0;
    for (Index i : subset) mask |= std::size_t{1} << i;
    return (*shared)[mask];
  });
}

Index ChoiceFunction::select(std::span<const Index> subset) const {
  const IndexSet normalized = normalize(subset, domain_size_);
  if (normalized.empty()) {
    throw InvalidInput("choice function applied to the empty set");
  }
  const Index chosen = selector_(normalized);
  if (!std::binary_search(normalized.begin(), normalized.end(), chosen)) {
    throw ContractViolation("choice function returned " +
                            std::to_string(chosen) +
                            ", which is not in its argument");
  }
  return chosen;
}

ChoiceFunction pullback_choice(ChoiceFunction over_classes,
                               Partition partition) {
  if (over_classes.domain_size() != partition.class_count()) {
    throw InvalidInput("class choice function domain does not match partition");
  }
  auto shared = std::make_shared<const Partition>(std::move(partition));
  const std::size_t n = shared->element_count();
  return ChoiceFunction(
      n, [shared, fq = std::move(over_classes)](const IndexSet& subset) {
        const IndexSet image = shared->project(subset);
        const ClassId chosen = fq.select(image);
        return representative(*shared, chosen, std::span<const Index>(subset));
      });
}

ChoiceFunction derive_choice(const Relation& r) {
  auto quotient = std::make_shared<const QuotientRelation>(quotient_relation(r));
  const std::size_t k = quotient->partition.class_count();
  ChoiceFunction over_classes(k, [quotient](const IndexSet& classes) {
    const Relation& order = quotient->order;
    for (ClassId c : classes) {
      bool dominated = false;
      for (ClassId d : classes) {
        if (d != c && order.has(d, c)) {
          dominated = true;
          break;
        }
      }
      if (!dominated) return c;
    }
    // A finite partial order always has a maximal element.
    return classes.front();
  });
  return pullback_choice(std::move(over_classes), quotient->partition);
}

}  // namespace relchoice
