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

// Mutual-reachability classes of a relation, the partial order they inherit,
// and choice functions built on top of the quotient.
//
// x ~ y iff x == y or each reaches the other through the transitive closure.
// The classes are the strongly connected components of the digraph u -> v for
// (u, v) in R. Class ids follow the smallest member index, so class 0 always
// contains element 0.

#ifndef RELCHOICE_QUOTIENT_HPP_
#define RELCHOICE_QUOTIENT_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "relchoice/relation.hpp"
#include "relchoice/types.hpp"

namespace relchoice {

using ClassId = std::size_t;

class Partition {
 public:
  Partition() = default;
  // `class_of[i]` is the class of element i. Ids must be dense and numbered
  // by first appearance; throws InvalidInput otherwise.
  explicit Partition(std::vector<ClassId> class_of);

  std::size_t element_count() const { return class_of_.size(); }
  std::size_t class_count() const { return classes_.size(); }

  // The canonical projection.
  ClassId class_of(Index x) const { return class_of_.at(x); }
  const std::vector<ClassId>& projection() const { return class_of_; }
  const IndexSet& members(ClassId c) const { return classes_.at(c); }
  const std::vector<IndexSet>& classes() const { return classes_; }

  // Image of a set of elements, as a sorted set of class ids.
  IndexSet project(std::span<const Index> elements) const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<ClassId> class_of_;
  std::vector<IndexSet> classes_;
};

// Partition together with the induced order R*. `order` is a relation on the
// class ids; class c is labeled "[x]" where x labels its smallest member.
struct QuotientRelation {
  Universe elements;  // the original ground set
  Partition partition;
  Relation order;
};

// Iterative Tarjan; no recursion, so long paths are fine. Throws InvalidInput
// on an empty universe.
Partition equivalence_classes(const Relation& r);

// ([x],[y]) is present iff [x] == [y] or some member of [x] reaches some
// member of [y]. Throws InvalidInput on an empty universe.
QuotientRelation quotient_relation(const Relation& r);

// Smallest member of class `c`, optionally restricted to `within`. Throws
// InvalidInput for an unknown class or an empty intersection.
Index representative(const Partition& partition, ClassId c,
                     std::optional<std::span<const Index>> within = std::nullopt);

// f(A) in A for every nonempty A over a domain 0..n-1. Selectors are
// consulted with normalized arguments and must be stateless.
class ChoiceFunction {
 public:
  using Selector = std::function<Index(const IndexSet&)>;

  // Largest domain accepted by from_table.
  static constexpr std::size_t kMaxTableDomain = 16;

  ChoiceFunction(std::size_t domain_size, Selector selector);

  static ChoiceFunction min_index(std::size_t domain_size);
  // Extensional form: `table[mask]` is the choice from the subset whose
  // characteristic bitmask is `mask` (entry 0 is ignored).
  static ChoiceFunction from_table(std::size_t domain_size,
                                   std::vector<Index> table);

  std::size_t domain_size() const { return domain_size_; }

  // Throws InvalidInput for an empty or out-of-range argument and
  // ContractViolation if the selector answers outside its argument.
  Index select(std::span<const Index> subset) const;
  Index operator()(std::span<const Index> subset) const {
    return select(subset);
  }

 private:
  std::size_t domain_size_;
  Selector selector_;
};

// Lifts a choice over class ids to one over elements: picks the class
// `over_classes` selects from the image of A, then that class's smallest
// member inside A.
ChoiceFunction pullback_choice(ChoiceFunction over_classes,
                               Partition partition);

// Pullback of the default class selector: among the classes met by A, the
// smallest id that no other met class strictly dominates in R*.
ChoiceFunction derive_choice(const Relation& r);

}  // namespace relchoice

#endif  // RELCHOICE_QUOTIENT_HPP_
