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

// Finite binary relations over a labeled ground set, the relations derived
// from them (asymmetric part, transitive closure, strict closure order) and
// the classical order-property checks.
//
// A pair (u, v) is read "u weakly dominates v". Element indices follow the
// label order, and that order is the tie-break used everywhere downstream.

#ifndef RELCHOICE_RELATION_HPP_
#define RELCHOICE_RELATION_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "relchoice/types.hpp"

namespace relchoice {

// The ground set X: distinct labels, indexed 0..n-1 in list order.
class Universe {
 public:
  Universe() = default;
  // Throws InvalidInput when a label repeats.
  explicit Universe(std::vector<std::string> labels);

  // Labels prefix0, prefix1, ...
  static Universe indexed(std::size_t n, const std::string& prefix = "x");

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  const std::string& label(Index i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Index> find(const std::string& label) const;

  // Sub-universe on `members` (normalized), keeping their labels and order.
  Universe subset(std::span<const Index> members) const;

  friend bool operator==(const Universe& a, const Universe& b) {
    return a.labels_ == b.labels_;
  }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Index> index_;
};

class Relation {
 public:
  static constexpr std::size_t kDefaultMaxElements = 4096;

  Relation() = default;
  // The empty relation on `universe`.
  explicit Relation(Universe universe,
                    std::size_t max_elements = kDefaultMaxElements);
  // Duplicate pairs collapse. Throws InvalidInput on out-of-range indices or
  // when the universe exceeds `max_elements`.
  Relation(Universe universe, std::span<const IndexPair> pairs,
           std::size_t max_elements = kDefaultMaxElements);

  // Each row must have exactly universe.size() bits.
  static Relation from_rows(Universe universe, std::vector<Bits> rows);

  // Convenience constructor addressing elements by label.
  static Relation from_labels(
      std::vector<std::string> labels,
      const std::vector<std::pair<std::string, std::string>>& pairs);

  const Universe& universe() const { return universe_; }
  std::size_t size() const { return universe_.size(); }

  bool has(Index u, Index v) const { return rows_[u][v]; }
  // Successor row of u: bit v is set iff (u, v) is in the relation.
  const Bits& row(Index u) const { return rows_[u]; }
  const std::vector<Bits>& rows() const { return rows_; }

  // Pairs in lexicographic index order.
  std::vector<IndexPair> pairs() const;
  std::size_t pair_count() const;

  friend bool operator==(const Relation& a, const Relation& b) {
    return a.universe_ == b.universe_ && a.rows_ == b.rows_;
  }

 private:
  Universe universe_;
  std::vector<Bits> rows_;
};

// Counterexamples attached to failed properties.
struct ReflexivityWitness {
  Index x;  // (x, x) is missing
};
struct TransitivityWitness {
  Index x, z, y;  // (x, z) and (z, y) present, (x, y) missing
};
struct AntisymmetryWitness {
  Index x, y;  // x != y, both (x, y) and (y, x) present
};
struct TotalityWitness {
  Index x, y;  // x != y, neither direction present
};

struct PropertyReport {
  bool reflexive = false;
  bool transitive = false;
  bool antisymmetric = false;
  // Every two distinct elements are comparable.
  bool total = false;
  bool is_partial_order = false;
  // On a finite set a total order is also a well-order.
  bool is_total_order = false;

  std::optional<ReflexivityWitness> reflexive_witness;
  std::optional<TransitivityWitness> transitive_witness;
  std::optional<AntisymmetryWitness> antisymmetric_witness;
  std::optional<TotalityWitness> total_witness;
};

// P(R): pairs of R whose reverse is absent.
Relation asymmetric_part(const Relation& r);

// Pairs joined by an R-path of length at least one. (x, x) appears only when
// x lies on a cycle or carries a self-loop.
Relation transitive_closure(const Relation& r);

// The identity relation on the universe of r.
Relation diagonal(const Universe& universe);

// P(closure(R)) together with the diagonal; always a partial order.
Relation strict_closure_order(const Relation& r);

// R restricted to `subset`, reindexed in ascending index order with labels
// preserved.
Relation restrict(const Relation& r, std::span<const Index> subset);

// First witnesses are found by scanning indices in ascending order.
PropertyReport classify(const Relation& r);

}  // namespace relchoice

#endif  // RELCHOICE_RELATION_HPP_
