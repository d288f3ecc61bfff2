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

#include "relchoice/relation.hpp"

#include <algorithm>
#include <string>

namespace relchoice {

IndexSet normalize(std::span<const Index> indices, std::size_t n) {
  IndexSet out(indices.begin(), indices.end());
  for (Index i : out) {
    if (i >= n) {
      throw InvalidInput("index " + std::to_string(i) +
                         " out of range for universe of size " +
                         std::to_string(n));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Bits to_bits(std::span<const Index> indices, std::size_t n) {
  Bits bits(n);
  for (Index i : indices) {
    if (i >= n) {
      throw InvalidInput("index " + std::to_string(i) +
                         " out of range for universe of size " +
                         std::to_string(n));
    }
    bits.set(i);
  }
  return bits;
}

IndexSet to_index_set(const Bits& bits) {
  IndexSet out;
  out.reserve(bits.count());
  for (auto i = bits.find_first(); i != Bits::npos; i = bits.find_next(i)) {
    out.push_back(i);
  }
  return out;
}

namespace detail {
std::vector<Bits> transpose(const std::vector<Bits>& rows) {
  const std::size_t n = rows.size();
  std::vector<Bits> cols(n, Bits(n));
  for (std::size_t u = 0; u < n; ++u) {
    for (auto v = rows[u].find_first(); v != Bits::npos;
         v = rows[u].find_next(v)) {
      cols[v].set(u);
    }
  }
  return cols;
}
}  // namespace detail

Universe::Universe(std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  index_.reserve(labels_.size());
  for (Index i = 0; i < labels_.size(); ++i) {
    if (!index_.emplace(labels_[i], i).second) {
      throw InvalidInput("duplicate label '" + labels_[i] + "'");
    }
  }
}

Universe Universe::indexed(std::size_t n, const std::string& prefix) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(prefix + std::to_string(i));
  }
  return Universe(std::move(labels));
}

std::optional<Index> Universe::find(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Universe Universe::subset(std::span<const Index> members) const {
  std::vector<std::string> labels;
  for (Index i : normalize(members, size())) labels.push_back(labels_[i]);
  return Universe(std::move(labels));
}

Relation::Relation(Universe universe, std::size_t max_elements)
    : universe_(std::move(universe)) {
  const std::size_t n = universe_.size();
  if (n > max_elements) {
    throw InvalidInput("universe of " + std::to_string(n) +
                       " elements exceeds the cap of " +
                       std::to_string(max_elements));
  }
  rows_.assign(n, Bits(n));
}

Relation::Relation(Universe universe, std::span<const IndexPair> pairs,
                   std::size_t max_elements)
    : Relation(std::move(universe), max_elements) {
  const std::size_t n = size();
  for (const auto& [u, v] : pairs) {
    if (u >= n || v >= n) {
      throw InvalidInput("pair (" + std::to_string(u) + "," +
                         std::to_string(v) + ") out of range");
    }
    rows_[u].set(v);
  }
}

Relation Relation::from_rows(Universe universe, std::vector<Bits> rows) {
  const std::size_t n = universe.size();
  if (rows.size() != n) throw InvalidInput("row count does not match universe");
  for (const auto& row : rows) {
    if (row.size() != n) throw InvalidInput("row width does not match universe");
  }
  Relation r;
  r.universe_ = std::move(universe);
  r.rows_ = std::move(rows);
  return r;
}

Relation Relation::from_labels(
    std::vector<std::string> labels,
    const std::vector<std::pair<std::string, std::string>>& pairs) {
  Universe universe(std::move(labels));
  std::vector<IndexPair> indexed;
  for (const auto& [a, b] : pairs) {
    auto u = universe.find(a);
    auto v = universe.find(b);
    if (!u || !v) {
      throw InvalidInput("pair (" + a + "," + b + ") uses an unknown label");
    }
    indexed.emplace_back(*u, *v);
  }
  return Relation(std::move(universe), indexed);
}

std::vector<IndexPair> Relation::pairs() const {
  std::vector<IndexPair> out;
  for (Index u = 0; u < size(); ++u) {
    for (auto v = rows_[u].find_first(); v != Bits::npos;
         v = rows_[u].find_next(v)) {
      out.emplace_back(u, v);
    }
  }
  return out;
}

std::size_t Relation::pair_count() const {
  std::size_t count = 0;
  for (const auto& row : rows_) count += row.count();
  return count;
}

Relation asymmetric_part(const Relation& r) {
  auto cols = detail::transpose(r.rows());
  std::vector<Bits> rows = r.rows();
  for (Index u = 0; u < r.size(); ++u) rows[u] -= cols[u];
  return Relation::from_rows(r.universe(), std::move(rows));
}

Relation transitive_closure(const Relation& r) {
  std::vector<Bits> rows = r.rows();
  const std::size_t n = rows.size();
  // Warshall: after pivot k, rows[i] holds every target reachable from i
  // through intermediates drawn from {0..k}.
  for (Index k = 0; k < n; ++k) {
    for (Index i = 0; i < n; ++i) {
      if (rows[i][k]) rows[i] |= rows[k];
    }
  }
  return Relation::from_rows(r.universe(), std::move(rows));
}

Relation diagonal(const Universe& universe) {
  const std::size_t n = universe.size();
  std::vector<Bits> rows(n, Bits(n));
  for (Index i = 0; i < n; ++i) rows[i].set(i);
  return Relation::from_rows(universe, std::move(rows));
}

Relation strict_closure_order(const Relation& r) {
  Relation strict = asymmetric_part(transitive_closure(r));
  std::vector<Bits> rows = strict.rows();
  for (Index i = 0; i < rows.size(); ++i) rows[i].set(i);
  return Relation::from_rows(r.universe(), std::move(rows));
}

Relation restrict(const Relation& r, std::span<const Index> subset) {
  const IndexSet members = normalize(subset, r.size());
  const std::size_t m = members.size();
  std::vector<Bits> rows(m, Bits(m));
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < m; ++j) {
      if (r.has(members[i], members[j])) rows[i].set(j);
    }
  }
  return Relation::from_rows(r.universe().subset(members), std::move(rows));
}

PropertyReport classify(const Relation& r) {
  const std::size_t n = r.size();
  PropertyReport report;

  for (Index x = 0; x < n && !report.reflexive_witness; ++x) {
    if (!r.has(x, x)) report.reflexive_witness = ReflexivityWitness{x};
  }

  for (Index x = 0; x < n && !report.transitive_witness; ++x) {
    const Bits& from_x = r.row(x);
    for (auto z = from_x.find_first(); z != Bits::npos;
         z = from_x.find_next(z)) {
      Bits missing = r.row(z) - from_x;
      if (auto y = missing.find_first(); y != Bits::npos) {
        report.transitive_witness = TransitivityWitness{x, z, y};
        break;
      }
    }
  }

  for (Index x = 0; x < n && !report.antisymmetric_witness; ++x) {
    for (Index y = x + 1; y < n; ++y) {
      if (r.has(x, y) && r.has(y, x)) {
        report.antisymmetric_witness = AntisymmetryWitness{x, y};
        break;
      }
    }
  }

  for (Index x = 0; x < n && !report.total_witness; ++x) {
    for (Index y = x + 1; y < n; ++y) {
      if (!r.has(x, y) && !r.has(y, x)) {
        report.total_witness = TotalityWitness{x, y};
        break;
      }
    }
  }

  report.reflexive = !report.reflexive_witness;
  report.transitive = !report.transitive_witness;
  report.antisymmetric = !report.antisymmetric_witness;
  report.total = !report.total_witness;
  report.is_partial_order =
      report.reflexive && report.transitive && report.antisymmetric;
  report.is_total_order = report.is_partial_order && report.total;
  return report;
}

}  // namespace relchoice
