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

#include "relchoice/random.hpp"

#include <numeric>
#include <utility>
#include <vector>

namespace relchoice {

std::uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double SplitMix64::uniform() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  if (bound == 0) throw InvalidInput("below() needs a positive bound");
  // Rejection sampling keeps the draw unbiased.
  const std::uint64_t limit = -bound % bound;
  while (true) {
    const std::uint64_t x = next();
    if (x >= limit) return x % bound;
  }
}

SplitMix64 SplitMix64::split(std::uint64_t stream) const {
  SplitMix64 mixer(seed_ ^ (stream * 0xD1B54A32D192ED03ULL));
  return SplitMix64(mixer.next());
}

Relation random_relation(const RandomRelationOptions& options,
                         SplitMix64& rng) {
  if (!(options.density >= 0.0 && options.density <= 1.0)) {
    throw InvalidInput("density must lie in [0, 1]");
  }
  const std::size_t n = options.n;
  std::vector<Bits> rows(n, Bits(n));
  for (Index u = 0; u < n; ++u) {
    for (Index v = 0; v < n; ++v) {
      if (u == v && !options.self_loops) continue;
      if (rng.uniform() < options.density) rows[u].set(v);
    }
  }
  return Relation::from_rows(Universe::indexed(n, options.label_prefix),
                             std::move(rows));
}

Relation random_partial_order(std::size_t n, double density, SplitMix64& rng) {
  if (!(density >= 0.0 && density <= 1.0)) {
    throw InvalidInput("density must lie in [0, 1]");
  }
  // Fisher-Yates; rank[x] is the position of x in the topological order.
  std::vector<Index> rank(n);
  std::iota(rank.begin(), rank.end(), Index{0});
  for (std::size_t i = n; i > 1; --i) {
    std::swap(rank[i - 1], rank[rng.below(i)]);
  }
  std::vector<Bits> rows(n, Bits(n));
  for (Index u = 0; u < n; ++u) {
    for (Index v = 0; v < n; ++v) {
      if (rank[u] < rank[v] && rng.uniform() < density) rows[u].set(v);
    }
  }
  const Relation dag = Relation::from_rows(Universe::indexed(n), std::move(rows));
  std::vector<Bits> closed = transitive_closure(dag).rows();
  for (Index i = 0; i < n; ++i) closed[i].set(i);
  return Relation::from_rows(dag.universe(), std::move(closed));
}

}  // namespace relchoice
