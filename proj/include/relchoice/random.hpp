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

// Reproducible random relations.
//
// The generator is SplitMix64 and is part of the output format: a given seed
// must produce the same relation on every platform. Each call of next()
// does
//
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
//
// with all arithmetic modulo 2^64. A uniform double in [0, 1) is
// (next() >> 11) * 2^-53. split(i) derives the independent stream
// SplitMix64(SplitMix64(seed ^ (i * 0xD1B54A32D192ED03)).next()), which is
// how sweep instance i gets its own generator.

#ifndef RELCHOICE_RANDOM_HPP_
#define RELCHOICE_RANDOM_HPP_

#include <cstddef>
#include <cstdint>
#include <string>

#include "relchoice/relation.hpp"

namespace relchoice {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : seed_(seed), state_(seed) {}

  std::uint64_t next();
  // Uniform in [0, 1) with 53 bits of precision.
  double uniform();
  // Uniform in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  // Independent stream keyed by the construction seed and `stream`.
  SplitMix64 split(std::uint64_t stream) const;

 private:
  std::uint64_t seed_;
  std::uint64_t state_;
};

struct RandomRelationOptions {
  std::size_t n = 0;
  double density = 0.5;
  bool self_loops = true;
  std::string label_prefix = "x";
};

// Scans pairs (u, v) row-major, u outer, and keeps each with probability
// `density` (one uniform() draw per scanned pair; diagonal pairs are not
// scanned when self loops are off).
Relation random_relation(const RandomRelationOptions& options,
                         SplitMix64& rng);

// Reflexive-transitive closure of a random DAG whose edges (u, v) have
// u < v under a random permutation of the elements.
Relation random_partial_order(std::size_t n, double density, SplitMix64& rng);

}  // namespace relchoice

#endif  // RELCHOICE_RANDOM_HPP_
