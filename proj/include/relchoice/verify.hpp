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

// Oracle sweep: every relation on up to three elements, plus seeded random
// relations on larger universes, each checked against the brute-force
// oracles and the structural invariants of the library.

#ifndef RELCHOICE_VERIFY_HPP_
#define RELCHOICE_VERIFY_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "relchoice/oracle.hpp"
#include "relchoice/relation.hpp"

namespace relchoice {

struct Violation {
  std::string check;
  std::string instance;  // edge-format serialization
  std::string detail;
};

// Runs every check on one relation. Checks that enumerate chains are skipped
// above budget.max_chain_n elements.
std::vector<Violation> check_instance(const Relation& r,
                                      const oracle::OracleBudget& budget = {});

struct SweepOptions {
  std::size_t nmax = 7;
  std::size_t count = 10000;  // random instances per n in 4..nmax
  std::uint64_t seed = 1;
  unsigned threads = 0;  // 0 = hardware concurrency
};

struct SweepSummary {
  std::size_t exhaustive_instances = 0;
  std::size_t random_instances = 0;
  std::vector<Violation> violations;  // in instance order
};

// Density used for random instance `i`; cycles through a fixed ladder.
double sweep_density(std::size_t i);

// Instance `i` of the random part for universe size `n`.
Relation sweep_instance(std::uint64_t seed, std::size_t n, std::size_t i);

// Exhaustive for n = 1..min(nmax, 3); `count` random instances for each
// n = 4..nmax. Results are merged in instance order regardless of threading.
SweepSummary run_sweep(const SweepOptions& options);

// Calls `visit` on every relation of the sweep in deterministic order:
// exhaustive ones first, then random ones by n and index.
void for_each_sweep_instance(const SweepOptions& options,
                             const std::function<void(const Relation&)>& visit);

// The relation on n elements whose pair (u, v) is present iff bit u*n+v of
// `mask` is set.
Relation relation_from_mask(std::size_t n, std::uint64_t mask);

}  // namespace relchoice

#endif  // RELCHOICE_VERIFY_HPP_
