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

// Brute-force reference implementations.
//
// Everything here is written as directly from the definitions as possible:
// explicit path extension, loops over all subsets, pairwise scans. Only the
// Relation container (has(), size(), construction) is shared with the rest
// of the library. These functions are the ground truth the fast paths are
// tested against, so keep them naive.

#ifndef RELCHOICE_ORACLE_HPP_
#define RELCHOICE_ORACLE_HPP_

#include <cstddef>
#include <vector>

#include "relchoice/relation.hpp"
#include "relchoice/types.hpp"

namespace relchoice::oracle {

struct OracleBudget {
  std::size_t max_subset_n = 12;  // subset enumeration, path extension
  std::size_t max_chain_n = 6;    // chain enumeration
};

// Union of the k-step relations for k = 1..n.
Relation brute_closure(const Relation& r, const OracleBudget& budget = {});

// Pairs (x, y) in R with (y, x) not in R.
Relation brute_asymmetric_part(const Relation& r);

// Inclusion-minimal nonempty subsets with no incoming edge from outside.
std::vector<IndexSet> brute_minimal_undominated(
    const Relation& r, const OracleBudget& budget = {});

// All subsets, the empty one included, whose distinct members are pairwise
// comparable.
std::vector<IndexSet> brute_chains(const Relation& r,
                                   const OracleBudget& budget = {});

// Undominated subsets whose members are pairwise mutually reachable;
// singletons are admitted whether or not they reach themselves.
std::vector<IndexSet> brute_top_cycles(const Relation& r,
                                       const OracleBudget& budget = {});

// Union of brute_minimal_undominated over R, or over its asymmetric part
// when `strict`.
IndexSet brute_schwartz(const Relation& r, bool strict,
                        const OracleBudget& budget = {});

// Elements x with no y such that (y, x) in R and (x, y) not in R.
IndexSet brute_maximal(const Relation& r);

// Chains (from brute_chains) that no element bounds from above.
std::vector<IndexSet> brute_unbounded_chains(const Relation& r,
                                             const OracleBudget& budget = {});

// Number of mutual-reachability classes, via a depth-first search from every
// element.
std::size_t brute_class_count(const Relation& r);

}  // namespace relchoice::oracle

#endif  // RELCHOICE_ORACLE_HPP_
