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

#ifndef RELCHOICE_TYPES_HPP_
#define RELCHOICE_TYPES_HPP_

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace relchoice {

using Index = std::size_t;

// Element indices in ascending order without duplicates. Every IndexSet
// returned by this library is normalized this way.
using IndexSet = std::vector<Index>;

using IndexPair = std::pair<Index, Index>;

// Word-packed row of a relation's adjacency matrix, also used as a
// characteristic vector for subsets of the universe.
using Bits = boost::dynamic_bitset<>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed arguments: out-of-range indices, empty sets where a nonempty one
// is required, empty universes.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// A caller-supplied function broke its contract (a choice function returned
// an element outside its argument, a tower step removed elements, ...).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

// An exhaustive procedure was asked to run beyond its size guard.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// Validates every index against `n`, then sorts and deduplicates.
IndexSet normalize(std::span<const Index> indices, std::size_t n);

Bits to_bits(std::span<const Index> indices, std::size_t n);
IndexSet to_index_set(const Bits& bits);

namespace detail {
// Column view of a square bit matrix: result[v][u] == rows[u][v].
std::vector<Bits> transpose(const std::vector<Bits>& rows);
}  // namespace detail

}  // namespace relchoice

#endif  // RELCHOICE_TYPES_HPP_
