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

// Small named relations shared by the unit tests. Elements a, b, c, d are
// indices 0, 1, 2, 3.

#ifndef RELCHOICE_TESTS_FIXTURES_HPP_
#define RELCHOICE_TESTS_FIXTURES_HPP_

#include <string>
#include <utility>
#include <vector>

#include "relchoice/relation.hpp"
#include "relchoice/types.hpp"

namespace fixtures {

using relchoice::Index;
using relchoice::IndexSet;
using relchoice::Relation;

constexpr Index a = 0;
constexpr Index b = 1;
constexpr Index c = 2;
constexpr Index d = 3;

inline Relation rel(std::vector<std::string> labels,
                    std::vector<std::pair<std::string, std::string>> pairs) {
  return Relation::from_labels(std::move(labels), pairs);
}

inline Relation abc(std::vector<std::pair<std::string, std::string>> pairs) {
  return rel({"a", "b", "c"}, std::move(pairs));
}

// {(a,b),(b,c),(c,a)} on {a,b,c}
inline Relation cyc3() { return abc({{"a", "b"}, {"b", "c"}, {"c", "a"}}); }
// {(a,b),(a,c)} on {a,b,c}
inline Relation po() { return abc({{"a", "b"}, {"a", "c"}}); }
// {(a,b),(b,a)} on {a,b}
inline Relation sym2() { return rel({"a", "b"}, {{"a", "b"}, {"b", "a"}}); }
// {(a,b),(b,a),(c,b)} on {a,b,c}
inline Relation mix() { return abc({{"a", "b"}, {"b", "a"}, {"c", "b"}}); }
// empty relation on {a,b}
inline Relation empty2() { return rel({"a", "b"}, {}); }

inline std::vector<Relation> named() {
  return {cyc3(), po(), sym2(), mix(), empty2()};
}

}  // namespace fixtures

#endif  // RELCHOICE_TESTS_FIXTURES_HPP_
