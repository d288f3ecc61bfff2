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

#include "doctest.h"
#include "fixtures.hpp"
#include "relchoice/oracle.hpp"
#include "relchoice/random.hpp"
#include "relchoice/relation.hpp"

using namespace relchoice;
using namespace fixtures;
using Pairs = std::vector<IndexPair>;

TEST_CASE("universe rejects duplicate labels") {
  CHECK_THROWS_AS(Universe({"a", "b", "a"}), InvalidInput);
  Universe u({"p", "q"});
  CHECK(u.find("q") == Index{1});
  CHECK_FALSE(u.find("r").has_value());
}

TEST_CASE("relation validates pairs and the element cap") {
  const Pairs bad{{0, 3}};
  CHECK_THROWS_AS(Relation(Universe::indexed(3), bad), InvalidInput);
  CHECK_THROWS_AS(Relation(Universe::indexed(5), Pairs{}, 4), InvalidInput);
  const Pairs dup{{0, 1}, {0, 1}};
  CHECK(Relation(Universe::indexed(2), dup).pair_count() == 1);
  CHECK_THROWS_AS(rel({"a"}, {{"a", "z"}}), InvalidInput);
}

TEST_CASE("asymmetric part") {
  CHECK(asymmetric_part(sym2()).pair_count() == 0);
  CHECK(asymmetric_part(cyc3()) == cyc3());
  CHECK(asymmetric_part(mix()).pairs() == Pairs{{c, b}});
}

TEST_CASE("transitive closure") {
  CHECK(transitive_closure(empty2()).pair_count() == 0);

  const Relation path = abc({{"a", "b"}, {"b", "c"}});
  CHECK(transitive_closure(path).pairs() == Pairs{{a, b}, {a, c}, {b, c}});
  CHECK(transitive_closure(path) == oracle::brute_closure(path));

  const Relation closed = transitive_closure(cyc3());
  CHECK(closed.pair_count() == 9);
  CHECK(closed.has(a, a));
  CHECK(closed == oracle::brute_closure(cyc3()));
}

TEST_CASE("closure adds no reflexive pairs off cycles") {
  const Relation path = abc({{"a", "b"}, {"b", "c"}});
  const Relation closed = transitive_closure(path);
  for (Index x = 0; x < 3; ++x) CHECK_FALSE(closed.has(x, x));
  CHECK(transitive_closure(rel({"a"}, {{"a", "a"}})).has(a, a));
}

TEST_CASE("classify") {
  SUBCASE("partial order") {
    const auto report = classify(rel({"a", "b"}, {{"a", "a"}, {"b", "b"}, {"a", "b"}}));
    CHECK(report.is_partial_order);
    CHECK(report.is_total_order);
  }
  SUBCASE("3-cycle is not transitive") {
    const auto report = classify(cyc3());
    CHECK_FALSE(report.transitive);
    REQUIRE(report.transitive_witness);
    CHECK(report.transitive_witness->x == a);
    CHECK(report.transitive_witness->z == b);
    CHECK(report.transitive_witness->y == c);
    CHECK_FALSE(report.is_partial_order);
  }
  SUBCASE("empty relation on one element") {
    const auto report = classify(rel({"a"}, {}));
    CHECK_FALSE(report.reflexive);
    REQUIRE(report.reflexive_witness);
    CHECK(report.reflexive_witness->x == a);
    CHECK(report.antisymmetric);
    CHECK(report.total);
  }
  SUBCASE("symmetric pair breaks antisymmetry") {
    const auto report = classify(sym2());
    REQUIRE(report.antisymmetric_witness);
    CHECK(report.antisymmetric_witness->x == a);
    CHECK(report.antisymmetric_witness->y == b);
  }
  SUBCASE("incomparable pair") {
    const auto report = classify(po());
    REQUIRE(report.total_witness);
    CHECK(report.total_witness->x == b);
    CHECK(report.total_witness->y == c);
  }
}

TEST_CASE("restrict") {
  const IndexSet all{a, b, c};
  CHECK(restrict(mix(), all) == mix());

  const Relation ab = restrict(cyc3(), IndexSet{a, b});
  CHECK(ab.universe().labels() == std::vector<std::string>{"a", "b"});
  CHECK(ab.pairs() == Pairs{{0, 1}});

  const Relation bc = restrict(mix(), IndexSet{b, c});
  CHECK(bc.universe().labels() == std::vector<std::string>{"b", "c"});
  CHECK(bc.pairs() == Pairs{{1, 0}});  // (c,b)

  CHECK_THROWS_AS(restrict(mix(), IndexSet{a, 7}), InvalidInput);
}

TEST_CASE("strict closure order") {
  CHECK(strict_closure_order(empty2()) == diagonal(empty2().universe()));

  const Relation one = abc({{"a", "b"}});
  CHECK(strict_closure_order(one).pairs() ==
        Pairs{{a, a}, {a, b}, {b, b}, {c, c}});

  CHECK(strict_closure_order(cyc3()) == diagonal(cyc3().universe()));
}

TEST_CASE("derived relations keep their laws on random inputs") {
  SplitMix64 seeds(2024);
  for (int i = 0; i < 500; ++i) {
    SplitMix64 rng = seeds.split(i);
    RandomRelationOptions options;
    options.n = 1 + rng.below(6);
    options.density = rng.uniform();
    const Relation r = random_relation(options, rng);
    const Relation closed = transitive_closure(r);
    CAPTURE(r.pairs().size());

    for (const auto& [u, v] : r.pairs()) CHECK(closed.has(u, v));
    CHECK(transitive_closure(closed) == closed);
    CHECK(classify(closed).transitive);
    CHECK(closed == oracle::brute_closure(r));

    const Relation strict = asymmetric_part(r);
    for (const auto& [u, v] : strict.pairs()) {
      CHECK(r.has(u, v));
      CHECK_FALSE(strict.has(v, u));
    }
    CHECK(asymmetric_part(strict) == strict);

    CHECK(classify(strict_closure_order(r)).is_partial_order);

    IndexSet outer;
    for (Index x = 0; x < r.size(); ++x) {
      if (rng.below(3) != 0) outer.push_back(x);
    }
    IndexSet inner;  // positions inside `outer`
    IndexSet inner_original;
    for (Index k = 0; k < outer.size(); ++k) {
      if (rng.below(2) == 0) {
        inner.push_back(k);
        inner_original.push_back(outer[k]);
      }
    }
    CHECK(restrict(restrict(r, outer), inner) == restrict(r, inner_original));
  }
}
