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

#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "relchoice/cli.hpp"

using relchoice::run_command;
using json = nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_command(args, in, out, err);
  return {code, out.str(), err.str()};
}

bool has(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

const std::string kMix = "a b\nb a\nc b\n";
const std::string kCyc3 = "a b\nb c\nc a\n";

}  // namespace

TEST_CASE("solve") {
  const Result text = run({"solve"}, kMix);
  CHECK(text.code == 0);
  CHECK(has(text.out, "schwartz_gocha: {c}\n"));
  CHECK(has(text.out, "schwartz_strict: {a,c}\n"));

  const Result js = run({"solve", "-", "--output", "json"}, kMix);
  REQUIRE(js.code == 0);
  const json report = json::parse(js.out);
  CHECK(report["schwartz_gocha"] == json({"c"}));
  CHECK(report["schwartz_strict"] == json({"a", "c"}));
  CHECK(report["deb"]["strict_violations"] == 0);

  const Result sym = run({"solve", "--output", "json"}, "a b\nb a\n");
  CHECK(json::parse(sym.out)["deb"]["literal_violations"] == 1);
}

TEST_CASE("props, closure and quotient") {
  const Result props = run({"props"}, kCyc3);
  CHECK(props.code == 0);
  CHECK(has(props.out, "reflexive: false"));
  CHECK(has(props.out, "transitive: false"));

  const Result closure = run({"closure", "--output", "json"}, kCyc3);
  REQUIRE(closure.code == 0);
  CHECK(json::parse(closure.out)["pairs"].size() == 9);

  const Result closure_edge = run({"closure"}, "a b\nb c\n");
  CHECK(closure_edge.out == "elements: a b c\na b\na c\nb c\n");

  const Result q = run({"quotient", "--output", "json"}, kMix);
  REQUIRE(q.code == 0);
  const json quotient = json::parse(q.out);
  CHECK(quotient["classes"] == json::parse(R"([["a","b"],["c"]])"));
  CHECK(quotient["order"] == json::parse("[[0,0],[1,0],[1,1]]"));

  const Result dot = run({"quotient", "--dot"}, kMix);
  CHECK(dot.code == 0);
  CHECK(has(dot.out, "digraph quotient {"));
  CHECK(has(dot.out, "c1 -> c0;"));
}

TEST_CASE("input formats") {
  const std::string js = R"({"elements":["a","b"],"pairs":[["a","b"]]})";
  CHECK(run({"props"}, js).code == 0);
  CHECK(run({"props", "--format", "json"}, js).code == 0);
  CHECK(run({"props", "--format", "edge"}, js).code == 2);
  CHECK(run({"props", "--format", "yaml"}, js).code == 2);
}

TEST_CASE("zorn modes") {
  const json hyp = json::parse(run({"zorn", "check-hypothesis"}, kCyc3).out);
  CHECK(hyp["holds"] == false);
  CHECK(hyp["unbounded_chain"] == json({"a", "b"}));

  const Result chain = run({"zorn", "extend-chain"}, kCyc3);
  CHECK(chain.code == 0);
  CHECK(json::parse(chain.out)["terminal_chain"] == json({"a", "c"}));

  const json top = json::parse(run({"zorn", "find-top-cycle"}, kCyc3).out);
  CHECK(top["extracted"] == json({"a", "b", "c"}));
  CHECK(top["pivot"] == "a");

  const Result theorem = run({"zorn", "verify-theorem"}, kCyc3);
  CHECK(theorem.code == 0);
  const json report = json::parse(theorem.out);
  CHECK(report["consistent"] == true);
  CHECK(report["conclusion_holds"] == true);

  CHECK(run({"zorn", "verify-theorem", "--guard", "2"}, kCyc3).code == 2);
  CHECK(run({"zorn", "climb"}, kCyc3).code == 2);
}

TEST_CASE("random is reproducible") {
  const Result first = run({"random", "--n", "4", "--density", "0.5",
                            "--seed", "7"});
  CHECK(first.code == 0);
  CHECK(first.out ==
        "elements: x0 x1 x2 x3\n"
        "x0 x0\nx0 x1\nx1 x0\nx1 x1\nx1 x2\nx1 x3\nx2 x0\nx2 x1\nx2 x2\n");
  CHECK(run({"random", "--n", "4", "--density", "0.5", "--seed", "7"}).out ==
        first.out);
  CHECK(run({"random", "--n", "6", "--seed", "8"}).out !=
        run({"random", "--n", "6", "--seed", "9"}).out);

  const Result js = run({"random", "--n", "5", "--seed", "3", "--format",
                         "json", "--no-self-loops"});
  REQUIRE(js.code == 0);
  for (const auto& pair : json::parse(js.out)["pairs"]) {
    CHECK(pair[0] != pair[1]);
  }
  CHECK(run({"random"}).code == 2);
}

TEST_CASE("verify") {
  const Result sweep = run({"verify", "--nmax", "3", "--count", "0"});
  CHECK(sweep.code == 0);
  CHECK(has(sweep.out, "0 violations"));
  CHECK(has(sweep.out, "exhaustive instances: 530"));

  const Result small = run({"verify", "--nmax", "5", "--count", "50",
                            "--seed", "4"});
  CHECK(small.code == 0);
  CHECK(has(small.out, "random instances: 100"));
  CHECK(run({"verify", "--nmax", "13"}).code == 2);
}

TEST_CASE("usage and input errors") {
  const Result malformed = run({"props"}, "a\n");
  CHECK(malformed.code == 2);
  CHECK(has(malformed.err, "line 1"));

  const Result flag = run({"props", "--bogus"}, kCyc3);
  CHECK(flag.code == 2);
  CHECK(has(flag.err, "Usage"));

  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"props", "/nonexistent/relation.txt"}).code == 2);
  CHECK(run({"solve"}, "").code == 2);
  CHECK(run({"--help"}).code == 0);
}
