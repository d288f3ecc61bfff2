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

#include "relchoice/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "relchoice/io.hpp"
#include "relchoice/random.hpp"
#include "relchoice/report_json.hpp"
#include "relchoice/verify.hpp"

namespace relchoice {
namespace {

struct InputOptions {
  std::string path = "-";
  std::string format = "auto";
};

struct Settings {
  InputOptions input;
  std::string output = "text";
  bool dot = false;
  std::string zorn_mode;
  std::size_t guard = kDefaultChainGuard;

  std::size_t n = 0;
  double density = 0.5;
  std::uint64_t seed = 1;
  bool no_self_loops = false;
  std::string random_format = "edge";

  std::size_t nmax = 7;
  std::size_t count = 10000;
  unsigned threads = 0;
};

std::string read_input(const InputOptions& options, std::istream& in) {
  std::ostringstream buffer;
  if (options.path == "-") {
    buffer << in.rdbuf();
  } else {
    std::ifstream file(options.path);
    if (!file) throw InvalidInput("cannot open '" + options.path + "'");
    buffer << file.rdbuf();
  }
  return buffer.str();
}

Format detect_format(const InputOptions& options, const std::string& text) {
  if (options.format != "auto") return *parse_format(options.format);
  if (options.path.ends_with(".json")) return Format::kJson;
  auto first = std::find_if_not(text.begin(), text.end(), [](char c) {
    return std::isspace(static_cast<unsigned char>(c));
  });
  return first != text.end() && *first == '{' ? Format::kJson : Format::kEdge;
}

Relation load(const InputOptions& options, std::istream& in) {
  const std::string text = read_input(options, in);
  return parse_relation(text, detect_format(options, text));
}

void add_input(CLI::App* cmd, InputOptions& input) {
  cmd->add_option("input", input.path, "Relation file, '-' for stdin")
      ->capture_default_str();
  cmd->add_option("--format", input.format, "Input format")
      ->check(CLI::IsMember({"auto", "edge", "json"}))
      ->capture_default_str();
}

void add_output(CLI::App* cmd, std::string& output) {
  cmd->add_option("--output", output, "Report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}

int run_verify(const Settings& s, std::ostream& out) {
  SweepOptions options;
  options.nmax = s.nmax;
  options.count = s.count;
  options.seed = s.seed;
  options.threads = s.threads;
  const SweepSummary summary = run_sweep(options);
  out << "exhaustive instances: " << summary.exhaustive_instances << "\n";
  out << "random instances: " << summary.random_instances << "\n";
  constexpr std::size_t kShown = 20;
  for (std::size_t i = 0; i < summary.violations.size() && i < kShown; ++i) {
    const Violation& v = summary.violations[i];
    std::string instance = v.instance;
    std::replace(instance.begin(), instance.end(), '\n', ';');
    out << "violation " << v.check << " [" << instance << "]";
    if (!v.detail.empty()) out << " " << v.detail;
    out << "\n";
  }
  out << summary.violations.size() << " violations\n";
  return summary.violations.empty() ? kExitOk : kExitViolation;
}

int run_zorn(const Settings& s, std::istream& in, std::ostream& out) {
  const Relation r = load(s.input, in);
  const Universe& u = r.universe();
  int code = kExitOk;
  nlohmann::json result;
  if (s.zorn_mode == "check-hypothesis") {
    result = to_json(u, check_hypothesis(r, s.guard));
  } else if (s.zorn_mode == "extend-chain") {
    result = to_json(u, extend_chain(r, ChoiceFunction::min_index(r.size())));
  } else if (s.zorn_mode == "find-top-cycle") {
    result = to_json(u, trace_top_cycle(r));
  } else {
    const TheoremReport report = verify_theorem(r, s.guard);
    result = to_json(u, report);
    if (!report.consistent) code = kExitViolation;
  }
  out << result.dump(2) << "\n";
  return code;
}

int dispatch(const CLI::App& app, const Settings& s, std::istream& in,
             std::ostream& out) {
  const bool json = s.output == "json";
  if (app.got_subcommand("props")) {
    const Relation r = load(s.input, in);
    const PropertyReport report = classify(r);
    out << (json ? to_json(r.universe(), report).dump(2) + "\n"
                 : to_text(r.universe(), report));
    return kExitOk;
  }
  if (app.got_subcommand("closure")) {
    const Relation closure = transitive_closure(load(s.input, in));
    out << serialize(closure, json ? Format::kJson : Format::kEdge);
    return kExitOk;
  }
  if (app.got_subcommand("quotient")) {
    const QuotientRelation q = quotient_relation(load(s.input, in));
    if (s.dot) {
      out << emit_dot(q);
    } else {
      out << (json ? to_json(q).dump(2) + "\n" : to_text(q));
    }
    return kExitOk;
  }
  if (app.got_subcommand("solve")) {
    const Relation r = load(s.input, in);
    const SolutionReport report = solve(r);
    const DebReport deb = deb_decompose(r);
    if (json) {
      nlohmann::json doc = to_json(r.universe(), report);
      doc["deb"] = to_json(r.universe(), deb);
      out << doc.dump(2) << "\n";
    } else {
      out << to_text(r.universe(), report, deb);
    }
    return kExitOk;
  }
  if (app.got_subcommand("zorn")) return run_zorn(s, in, out);
  if (app.got_subcommand("random")) {
    RandomRelationOptions options;
    options.n = s.n;
    options.density = s.density;
    options.self_loops = !s.no_self_loops;
    SplitMix64 rng(s.seed);
    out << serialize(random_relation(options, rng),
                     *parse_format(s.random_format));
    return kExitOk;
  }
  return run_verify(s, out);
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::istream& in,
                std::ostream& out, std::ostream& err) {
  CLI::App app{"Analysis of finite binary relations: orders, quotients, "
               "top cycles and Schwartz sets",
               "relchoice"};
  app.require_subcommand(1, 1);
  Settings s;

  auto* props = app.add_subcommand("props", "Order properties with witnesses");
  add_input(props, s.input);
  add_output(props, s.output);

  auto* closure = app.add_subcommand("closure", "Transitive closure");
  add_input(closure, s.input);
  add_output(closure, s.output);

  auto* quotient =
      app.add_subcommand("quotient", "Mutual-reachability classes and order");
  add_input(quotient, s.input);
  add_output(quotient, s.output);
  quotient->add_flag("--dot", s.dot, "Emit the condensation as DOT");

  auto* solve_cmd = app.add_subcommand(
      "solve", "Maximal elements, top cycles, Schwartz sets, decomposition");
  add_input(solve_cmd, s.input);
  add_output(solve_cmd, s.output);

  auto* zorn = app.add_subcommand("zorn", "Constructive chain and cycle traces");
  zorn->add_option("mode", s.zorn_mode, "What to run")
      ->required()
      ->check(CLI::IsMember({"check-hypothesis", "extend-chain",
                             "find-top-cycle", "verify-theorem"}));
  add_input(zorn, s.input);
  zorn->add_option("--guard", s.guard, "Largest universe for chain enumeration")
      ->capture_default_str();

  auto* random = app.add_subcommand("random", "Seeded random relation");
  random->add_option("--n", s.n, "Number of elements")->required();
  random->add_option("--density", s.density, "Pair probability")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  random->add_option("--seed", s.seed, "Generator seed")->capture_default_str();
  random->add_flag("--no-self-loops", s.no_self_loops, "Never emit (x, x)");
  random->add_option("--format", s.random_format, "Output format")
      ->check(CLI::IsMember({"edge", "json"}))
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Oracle sweep");
  verify->add_option("--nmax", s.nmax, "Largest universe size")
      ->check(CLI::Range(1, 12))
      ->capture_default_str();
  verify->add_option("--count", s.count, "Random instances per size above 3")
      ->capture_default_str();
  verify->add_option("--seed", s.seed, "Sweep seed")->capture_default_str();
  verify->add_option("--threads", s.threads, "Worker threads, 0 = all cores")
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    return dispatch(app, s, in, out);
  } catch (const ContractViolation& e) {
    err << "error: " << e.what() << "\n";
    return kExitViolation;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace relchoice
