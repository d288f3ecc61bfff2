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

#include "relchoice/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <thread>

#include "relchoice/io.hpp"
#include "relchoice/quotient.hpp"
#include "relchoice/random.hpp"
#include "relchoice/solutions.hpp"
#include "relchoice/zorn.hpp"

namespace relchoice {
namespace {

constexpr std::array<double, 6> kDensities = {0.1, 0.25, 0.4, 0.55, 0.7, 0.85};
constexpr std::size_t kExhaustiveMaxN = 3;
constexpr std::size_t kChoiceExhaustiveMaxN = 4;

std::string set_text(const IndexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    out += (i ? "," : "") + std::to_string(s[i]);
  }
  return out + "}";
}

std::string sets_text(const std::vector<IndexSet>& sets) {
  std::string out = "[";
  for (std::size_t i = 0; i < sets.size(); ++i) {
    out += (i ? " " : "") + set_text(sets[i]);
  }
  return out + "]";
}

class Checker {
 public:
  explicit Checker(const Relation& r) : r_(r) {}

  void expect(bool ok, const char* check, const std::string& detail = "") {
    if (!ok) violations_.push_back({check, serialize_edge(r_), detail});
  }

  std::vector<Violation> take() { return std::move(violations_); }

 private:
  const Relation& r_;
  std::vector<Violation> violations_;
};

struct WorkItem {
  std::size_t n;
  std::uint64_t key;  // mask for exhaustive items, index for random ones
  bool exhaustive;
};

std::vector<WorkItem> work_items(const SweepOptions& options) {
  std::vector<WorkItem> items;
  for (std::size_t n = 1; n <= std::min(options.nmax, kExhaustiveMaxN); ++n) {
    const std::uint64_t total = std::uint64_t{1} << (n * n);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      items.push_back({n, mask, true});
    }
  }
  for (std::size_t n = kExhaustiveMaxN + 1; n <= options.nmax; ++n) {
    for (std::size_t i = 0; i < options.count; ++i) {
      items.push_back({n, i, false});
    }
  }
  return items;
}

Relation materialize(const SweepOptions& options, const WorkItem& item) {
  return item.exhaustive ? relation_from_mask(item.n, item.key)
                         : sweep_instance(options.seed, item.n, item.key);
}

}  // namespace

std::vector<Violation> check_instance(const Relation& r,
                                      const oracle::OracleBudget& budget) {
  Checker check(r);
  const std::size_t n = r.size();
  if (n == 0) return {};

  const Relation closure = transitive_closure(r);
  const Relation brute_closure = oracle::brute_closure(r, budget);
  check.expect(closure == brute_closure, "closure");
  check.expect(asymmetric_part(r) == oracle::brute_asymmetric_part(r),
               "asymmetric_part");

  const auto minimal = minimal_undominated_sets(r);
  const auto brute_minimal = oracle::brute_minimal_undominated(r, budget);
  check.expect(minimal == brute_minimal, "minimal_undominated",
               sets_text(minimal) + " vs " + sets_text(brute_minimal));

  const auto cycles = top_cycles(r);
  std::vector<IndexSet> cycle_sets;
  for (const auto& c : cycles) {
    cycle_sets.push_back(c.members());
    check.expect(c.verify(r), "top_cycle_certificate", set_text(c.members()));
    const bool expect_trivial =
        c.members().size() == 1 &&
        !brute_closure.has(c.members()[0], c.members()[0]);
    check.expect(c.trivial() == expect_trivial, "top_cycle_trivial_flag");
  }
  const auto brute_cycles = oracle::brute_top_cycles(r, budget);
  check.expect(cycle_sets == brute_cycles, "top_cycles",
               sets_text(cycle_sets) + " vs " + sets_text(brute_cycles));

  const IndexSet gocha = schwartz(r, Variant::kGocha);
  const IndexSet strict = schwartz(r, Variant::kStrict);
  check.expect(gocha == oracle::brute_schwartz(r, false, budget),
               "schwartz_gocha");
  check.expect(strict == oracle::brute_schwartz(r, true, budget),
               "schwartz_strict");
  check.expect(!gocha.empty() && !strict.empty(), "schwartz_nonempty");

  const QuotientRelation q = quotient_relation(r);
  check.expect(classify(q.order).is_partial_order, "quotient_partial_order");
  check.expect(q.partition.class_count() == oracle::brute_class_count(r),
               "quotient_class_count");
  for (ClassId c = 0; c < q.order.size(); ++c) {
    for (ClassId d = 0; d < q.order.size(); ++d) {
      bool expected = c == d;
      for (Index x : q.partition.members(c)) {
        for (Index y : q.partition.members(d)) {
          expected = expected || brute_closure.has(x, y);
        }
      }
      check.expect(q.order.has(c, d) == expected, "quotient_order_definition");
    }
  }

  const IndexSet maximal = maximal_elements(r);
  check.expect(maximal == oracle::brute_maximal(r), "maximal_elements");
  IndexSet strict_union = maximal;
  for (const auto& c : strong_top_cycles(r)) {
    strict_union.insert(strict_union.end(), c.members().begin(),
                        c.members().end());
  }
  strict_union = normalize(strict_union, n);
  check.expect(strict == strict_union, "strict_equivalence");

  check.expect(deb_decompose(r).strict_violations() == 0, "deb_strict");

  const IndexSet found = find_top_cycle(r);
  check.expect(std::find(cycle_sets.begin(), cycle_sets.end(), found) !=
                   cycle_sets.end(),
               "find_top_cycle", set_text(found));
  check.expect(trace_top_cycle(r).extracted == found, "trace_top_cycle");

  const ChoiceFunction min_choice = ChoiceFunction::min_index(n);
  const ZornRun run = extend_chain(r, min_choice);
  check.expect(run.steps.size() <= n + 1, "extend_chain_steps");
  check.expect(static_cast<bool>(is_chain(r, run.terminal_chain)),
               "extend_chain_is_chain");
  {
    IndexSet bounds = upper_bounds(r, run.terminal_chain, false);
    const bool none_outside = std::all_of(
        bounds.begin(), bounds.end(), [&](Index x) {
          return std::binary_search(run.terminal_chain.begin(),
                                    run.terminal_chain.end(), x);
        });
    check.expect(none_outside, "extend_chain_terminal");
  }
  const FixedPoint fixed =
      rudin_fixed_point(n, chain_extension_step(r, min_choice), {}, n);
  check.expect(fixed.set == run.terminal_chain, "extend_chain_fixed_point");

  if (n <= budget.max_chain_n) {
    const HypothesisCheck hyp = check_hypothesis(r);
    const auto unbounded = oracle::brute_unbounded_chains(r, budget);
    check.expect(hyp.holds == unbounded.empty(), "hypothesis");
    if (hyp.unbounded_chain) {
      check.expect(std::find(unbounded.begin(), unbounded.end(),
                             *hyp.unbounded_chain) != unbounded.end(),
                   "hypothesis_witness");
    }
    if (hyp.holds) {
      check.expect(!cycles.empty(), "theorem_conclusion");
    }
  }

  if (n <= kChoiceExhaustiveMaxN) {
    const ChoiceFunction f = derive_choice(r);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      IndexSet a;
      for (Index i = 0; i < n; ++i) {
        if ((mask >> i) & 1U) a.push_back(i);
      }
      const Index x = f.select(a);
      check.expect(std::binary_search(a.begin(), a.end(), x), "choice_in_set");
    }
  }

  if (classify(r).is_partial_order) {
    check.expect(gocha == maximal && strict == maximal, "order_degeneration");
    for (const auto& c : cycles) {
      check.expect(c.members().size() == 1, "order_singleton_cycles");
    }
  }

  return check.take();
}

double sweep_density(std::size_t i) { return kDensities[i % kDensities.size()]; }

Relation sweep_instance(std::uint64_t seed, std::size_t n, std::size_t i) {
  SplitMix64 rng = SplitMix64(seed).split((std::uint64_t{n} << 32) | i);
  RandomRelationOptions options;
  options.n = n;
  options.density = sweep_density(i);
  return random_relation(options, rng);
}

Relation relation_from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<Bits> rows(n, Bits(n));
  for (Index u = 0; u < n; ++u) {
    for (Index v = 0; v < n; ++v) {
      if ((mask >> (u * n + v)) & 1U) rows[u].set(v);
    }
  }
  return Relation::from_rows(Universe::indexed(n), std::move(rows));
}

void for_each_sweep_instance(
    const SweepOptions& options,
    const std::function<void(const Relation&)>& visit) {
  for (const WorkItem& item : work_items(options)) {
    visit(materialize(options, item));
  }
}

SweepSummary run_sweep(const SweepOptions& options) {
  const std::vector<WorkItem> items = work_items(options);
  std::vector<std::vector<Violation>> found(items.size());

  unsigned threads = options.threads;
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    constexpr std::size_t kChunk = 64;
    while (true) {
      const std::size_t begin = next.fetch_add(kChunk);
      if (begin >= items.size()) return;
      const std::size_t end = std::min(items.size(), begin + kChunk);
      for (std::size_t i = begin; i < end; ++i) {
        const Relation r = materialize(options, items[i]);
        try {
          found[i] = check_instance(r);
        } catch (const std::exception& e) {
          found[i] = {{"exception", serialize_edge(r), e.what()}};
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  SweepSummary summary;
  for (std::size_t i = 0; i < items.size(); ++i) {
    (items[i].exhaustive ? summary.exhaustive_instances
                         : summary.random_instances)++;
    for (auto& v : found[i]) summary.violations.push_back(std::move(v));
  }
  return summary;
}

}  // namespace relchoice
