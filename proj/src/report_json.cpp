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

#include "relchoice/report_json.hpp"

#include <sstream>

namespace relchoice {
namespace {

using json = nlohmann::json;

// k members produce k^2 certificate paths.
constexpr std::size_t kMaxPathListing = 32;

json pair_json(const Universe& u, Index a, Index b) {
  return json::array({u.label(a), u.label(b)});
}

json sets_json(const Universe& u, const std::vector<IndexSet>& sets) {
  json out = json::array();
  for (const auto& s : sets) out.push_back(labels_json(u, s));
  return out;
}

json cycles_json(const Universe& u, const std::vector<CycleWitness>& cycles) {
  json out = json::array();
  for (const auto& c : cycles) {
    json entry = {{"set", labels_json(u, c.members())},
                  {"trivial", c.trivial()}};
    if (c.members().size() > kMaxPathListing) {
      entry["paths_omitted"] = true;
    } else if (!c.trivial()) {
      json paths = json::array();
      for (Index a : c.members()) {
        for (Index b : c.members()) {
          json path = json::array();
          for (Index x : c.path(a, b)) path.push_back(u.label(x));
          paths.push_back(std::move(path));
        }
      }
      entry["paths"] = std::move(paths);
    }
    out.push_back(std::move(entry));
  }
  return out;
}

json deb_entries_json(const Universe& u, const std::vector<DebEntry>& entries) {
  json out = json::array();
  for (const auto& e : entries) {
    json entry = {{"set", labels_json(u, e.set)},
                  {"kind", std::string(to_string(e.kind))}};
    if (e.witness) {
      entry["witness"] = pair_json(u, e.witness->first, e.witness->second);
      entry["witness_kind"] = e.witness_is_outside_dominator
                                  ? "outside_dominator"
                                  : "not_mutually_reachable";
    }
    out.push_back(std::move(entry));
  }
  return out;
}

std::string join(const Universe& u, const IndexSet& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i > 0) out += ",";
    out += u.label(set[i]);
  }
  return out + "}";
}

}  // namespace

json labels_json(const Universe& u, const IndexSet& set) {
  json out = json::array();
  for (Index i : set) out.push_back(u.label(i));
  return out;
}

json to_json(const Universe& u, const PropertyReport& r) {
  json out = {{"reflexive", r.reflexive},
              {"transitive", r.transitive},
              {"antisymmetric", r.antisymmetric},
              {"total", r.total},
              {"partial_order", r.is_partial_order},
              {"total_order", r.is_total_order}};
  json witnesses = json::object();
  if (r.reflexive_witness) {
    witnesses["reflexive"] = {{"missing", pair_json(u, r.reflexive_witness->x,
                                                    r.reflexive_witness->x)}};
  }
  if (r.transitive_witness) {
    const auto& w = *r.transitive_witness;
    witnesses["transitive"] = {{"present", json::array({pair_json(u, w.x, w.z),
                                                         pair_json(u, w.z, w.y)})},
                               {"missing", pair_json(u, w.x, w.y)}};
  }
  if (r.antisymmetric_witness) {
    const auto& w = *r.antisymmetric_witness;
    witnesses["antisymmetric"] = {
        {"present",
         json::array({pair_json(u, w.x, w.y), pair_json(u, w.y, w.x)})}};
  }
  if (r.total_witness) {
    const auto& w = *r.total_witness;
    witnesses["total"] = {{"incomparable", pair_json(u, w.x, w.y)}};
  }
  out["witnesses"] = std::move(witnesses);
  return out;
}

json to_json(const QuotientRelation& q) {
  json classes = json::array();
  for (const auto& members : q.partition.classes()) {
    classes.push_back(labels_json(q.elements, members));
  }
  json order = json::array();
  for (const auto& [c, d] : q.order.pairs()) {
    order.push_back(json::array({c, d}));
  }
  return {{"classes", classes}, {"order", order}};
}

json to_json(const Universe& u, const SolutionReport& r) {
  return {{"maximal", labels_json(u, r.maximal)},
          {"minimal_undominated", sets_json(u, r.minimal_undominated)},
          {"top_cycles", cycles_json(u, r.top_cycles)},
          {"strong_top_cycles", cycles_json(u, r.strong_top_cycles)},
          {"schwartz_gocha", labels_json(u, r.schwartz_gocha)},
          {"schwartz_strict", labels_json(u, r.schwartz_strict)}};
}

json to_json(const Universe& u, const DebReport& r) {
  return {{"strict", deb_entries_json(u, r.strict)},
          {"strict_violations", r.strict_violations()},
          {"literal", deb_entries_json(u, r.literal)},
          {"literal_violations", r.literal_violations()}};
}

json to_json(const Universe& u, const ZornRun& run) {
  json steps = json::array();
  for (const auto& s : run.steps) {
    json step = {{"current", labels_json(u, s.current)},
                 {"candidates", labels_json(u, s.candidate_set)}};
    step["added"] = s.added ? json(u.label(*s.added)) : json(nullptr);
    steps.push_back(std::move(step));
  }
  json out = {{"steps", steps},
              {"terminal_chain", labels_json(u, run.terminal_chain)},
              {"extracted", labels_json(u, run.extracted)}};
  out["pivot"] = run.pivot ? json(u.label(*run.pivot)) : json(nullptr);
  return out;
}

json to_json(const Universe& u, const HypothesisCheck& check) {
  json out = {{"holds", check.holds},
              {"chains_examined", check.chains_examined}};
  out["unbounded_chain"] = check.unbounded_chain
                               ? labels_json(u, *check.unbounded_chain)
                               : json(nullptr);
  return out;
}

json to_json(const Universe& u, const TheoremReport& r) {
  return {{"hypothesis", to_json(u, r.hypothesis)},
          {"top_cycles", sets_json(u, r.top_cycles)},
          {"found", labels_json(u, r.found)},
          {"found_is_top_cycle", r.found_is_top_cycle},
          {"conclusion_holds", r.conclusion_holds},
          {"consistent", r.consistent},
          {"chain_run", to_json(u, r.chain_run)},
          {"top_cycle_run", to_json(u, r.top_cycle_run)},
          {"peel",
           {{"removed", labels_json(u, r.peel.removed)},
            {"remaining", labels_json(u, r.peel.remaining)},
            {"remaining_is_minimal", r.peel.remaining_is_minimal},
            {"iterations", r.peel.iterations}}}};
}

std::string to_text(const Universe& u, const PropertyReport& r) {
  std::ostringstream out;
  auto flag = [&](const char* name, bool value) {
    out << name << ": " << (value ? "true" : "false");
  };
  flag("reflexive", r.reflexive);
  if (r.reflexive_witness) {
    const auto x = r.reflexive_witness->x;
    out << "  (missing " << u.label(x) << " " << u.label(x) << ")";
  }
  out << "\n";
  flag("transitive", r.transitive);
  if (r.transitive_witness) {
    const auto& w = *r.transitive_witness;
    out << "  (" << u.label(w.x) << " " << u.label(w.z) << ", " << u.label(w.z)
        << " " << u.label(w.y) << " present; missing " << u.label(w.x) << " "
        << u.label(w.y) << ")";
  }
  out << "\n";
  flag("antisymmetric", r.antisymmetric);
  if (r.antisymmetric_witness) {
    const auto& w = *r.antisymmetric_witness;
    out << "  (" << u.label(w.x) << " " << u.label(w.y) << " both ways)";
  }
  out << "\n";
  flag("total", r.total);
  if (r.total_witness) {
    const auto& w = *r.total_witness;
    out << "  (" << u.label(w.x) << " " << u.label(w.y) << " incomparable)";
  }
  out << "\n";
  flag("partial_order", r.is_partial_order);
  out << "\n";
  flag("total_order", r.is_total_order);
  out << "\n";
  return out.str();
}

std::string to_text(const QuotientRelation& q) {
  std::ostringstream out;
  out << "classes:\n";
  for (ClassId c = 0; c < q.partition.class_count(); ++c) {
    out << "  " << q.order.universe().label(c) << " = "
        << join(q.elements, q.partition.members(c)) << "\n";
  }
  out << "order:\n";
  for (const auto& [c, d] : q.order.pairs()) {
    out << "  " << q.order.universe().label(c) << " "
        << q.order.universe().label(d) << "\n";
  }
  return out.str();
}

std::string to_text(const Universe& u, const SolutionReport& s,
                    const DebReport& deb) {
  std::ostringstream out;
  auto list = [&](const char* name, const std::vector<IndexSet>& sets) {
    out << name << ":";
    for (const auto& set : sets) out << " " << join(u, set);
    out << "\n";
  };
  auto cycles = [&](const char* name, const std::vector<CycleWitness>& cs) {
    out << name << ":";
    for (const auto& c : cs) {
      out << " " << join(u, c.members()) << (c.trivial() ? "(trivial)" : "");
    }
    out << "\n";
  };
  out << "maximal: " << join(u, s.maximal) << "\n";
  list("minimal_undominated", s.minimal_undominated);
  cycles("top_cycles", s.top_cycles);
  cycles("strong_top_cycles", s.strong_top_cycles);
  out << "schwartz_gocha: " << join(u, s.schwartz_gocha) << "\n";
  out << "schwartz_strict: " << join(u, s.schwartz_strict) << "\n";
  auto deb_lines = [&](const char* name, const std::vector<DebEntry>& es) {
    out << name << ":";
    for (const auto& e : es) {
      out << " " << join(u, e.set) << "=" << to_string(e.kind);
    }
    out << "\n";
  };
  deb_lines("deb_strict", deb.strict);
  deb_lines("deb_literal", deb.literal);
  out << "deb_strict_violations: " << deb.strict_violations() << "\n";
  out << "deb_literal_violations: " << deb.literal_violations() << "\n";
  return out.str();
}

}  // namespace relchoice
