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

#include "relchoice/io.hpp"

#include <cctype>
#include <sstream>
#include <unordered_set>

#include "json.hpp"

namespace relchoice {
namespace {

using json = nlohmann::json;

constexpr std::string_view kElementsHeader = "elements:";

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
    }
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
    }
    tokens.push_back({line.substr(start, i - start), start + 1});
  }
  return tokens;
}

std::string describe(std::size_t line, std::size_t column,
                     const std::string& location, const std::string& message) {
  std::ostringstream out;
  if (line > 0) {
    out << "line " << line << ", column " << column << ": ";
  } else if (!location.empty()) {
    out << location << ": ";
  }
  out << message;
  return out.str();
}

RelationDocument parse_edge(std::string_view text) {
  RelationDocument doc;
  doc.source_format = Format::kEdge;
  std::unordered_set<std::string> declared;
  auto declare = [&](std::string_view label) {
    if (declared.emplace(label).second) doc.elements.emplace_back(label);
  };

  bool seen_content = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;

    if (tokens.front().text.starts_with(kElementsHeader)) {
      if (seen_content) {
        throw ParseError(line_no, tokens.front().column, "",
                         "the elements header must be the first entry");
      }
      seen_content = true;
      // Allow "elements:a" as well as "elements: a".
      std::vector<Token> labels = tokens;
      labels.front().text.remove_prefix(kElementsHeader.size());
      labels.front().column += kElementsHeader.size();
      for (const Token& t : labels) {
        if (t.text.empty()) continue;
        if (declared.count(std::string(t.text)) > 0) {
          throw ParseError(line_no, t.column, "",
                           "duplicate label '" + std::string(t.text) + "'");
        }
        declare(t.text);
      }
      continue;
    }

    seen_content = true;
    if (tokens.size() != 2) {
      const std::size_t column =
          tokens.size() < 2 ? tokens.back().column + tokens.back().text.size()
                            : tokens[2].column;
      throw ParseError(line_no, column, "",
                       "expected two labels, found " +
                           std::to_string(tokens.size()));
    }
    declare(tokens[0].text);
    declare(tokens[1].text);
    doc.pairs.emplace_back(std::string(tokens[0].text),
                           std::string(tokens[1].text));
  }
  if (!seen_content) throw ParseError(1, 1, "", "input contains no relation");
  return doc;
}

RelationDocument parse_json(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    // Translate the byte offset into line and column.
    const std::size_t offset = std::min<std::size_t>(e.byte, text.size());
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i + 1 < offset; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(line, column, "", "malformed JSON");
  }

  if (!root.is_object()) throw ParseError(0, 0, "/", "expected an object");
  for (const auto& [key, value] : root.items()) {
    if (key != "elements" && key != "pairs") {
      throw ParseError(0, 0, "/" + key, "unknown field");
    }
  }
  if (!root.contains("elements") || !root["elements"].is_array()) {
    throw ParseError(0, 0, "/elements", "expected an array of labels");
  }
  if (!root.contains("pairs") || !root["pairs"].is_array()) {
    throw ParseError(0, 0, "/pairs", "expected an array of pairs");
  }

  RelationDocument doc;
  doc.source_format = Format::kJson;
  std::unordered_set<std::string> declared;
  const json& elements = root["elements"];
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const std::string where = "/elements/" + std::to_string(i);
    if (!elements[i].is_string()) {
      throw ParseError(0, 0, where, "label must be a string");
    }
    std::string label = elements[i].get<std::string>();
    if (!declared.insert(label).second) {
      throw ParseError(0, 0, where, "duplicate label '" + label + "'");
    }
    doc.elements.push_back(std::move(label));
  }
  const json& pairs = root["pairs"];
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const std::string where = "/pairs/" + std::to_string(i);
    const json& pair = pairs[i];
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() ||
        !pair[1].is_string()) {
      throw ParseError(0, 0, where, "pair must be two labels");
    }
    std::string a = pair[0].get<std::string>();
    std::string b = pair[1].get<std::string>();
    for (const std::string* label : {&a, &b}) {
      if (declared.count(*label) == 0) {
        throw ParseError(0, 0, where, "unknown label '" + *label + "'");
      }
    }
    doc.pairs.emplace_back(std::move(a), std::move(b));
  }
  return doc;
}

std::string escape_dot(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::optional<Format> parse_format(std::string_view name) {
  if (name == "edge") return Format::kEdge;
  if (name == "json") return Format::kJson;
  return std::nullopt;
}

ParseError::ParseError(std::size_t line, std::size_t column,
                       std::string location, const std::string& message)
    : InvalidInput(describe(line, column, location, message)),
      line_(line),
      column_(column),
      location_(std::move(location)) {}

RelationDocument parse_document(std::string_view text, Format format) {
  return format == Format::kEdge ? parse_edge(text) : parse_json(text);
}

Relation to_relation(const RelationDocument& document) {
  return Relation::from_labels(document.elements, document.pairs);
}

Relation parse_relation(std::string_view text, Format format) {
  return to_relation(parse_document(text, format));
}

std::string serialize_edge(const Relation& r) {
  std::string out(kElementsHeader);
  for (const auto& label : r.universe().labels()) out += " " + label;
  out += "\n";
  for (const auto& [u, v] : r.pairs()) {
    out += r.universe().label(u) + " " + r.universe().label(v) + "\n";
  }
  return out;
}

std::string serialize_json(const Relation& r) {
  json pairs = json::array();
  for (const auto& [u, v] : r.pairs()) {
    pairs.push_back({r.universe().label(u), r.universe().label(v)});
  }
  json root = {{"elements", r.universe().labels()}, {"pairs", pairs}};
  return root.dump() + "\n";
}

std::string serialize(const Relation& r, Format format) {
  return format == Format::kEdge ? serialize_edge(r) : serialize_json(r);
}

std::string emit_dot(const QuotientRelation& q) {
  const Relation& order = q.order;
  const std::size_t k = order.size();
  std::ostringstream out;
  out << "digraph quotient {\n";
  for (ClassId c = 0; c < k; ++c) {
    std::string label;
    for (Index x : q.partition.members(c)) {
      if (!label.empty()) label += ",";
      label += q.elements.label(x);
    }
    out << "  c" << c << " [label=\"" << escape_dot(label) << "\"];\n";
  }
  for (ClassId c = 0; c < k; ++c) {
    for (ClassId d = 0; d < k; ++d) {
      if (c == d || !order.has(c, d)) continue;
      bool covered = true;
      for (ClassId e = 0; e < k && covered; ++e) {
        if (e != c && e != d && order.has(c, e) && order.has(e, d)) {
          covered = false;
        }
      }
      if (covered) out << "  c" << c << " -> c" << d << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace relchoice
