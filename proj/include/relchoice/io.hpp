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

// Text formats for relations.
//
// Edge format: one pair per line as two whitespace-separated labels. '#'
// starts a comment. An optional first line "elements: l1 l2 ..." declares
// labels up front, which is the only way to introduce isolated elements.
// Labels otherwise enter the universe in order of first appearance.
//
//   elements: a b c d
//   a b
//   b c   # trailing comment
//
// JSON format: {"elements": [...], "pairs": [["a", "b"], ...]}. Both fields
// are required, every pair must use declared labels, and other fields are
// rejected.

#ifndef RELCHOICE_IO_HPP_
#define RELCHOICE_IO_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "relchoice/quotient.hpp"
#include "relchoice/relation.hpp"

namespace relchoice {

enum class Format { kEdge, kJson };

std::optional<Format> parse_format(std::string_view name);

class ParseError : public InvalidInput {
 public:
  // `line` and `column` are 1-based; 0 when the error has no text position,
  // in which case `location` names the offending JSON element.
  ParseError(std::size_t line, std::size_t column, std::string location,
             const std::string& message);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& location() const { return location_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string location_;
};

struct RelationDocument {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> pairs;
  Format source_format = Format::kEdge;
};

RelationDocument parse_document(std::string_view text, Format format);
Relation to_relation(const RelationDocument& document);
Relation parse_relation(std::string_view text, Format format);

// Always writes the elements header, then pairs in index order.
std::string serialize_edge(const Relation& r);
std::string serialize_json(const Relation& r);
std::string serialize(const Relation& r, Format format);

// Hasse diagram of the quotient order: one node per class, labeled with its
// member labels, and one edge per covering pair.
std::string emit_dot(const QuotientRelation& q);

}  // namespace relchoice

#endif  // RELCHOICE_IO_HPP_
