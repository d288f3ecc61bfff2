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

// JSON and plain-text renderings of analysis results. Sets are written as
// arrays of labels in ascending index order.

#ifndef RELCHOICE_REPORT_JSON_HPP_
#define RELCHOICE_REPORT_JSON_HPP_

#include <string>

#include "json.hpp"
#include "relchoice/quotient.hpp"
#include "relchoice/relation.hpp"
#include "relchoice/solutions.hpp"
#include "relchoice/zorn.hpp"

namespace relchoice {

nlohmann::json labels_json(const Universe& u, const IndexSet& set);

nlohmann::json to_json(const Universe& u, const PropertyReport& report);
nlohmann::json to_json(const QuotientRelation& q);
nlohmann::json to_json(const Universe& u, const SolutionReport& report);
nlohmann::json to_json(const Universe& u, const DebReport& report);
nlohmann::json to_json(const Universe& u, const ZornRun& run);
nlohmann::json to_json(const Universe& u, const HypothesisCheck& check);
nlohmann::json to_json(const Universe& u, const TheoremReport& report);

std::string to_text(const Universe& u, const PropertyReport& report);
std::string to_text(const QuotientRelation& q);
std::string to_text(const Universe& u, const SolutionReport& solution,
                    const DebReport& deb);

}  // namespace relchoice

#endif  // RELCHOICE_REPORT_JSON_HPP_
