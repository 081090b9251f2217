// SPDX-License-Identifier: Apache-2.0
#include "agenteval/cases/builder.hpp"

#include "agenteval/errors.hpp"

namespace agenteval {

CaseBuilder::CaseBuilder(std::string name) {
    case_.name = std::move(name);
}

CaseBuilder& CaseBuilder::add_turn(std::string user_input,
                                   std::vector<std::string> acceptable_responses) {
    if (user_input.empty()) {
        throw BuildError("turn user_input must be non-empty (case '" +
                         case_.name + "')");
    }
    case_.turns.push_back(
        Turn{std::move(user_input), std::move(acceptable_responses)});
    return *this;
}

CaseBuilder& CaseBuilder::overall_expectations(std::string expectations) {
    case_.overall_expectations = std::move(expectations);
    return *this;
}

CaseBuilder& CaseBuilder::expected_tool(std::string tool_name) {
    case_.expected_tool = std::move(tool_name);
    return *this;
}

CaseBuilder& CaseBuilder::metadata(std::string key, std::string value) {
    case_.metadata[std::move(key)] = std::move(value);
    return *this;
}

Case CaseBuilder::build() const {
    if (case_.name.empty()) {
        throw BuildError("case name must be non-empty");
    }
    if (case_.turns.empty()) {
        throw BuildError("case '" + case_.name + "' needs at least one turn");
    }
    return case_;
}

}  // namespace agenteval
