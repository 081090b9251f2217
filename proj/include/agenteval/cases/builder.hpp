// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "agenteval/core/types.hpp"

namespace agenteval {

// Chainable builder for evaluation cases. build() enforces the Case
// invariants and throws BuildError on violations.
class CaseBuilder {
public:
    explicit CaseBuilder(std::string name);

    CaseBuilder& add_turn(std::string user_input,
                          std::vector<std::string> acceptable_responses = {});
    CaseBuilder& overall_expectations(std::string expectations);
    CaseBuilder& expected_tool(std::string tool_name);
    CaseBuilder& metadata(std::string key, std::string value);

    Case build() const;

private:
    Case case_;
};

}  // namespace agenteval
