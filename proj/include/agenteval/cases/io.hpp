// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>
#include <vector>

#include "agenteval/core/types.hpp"

namespace agenteval {

// Case file format: JSON array of
//   {name, turns:[{user_input, acceptable_responses?:[...]}],
//    overall_expectations?, expected_tool?, metadata?}
// Unknown extra fields are preserved in the metadata map. Duplicate case
// names are a ParseError.
std::vector<Case> load_cases(const std::string& path);
void save_cases(const std::vector<Case>& cases, const std::string& path);

// Name-keyed view, as the case-aware metrics expect.
std::map<std::string, Case> case_map(const std::vector<Case>& cases);

}  // namespace agenteval
