// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>

#include <nlohmann/json.hpp>

#include "agenteval/runtime/provider.hpp"

namespace agenteval {

// Builds a provider from its JSON spec:
//   {"kind":"scripted", "rules":[{match, pattern?, reply_text?,
//    tool_calls?:[{name, arguments}], delay_ms?}]}
//   {"kind":"http", "endpoint", "auth_header"?, "auth_env"?, "timeout_s"?}
// For http, the auth header value is read from the environment variable
// named by auth_env. Throws ParseError on malformed specs.
std::shared_ptr<ModelProvider> provider_from_json(const nlohmann::json& spec);

std::vector<ScriptedRule> scripted_rules_from_json(const nlohmann::json& rules);

}  // namespace agenteval
