// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "agenteval/core/types.hpp"
#include "agenteval/runtime/provider.hpp"

namespace agenteval {

// How cases_for_agent_tools produces the user input for each tool.
// Template mode is deterministic; LLM mode asks the given provider.
struct CaseGenerator {
    enum class Mode { Template, Llm };
    Mode mode = Mode::Template;
    ModelProvider* provider = nullptr;  // required for Llm mode
    std::string model_id;               // used in Llm mode
};

std::vector<std::string> supported_case_gen_locales();

// One case per tool per language, named "Tool use: <tool_name>" so the
// expected tool resolves via the name prefix. metadata records the locale
// and generator mode. Throws Error on an unsupported locale in template
// mode, listing the supported ones.
std::vector<Case> cases_for_agent_tools(const std::vector<ToolSpec>& tools,
                                        const std::vector<std::string>& languages,
                                        const CaseGenerator& generator = {});

}  // namespace agenteval
