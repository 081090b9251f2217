// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "agenteval/runtime/provider.hpp"

namespace agenteval {

struct HttpProviderConfig {
    std::string endpoint;            // http://host:port/path
    std::string auth_header_name;    // optional, e.g. "Authorization"
    std::string auth_header_value;   // resolved from the environment by the CLI
    int timeout_s = 30;
};

// Generic JSON chat-completion adapter. Request body:
//   {model, system, messages:[{role,text}], temperature,
//    tools:[{name, description, parameters:{name:{type, description,
//    required}}}]}
// Expected reply:
//   {text?, tool_calls?:[{name, arguments:{k:v}}],
//    usage:{input_tokens, output_tokens}}
// Transport failures raise a retriable ProviderError; malformed replies a
// non-retriable one.
class HttpProvider : public ModelProvider {
public:
    explicit HttpProvider(HttpProviderConfig config);

    ModelReply converse(const std::string& system_prompt,
                        const std::vector<Message>& messages,
                        const std::string& model_id, double temperature,
                        const std::vector<ToolSpec>& tools) override;

private:
    HttpProviderConfig config_;
    std::string base_url_;
    std::string path_;
};

}  // namespace agenteval
