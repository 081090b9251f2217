// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "agenteval/core/types.hpp"

namespace agenteval {

// One parameter of a tool schema. Only required-property presence is
// validated at invocation time.
struct ToolParam {
    std::string name;
    std::string type = "string";
    std::string description;
    bool required = false;

    bool operator==(const ToolParam&) const = default;
};

struct ToolSpec {
    std::string name;
    std::string description;
    std::vector<ToolParam> parameters;

    bool operator==(const ToolSpec&) const = default;
};

struct ToolCallRequest {
    std::string tool_name;
    std::vector<std::pair<std::string, std::string>> arguments;

    bool operator==(const ToolCallRequest&) const = default;
};

// What a model call produced: final text, tool call requests, or both,
// plus the provider's token accounting.
struct ModelReply {
    std::string text;
    std::vector<ToolCallRequest> tool_calls;
    std::int64_t input_tokens = 0;
    std::int64_t output_tokens = 0;

    bool has_tool_calls() const { return !tool_calls.empty(); }
};

// Abstraction over whatever serves the model. Implementations must accept
// concurrent calls from multiple agent instances.
class ModelProvider {
public:
    virtual ~ModelProvider() = default;

    // messages must be non-empty and end with a user or tool message.
    // Throws ProviderError on failure.
    virtual ModelReply converse(const std::string& system_prompt,
                                const std::vector<Message>& messages,
                                const std::string& model_id,
                                double temperature,
                                const std::vector<ToolSpec>& tools) = 0;
};

// Whitespace token count, the accounting rule of the scripted provider.
std::int64_t whitespace_token_count(const std::string& text);

enum class MatchKind { Exact, Substring, Any };

// One scripted rule: a predicate on the last user/tool message and the
// reply to produce. First matching rule wins.
struct ScriptedRule {
    MatchKind match = MatchKind::Any;
    std::string pattern;
    std::string reply_text;
    std::vector<ToolCallRequest> tool_calls;
    std::int64_t delay_ms = 0;
};

// Deterministic provider for tests and CI runs. Token accounting:
// input = whitespace tokens of system prompt plus all message texts,
// output = whitespace tokens of the reply text.
class ScriptedProvider : public ModelProvider {
public:
    ScriptedProvider() = default;
    explicit ScriptedProvider(std::vector<ScriptedRule> rules)
        : rules_(std::move(rules)) {}

    void add_rule(ScriptedRule rule) { rules_.push_back(std::move(rule)); }

    ModelReply converse(const std::string& system_prompt,
                        const std::vector<Message>& messages,
                        const std::string& model_id, double temperature,
                        const std::vector<ToolSpec>& tools) override;

private:
    std::vector<ScriptedRule> rules_;
};

}  // namespace agenteval
