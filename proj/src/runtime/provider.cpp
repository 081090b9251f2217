// SPDX-License-Identifier: Apache-2.0
#include "agenteval/runtime/provider.hpp"

#include <cctype>
#include <chrono>
#include <thread>

#include "agenteval/errors.hpp"

namespace agenteval {

std::int64_t whitespace_token_count(const std::string& text) {
    std::int64_t count = 0;
    bool in_token = false;
    for (unsigned char c : text) {
        if (std::isspace(c)) {
            in_token = false;
        } else if (!in_token) {
            in_token = true;
            ++count;
        }
    }
    return count;
}

ModelReply ScriptedProvider::converse(const std::string& system_prompt,
                                      const std::vector<Message>& messages,
                                      const std::string& model_id,
                                      double temperature,
                                      const std::vector<ToolSpec>& tools) {
    (void)model_id;
    (void)temperature;
    (void)tools;
    if (messages.empty()) {
        throw ProviderError("scripted provider called with no messages", false);
    }
    const Message& last = messages.back();
    if (last.role != Role::User && last.role != Role::Tool) {
        throw ProviderError("last message must be from user or tool", false);
    }

    const ScriptedRule* matched = nullptr;
    for (const ScriptedRule& rule : rules_) {
        bool hit = false;
        switch (rule.match) {
            case MatchKind::Exact: hit = last.text == rule.pattern; break;
            case MatchKind::Substring:
                hit = last.text.find(rule.pattern) != std::string::npos;
                break;
            case MatchKind::Any: hit = true; break;
        }
        if (hit) {
            matched = &rule;
            break;
        }
    }
    if (matched == nullptr) {
        throw ProviderError("no scripted rule matches message: '" + last.text +
                                "'",
                            false);
    }

    if (matched->delay_ms > 0) {
        std::this_thread::sleep_for(std::chrono::milliseconds(matched->delay_ms));
    }

    std::int64_t input_tokens = whitespace_token_count(system_prompt);
    for (const Message& m : messages) {
        input_tokens += whitespace_token_count(m.text);
    }

    ModelReply reply;
    reply.text = matched->reply_text;
    reply.tool_calls = matched->tool_calls;
    reply.input_tokens = input_tokens;
    reply.output_tokens = whitespace_token_count(reply.text);
    if (reply.text.empty() && reply.tool_calls.empty()) {
        throw ProviderError("scripted rule produces neither text nor tool calls",
                            false);
    }
    return reply;
}

}  // namespace agenteval
