// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "agenteval/core/types.hpp"
#include "agenteval/errors.hpp"
#include "agenteval/runtime/provider.hpp"

namespace agenteval {

// The agent loop hit max_hops without a final text reply. Carries the
// conversation accumulated so far.
struct HopLimitError : Error {
    HopLimitError(const std::string& what, std::vector<Message> partial)
        : Error(what), conversation(std::move(partial)) {}
    std::vector<Message> conversation;
};

struct AgentConfig {
    std::string system_prompt;
    std::string model_id;
    double temperature = 0.0;
    std::int64_t max_hops = 8;
    std::vector<ToolSpec> tools;
};

// A tool implementation: takes the requested arguments, returns the result
// text. Throwing is reported to the model as "ERROR: <text>" and the loop
// continues.
using ToolFn = std::function<std::string(
    const std::vector<std::pair<std::string, std::string>>&)>;

using ToolRegistry = std::map<std::string, ToolFn>;

// Receives one step-level Trace per LLM call and per tool invocation.
// Implementations stamp identity fields, seq, and timestamps.
class TraceRecorder {
public:
    virtual ~TraceRecorder() = default;
    virtual void record(Trace step) = 0;
};

// Tool-calling converse loop over a model provider. One instance holds one
// conversation (short-term memory across turns) and is not safe for
// concurrent converse calls; run distinct instances concurrently instead.
class Agent {
public:
    // Throws if config is invalid, a tool spec has no implementation, or
    // tool names collide. recorder may be null (no tracing).
    Agent(AgentConfig config, ModelProvider& provider, ToolRegistry tools,
          TraceRecorder* recorder = nullptr);

    // Feeds one user turn through the loop: provider call, tool execution,
    // repeat, until the provider returns text with no tool calls. Returns
    // the final assistant text. Throws HopLimitError, ToolResolutionError,
    // or ProviderError.
    std::string converse(const std::string& user_input);

    const std::vector<Message>& conversation() const { return messages_; }
    const AgentConfig& config() const { return config_; }

private:
    void record_llm_trace(const ModelReply& reply, std::int64_t latency_ms);
    void record_tool_trace(const ToolInvocation& invocation);

    AgentConfig config_;
    ModelProvider& provider_;
    ToolRegistry tools_;
    TraceRecorder* recorder_ = nullptr;
    std::vector<Message> messages_;
    std::vector<ToolInvocation> all_invocations_;
};

}  // namespace agenteval
