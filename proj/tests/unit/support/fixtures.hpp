// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "agenteval/core/types.hpp"
#include "agenteval/eval/trace_set.hpp"
#include "agenteval/runtime/agent.hpp"
#include "agenteval/runtime/run.hpp"

namespace fixtures {

// Hand-built trace constructors. seq/timestamps are assigned by the caller.
agenteval::Trace llm_trace(const std::string& conversation_id, std::int64_t seq,
                           std::vector<agenteval::Message> snapshot,
                           std::int64_t input_tokens, std::int64_t output_tokens,
                           std::int64_t latency_ms,
                           const std::string& model_id = "model-a",
                           std::vector<agenteval::ToolInvocation> invocations = {});

agenteval::Trace tool_trace(const std::string& conversation_id, std::int64_t seq,
                            std::vector<agenteval::Message> snapshot,
                            agenteval::ToolInvocation invocation,
                            std::int64_t latency_ms,
                            const std::string& model_id = "model-a");

agenteval::ToolInvocation invocation(const std::string& tool,
                                     const std::string& result = "ok",
                                     std::int64_t latency_ms = 0,
                                     bool success = true);

agenteval::Message user(const std::string& text);
agenteval::Message assistant(const std::string& text);
agenteval::Message tool_msg(const std::string& text);

// One direct-reply conversation (single LLM trace).
std::vector<agenteval::Trace> direct_conversation(
    const std::string& conversation_id, const std::string& case_name,
    const std::string& user_text, const std::string& assistant_text,
    std::int64_t input_tokens = 10, std::int64_t output_tokens = 5,
    std::int64_t latency_ms = 0, const std::string& model_id = "model-a",
    const std::string& permutation_id = "");

// A varied 12-conversation fixture with known token counts, latencies,
// models, tool usage, and indicator phrases; the metric-oracle tests fold
// over it independently.
std::vector<std::vector<agenteval::Trace>> oracle_conversations();

agenteval::TraceSet oracle_trace_set();

// A scripted agent setup shared by runtime/engine tests: a weather tool
// plus direct-reply rules, fully deterministic.
struct ScriptedAgent {
    agenteval::AgentConfig config;
    std::shared_ptr<agenteval::ScriptedProvider> provider;
    agenteval::ToolRegistry tools;

    agenteval::AgentFactory factory() const;
};

ScriptedAgent weather_agent(std::int64_t max_hops = 8);

}  // namespace fixtures
