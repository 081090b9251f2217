// SPDX-License-Identifier: Apache-2.0
#include "agenteval/runtime/agent.hpp"

#include <chrono>
#include <set>

namespace agenteval {

namespace {

std::int64_t elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
}

}  // namespace

Agent::Agent(AgentConfig config, ModelProvider& provider, ToolRegistry tools,
             TraceRecorder* recorder)
    : config_(std::move(config)),
      provider_(provider),
      tools_(std::move(tools)),
      recorder_(recorder) {
    if (config_.temperature < 0.0 || config_.temperature > 1.0) {
        throw Error("temperature must be in [0,1]");
    }
    if (config_.max_hops < 1) {
        throw Error("max_hops must be >= 1");
    }
    std::set<std::string> names;
    for (const ToolSpec& spec : config_.tools) {
        if (!names.insert(spec.name).second) {
            throw Error("duplicate tool name '" + spec.name + "'");
        }
        if (tools_.find(spec.name) == tools_.end()) {
            throw ToolResolutionError("tool '" + spec.name +
                                      "' has no implementation");
        }
    }
}

void Agent::record_llm_trace(const ModelReply& reply, std::int64_t latency_ms) {
    if (recorder_ == nullptr) {
        return;
    }
    Trace t;
    t.to = TraceKind::LLM;
    t.latency_ms = latency_ms;
    t.input_tokens = reply.input_tokens;
    t.output_tokens = reply.output_tokens;
    t.model_id = config_.model_id;
    t.user_conversation = messages_;
    if (reply.has_tool_calls()) {
        for (const ToolCallRequest& call : reply.tool_calls) {
            ToolInvocation requested;
            requested.tool_name = call.tool_name;
            requested.arguments = call.arguments;
            t.tool_invocations.push_back(std::move(requested));
        }
    } else {
        // Closing trace of a turn: carries every invocation executed in the
        // conversation so far, so the final trace aggregates them all.
        t.tool_invocations = all_invocations_;
    }
    recorder_->record(std::move(t));
}

void Agent::record_tool_trace(const ToolInvocation& invocation) {
    if (recorder_ == nullptr) {
        return;
    }
    Trace t;
    t.to = TraceKind::Tool;
    t.latency_ms = invocation.latency_ms;
    t.model_id = config_.model_id;
    t.user_conversation = messages_;
    t.tool_invocations = {invocation};
    recorder_->record(std::move(t));
}

std::string Agent::converse(const std::string& user_input) {
    messages_.push_back(Message{Role::User, user_input});

    for (std::int64_t hop = 0; hop < config_.max_hops; ++hop) {
        auto start = std::chrono::steady_clock::now();
        ModelReply reply;
        try {
            reply = provider_.converse(config_.system_prompt, messages_,
                                       config_.model_id, config_.temperature,
                                       config_.tools);
        } catch (const std::exception& e) {
            // Record the failed attempt so the conversation stays observable.
            if (recorder_ != nullptr) {
                Trace t;
                t.to = TraceKind::LLM;
                t.latency_ms = elapsed_ms(start);
                t.model_id = config_.model_id;
                t.user_conversation = messages_;
                t.extras["error"] = e.what();
                recorder_->record(std::move(t));
            }
            throw;
        }
        std::int64_t latency = elapsed_ms(start);

        if (!reply.text.empty()) {
            messages_.push_back(Message{Role::Assistant, reply.text});
        }
        record_llm_trace(reply, latency);

        if (!reply.has_tool_calls()) {
            if (reply.text.empty()) {
                throw ProviderError("model reply has neither text nor tool calls",
                                    false);
            }
            return reply.text;
        }

        for (const ToolCallRequest& call : reply.tool_calls) {
            auto impl = tools_.find(call.tool_name);
            if (impl == tools_.end()) {
                throw ToolResolutionError("model requested unknown tool '" +
                                          call.tool_name + "'");
            }

            const ToolSpec* spec = nullptr;
            for (const ToolSpec& s : config_.tools) {
                if (s.name == call.tool_name) {
                    spec = &s;
                    break;
                }
            }

            ToolInvocation invocation;
            invocation.tool_name = call.tool_name;
            invocation.arguments = call.arguments;

            std::string missing;
            if (spec != nullptr) {
                for (const ToolParam& param : spec->parameters) {
                    if (!param.required) {
                        continue;
                    }
                    bool present = false;
                    for (const auto& [name, value] : call.arguments) {
                        (void)value;
                        if (name == param.name) {
                            present = true;
                            break;
                        }
                    }
                    if (!present) {
                        missing = param.name;
                        break;
                    }
                }
            }

            auto tool_start = std::chrono::steady_clock::now();
            if (!missing.empty()) {
                invocation.result_text =
                    "ERROR: missing required argument '" + missing + "'";
                invocation.success = false;
            } else {
                try {
                    invocation.result_text = impl->second(call.arguments);
                    invocation.success = true;
                } catch (const std::exception& e) {
                    invocation.result_text = std::string("ERROR: ") + e.what();
                    invocation.success = false;
                }
            }
            invocation.latency_ms = elapsed_ms(tool_start);

            all_invocations_.push_back(invocation);
            messages_.push_back(Message{Role::Tool, invocation.result_text});
            record_tool_trace(invocation);
        }
    }

    throw HopLimitError("hop limit of " + std::to_string(config_.max_hops) +
                            " reached without a final reply",
                        messages_);
}

}  // namespace agenteval
