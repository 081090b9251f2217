// SPDX-License-Identifier: Apache-2.0
#include "agenteval/core/types.hpp"

#include <string>

#include "agenteval/errors.hpp"

namespace agenteval {

const char* to_string(Role role) {
    switch (role) {
        case Role::User: return "user";
        case Role::Assistant: return "assistant";
        case Role::System: return "system";
        case Role::Tool: return "tool";
    }
    return "user";
}

Role role_from_string(const std::string& s) {
    if (s == "user") return Role::User;
    if (s == "assistant") return Role::Assistant;
    if (s == "system") return Role::System;
    if (s == "tool") return Role::Tool;
    throw Error("unknown message role: '" + s + "'");
}

const char* to_string(TraceKind kind) {
    return kind == TraceKind::LLM ? "LLM" : "Tool";
}

TraceKind trace_kind_from_string(const std::string& s) {
    if (s == "LLM") return TraceKind::LLM;
    if (s == "Tool") return TraceKind::Tool;
    throw Error("unknown trace kind: '" + s + "'");
}

const char* to_string(Unit unit) {
    switch (unit) {
        case Unit::Count: return "Count";
        case Unit::Milliseconds: return "Milliseconds";
        case Unit::Tokens: return "Tokens";
        case Unit::USD: return "USD";
        case Unit::Score: return "Score";
        case Unit::Dimensionless: return "Dimensionless";
    }
    return "Dimensionless";
}

Unit unit_from_string(const std::string& s) {
    if (s == "Count") return Unit::Count;
    if (s == "Milliseconds") return Unit::Milliseconds;
    if (s == "Tokens") return Unit::Tokens;
    if (s == "USD") return Unit::USD;
    if (s == "Score") return Unit::Score;
    if (s == "Dimensionless") return Unit::Dimensionless;
    throw Error("unknown unit: '" + s + "'");
}

void validate_conversation(const std::vector<Trace>& traces) {
    if (traces.empty()) {
        throw Error("conversation has no traces");
    }
    const std::string& id = traces.front().conversation_id;
    for (std::size_t i = 0; i < traces.size(); ++i) {
        const Trace& t = traces[i];
        if (t.conversation_id != id) {
            throw Error("conversation '" + id + "' mixes traces of '" +
                        t.conversation_id + "'");
        }
        if (t.seq != static_cast<std::int64_t>(i)) {
            throw Error("conversation '" + id + "' has seq " +
                        std::to_string(t.seq) + " at position " +
                        std::to_string(i) + " (gap or repeat)");
        }
        if (t.latency_ms < 0 || t.input_tokens < 0 || t.output_tokens < 0) {
            throw Error("conversation '" + id + "' seq " +
                        std::to_string(t.seq) + " has a negative counter");
        }
        for (const Message& m : t.user_conversation) {
            if (m.text.empty() && m.role != Role::Tool) {
                throw Error("conversation '" + id + "' seq " +
                            std::to_string(t.seq) +
                            ": only tool messages may be empty");
            }
        }
        for (const ToolInvocation& inv : t.tool_invocations) {
            if (inv.tool_name.empty()) {
                throw Error("conversation '" + id + "' seq " +
                            std::to_string(t.seq) +
                            ": invocation with empty tool name");
            }
            if (inv.latency_ms < 0) {
                throw Error("conversation '" + id + "' seq " +
                            std::to_string(t.seq) +
                            ": invocation with negative latency");
            }
        }
        if (t.to == TraceKind::Tool) {
            if (t.input_tokens != 0 || t.output_tokens != 0) {
                throw Error("conversation '" + id + "' seq " +
                            std::to_string(t.seq) +
                            ": tool trace must have zero token counts");
            }
            if (t.tool_invocations.size() != 1) {
                throw Error("conversation '" + id + "' seq " +
                            std::to_string(t.seq) +
                            ": tool trace must record exactly one invocation");
            }
        } else if (t.user_conversation.empty()) {
            throw Error("conversation '" + id + "' seq " +
                        std::to_string(t.seq) +
                        ": LLM trace has an empty conversation snapshot");
        }
    }
}

std::optional<std::string> Case::resolved_expected_tool() const {
    if (expected_tool.has_value()) {
        return expected_tool;
    }
    const std::string prefix = kToolUseCasePrefix;
    if (name.rfind(prefix, 0) == 0 && name.size() > prefix.size()) {
        return name.substr(prefix.size());
    }
    return std::nullopt;
}

}  // namespace agenteval
