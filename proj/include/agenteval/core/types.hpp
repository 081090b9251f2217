// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace agenteval {

enum class Role { User, Assistant, System, Tool };

const char* to_string(Role role);
Role role_from_string(const std::string& s);

// One message of the visible conversation. text may be empty only for
// role=tool (a tool may return nothing).
struct Message {
    Role role = Role::User;
    std::string text;

    bool operator==(const Message&) const = default;
};

// A completed (or, on an LLM trace, requested) tool call.
// arguments is an ordered map; order is preserved through serialization.
struct ToolInvocation {
    std::string tool_name;
    std::vector<std::pair<std::string, std::string>> arguments;
    std::string result_text;
    std::int64_t latency_ms = 0;
    bool success = true;

    bool operator==(const ToolInvocation&) const = default;
};

enum class TraceKind { LLM, Tool };

const char* to_string(TraceKind kind);
TraceKind trace_kind_from_string(const std::string& s);

// One step of an agent conversation: an LLM call or a tool invocation,
// with timing, token accounting, and the visible conversation snapshot
// up to and including this step.
struct Trace {
    std::string conversation_id;
    std::string case_name;
    std::string permutation_id;
    std::int64_t run_index = 0;
    std::int64_t seq = 0;
    TraceKind to = TraceKind::LLM;
    std::int64_t timestamp_ms = 0;
    std::int64_t latency_ms = 0;
    std::int64_t input_tokens = 0;
    std::int64_t output_tokens = 0;
    std::string model_id;
    std::vector<Message> user_conversation;
    std::vector<ToolInvocation> tool_invocations;
    std::map<std::string, std::string> extras;

    bool operator==(const Trace&) const = default;
};

// Validates a single conversation's trace list: gapless seq from 0, one
// conversation_id, per-kind field constraints. Throws Error on violation.
void validate_conversation(const std::vector<Trace>& traces);

// One user input of a case, with the responses considered acceptable
// (may be empty when other metrics judge the turn).
struct Turn {
    std::string user_input;
    std::vector<std::string> acceptable_responses;

    bool operator==(const Turn&) const = default;
};

// A repeatable evaluation scenario.
struct Case {
    std::string name;
    std::vector<Turn> turns;
    std::optional<std::string> overall_expectations;
    std::optional<std::string> expected_tool;
    std::map<std::string, std::string> metadata;

    // expected_tool if set, otherwise the suffix of a "Tool use: " name.
    std::optional<std::string> resolved_expected_tool() const;

    bool operator==(const Case&) const = default;
};

inline constexpr const char* kToolUseCasePrefix = "Tool use: ";

enum class Unit { Count, Milliseconds, Tokens, USD, Score, Dimensionless };

const char* to_string(Unit unit);
Unit unit_from_string(const std::string& s);

// A named, unit-tagged numeric result of applying a metric to one
// conversation. value must be finite.
struct Measurement {
    std::string name;
    double value = 0.0;
    Unit unit = Unit::Dimensionless;
    std::map<std::string, std::string> additional_info;
    std::string conversation_id;
    std::string case_name;
    std::string permutation_id;
    std::int64_t run_index = 0;

    bool operator==(const Measurement&) const = default;
};

}  // namespace agenteval
