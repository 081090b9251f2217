// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "agenteval/core/types.hpp"
#include "agenteval/metrics/metric.hpp"

namespace agenteval {

// Per-model USD prices per 1000 input/output tokens.
struct ModelPricing {
    double input_per_1k = 0.0;
    double output_per_1k = 0.0;
};

struct PricingTable {
    std::map<std::string, ModelPricing> models;
};

// Parses the JSON pricing file: {"model-id": {"input_per_1k": n,
// "output_per_1k": n}, ...}. Prices must be >= 0.
PricingTable load_pricing_table(const std::string& path);

// "Latency": sum of latency_ms over all traces, with a per-step
// breakdown under additional_info keys "seq:<n>".
class LatencyMetric : public Metric {
public:
    std::string name() const override { return "Latency"; }
    std::vector<Measurement> evaluate_conversation(
        const std::vector<Trace>& conversation) const override;
};

// "InputTokens" / "OutputTokens": token sums across LLM traces.
class TokensMetric : public Metric {
public:
    std::string name() const override { return "Tokens"; }
    std::vector<Measurement> evaluate_conversation(
        const std::vector<Trace>& conversation) const override;
};

// "Cost": USD across LLM traces per the pricing table. A model missing
// from the table yields a "Cost.error" measurement naming it.
class CostMetric : public Metric {
public:
    explicit CostMetric(PricingTable pricing) : pricing_(std::move(pricing)) {}
    std::string name() const override { return "Cost"; }
    std::vector<Measurement> evaluate_conversation(
        const std::vector<Trace>& conversation) const override;

private:
    PricingTable pricing_;
};

// "Hops": number of LLM traces in the conversation.
class HopsMetric : public Metric {
public:
    std::string name() const override { return "Hops"; }
    std::vector<Measurement> evaluate_conversation(
        const std::vector<Trace>& conversation) const override;
};

// "AgentDoesntInvokeAnyTool": 1 if the final trace's tool_invocations is
// empty, else 0.
class NoToolMetric : public Metric {
public:
    std::string name() const override { return "AgentDoesntInvokeAnyTool"; }
    std::vector<Measurement> evaluate_conversation(
        const std::vector<Trace>& conversation) const override;
};

// "AgentInvokesCorrectTool": 1 iff at least one invocation on the final
// trace matches the case's expected tool and no other tool was invoked.
// The expected tool comes from the configured case set when available,
// otherwise from the "Tool use: " case-name prefix.
class CorrectToolMetric : public Metric {
public:
    CorrectToolMetric() = default;
    explicit CorrectToolMetric(std::map<std::string, Case> cases)
        : cases_(std::move(cases)) {}

    std::string name() const override { return "AgentInvokesCorrectTool"; }
    std::vector<Measurement> evaluate_conversation(
        const std::vector<Trace>& conversation) const override;

private:
    std::map<std::string, Case> cases_;
};

// The stock unable-to-help indicator phrases.
const std::vector<std::string>& default_unable_to_help_indicators();

// "AgentIsUnableToHelpUser": counts case-insensitive, overlapping indicator
// occurrences across the assistant messages of the final LLM trace's
// conversation snapshot. Curly apostrophes (U+2019) are normalized to "'"
// before scanning. No measurement when the last trace is not an LLM trace.
class UnableToHelpMetric : public Metric {
public:
    UnableToHelpMetric() : indicators_(default_unable_to_help_indicators()) {}
    explicit UnableToHelpMetric(std::vector<std::string> indicators)
        : indicators_(std::move(indicators)) {}

    std::string name() const override { return "AgentIsUnableToHelpUser"; }
    std::vector<Measurement> evaluate_conversation(
        const std::vector<Trace>& conversation) const override;

private:
    std::vector<std::string> indicators_;
};

// Configurable whitelist check: 1 iff any allowed term occurs
// case-insensitively as a substring of any assistant message of the final
// LLM trace's conversation snapshot. No measurement when the last trace is
// not an LLM trace.
class KeywordPresenceMetric : public Metric {
public:
    KeywordPresenceMetric(std::string metric_name,
                          std::vector<std::string> allowed_terms);

    std::string name() const override { return name_; }
    std::vector<Measurement> evaluate_conversation(
        const std::vector<Trace>& conversation) const override;

private:
    std::string name_;
    std::vector<std::string> terms_;
};

// Shared helpers for trace-scanning metrics.

// The last trace when it is an LLM trace, else null.
const Trace* final_llm_trace(const std::vector<Trace>& conversation);

// The latest LLM trace anywhere in the conversation, else null.
const Trace* last_llm_trace(const std::vector<Trace>& conversation);

// Texts of assistant messages in a conversation snapshot, in order.
std::vector<std::string> assistant_texts(const std::vector<Message>& messages);

std::string ascii_lower(const std::string& s);

// Replaces UTF-8 U+2019 with the ASCII apostrophe.
std::string normalize_apostrophes(const std::string& s);

}  // namespace agenteval
