// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>

#include "agenteval/core/types.hpp"
#include "agenteval/metrics/metric.hpp"
#include "agenteval/runtime/provider.hpp"

namespace agenteval {

// A judge model behind any ModelProvider, always called at temperature 0.
class JudgeClient {
public:
    JudgeClient(std::shared_ptr<ModelProvider> provider, std::string model_id)
        : provider_(std::move(provider)), model_id_(std::move(model_id)) {}

    // Sends the rendered prompt as a single user message, returns the raw
    // reply text. Throws ProviderError.
    std::string ask(const std::string& prompt) const;

private:
    std::shared_ptr<ModelProvider> provider_;
    std::string model_id_;
};

// First integer in 1..10 found in the reply (digit-run scan), or nullopt.
std::optional<int> parse_judge_score(const std::string& reply);

// Shipped prompt templates, versioned so measurements stay comparable.
inline constexpr const char* kConcisenessTemplateId = "conciseness-v1";
inline constexpr const char* kExpectationTemplateId = "expectation-v1";

std::string render_conciseness_prompt(const std::string& final_response);
std::string render_expectation_prompt(const std::string& transcript,
                                      const std::string& expectations);

// Role-tagged rendering of a conversation snapshot, one message per line.
std::string render_transcript(const std::vector<Message>& messages);

// "AgentResponseConciseness": a 1..10 judge score of the final assistant
// response. Unparseable judge replies yield an error measurement carrying
// the raw reply.
class JudgeConcisenessMetric : public Metric {
public:
    explicit JudgeConcisenessMetric(JudgeClient judge)
        : judge_(std::move(judge)) {}

    std::string name() const override { return "AgentResponseConciseness"; }
    std::vector<Measurement> evaluate_conversation(
        const std::vector<Trace>& conversation) const override;

private:
    JudgeClient judge_;
};

// "ConversationExpectation": a 1..10 judge score of the full transcript
// against the case's overall_expectations. No measurement when the case has
// no expectations.
class JudgeExpectationMetric : public Metric {
public:
    JudgeExpectationMetric(std::map<std::string, Case> cases, JudgeClient judge)
        : cases_(std::move(cases)), judge_(std::move(judge)) {}

    std::string name() const override { return "ConversationExpectation"; }
    std::vector<Measurement> evaluate_conversation(
        const std::vector<Trace>& conversation) const override;

private:
    std::map<std::string, Case> cases_;
    JudgeClient judge_;
};

}  // namespace agenteval
