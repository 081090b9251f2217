// SPDX-License-Identifier: Apache-2.0
#include "agenteval/metrics/judge.hpp"

#include <cctype>

#include "agenteval/metrics/builtin.hpp"

namespace agenteval {

std::string JudgeClient::ask(const std::string& prompt) const {
    std::vector<Message> messages{Message{Role::User, prompt}};
    ModelReply reply =
        provider_->converse("", messages, model_id_, 0.0, {});
    return reply.text;
}

std::optional<int> parse_judge_score(const std::string& reply) {
    std::size_t i = 0;
    while (i < reply.size()) {
        if (std::isdigit(static_cast<unsigned char>(reply[i]))) {
            std::size_t start = i;
            while (i < reply.size() &&
                   std::isdigit(static_cast<unsigned char>(reply[i]))) {
                ++i;
            }
            // Digit runs longer than 2 cannot be in 1..10.
            if (i - start <= 2) {
                int value = std::stoi(reply.substr(start, i - start));
                if (value >= 1 && value <= 10) {
                    return value;
                }
            }
        } else {
            ++i;
        }
    }
    return std::nullopt;
}

std::string render_conciseness_prompt(const std::string& final_response) {
    return "You are grading an assistant's reply for conciseness.\n"
           "Score the following response on a scale from 1 to 10, where 10 "
           "means maximally concise while still answering, and 1 means "
           "needlessly long.\nReply with the number only.\n\nResponse:\n" +
           final_response + "\n";
}

std::string render_expectation_prompt(const std::string& transcript,
                                      const std::string& expectations) {
    return "You are judging whether a conversation fulfills the user's "
           "expectations.\nScore from 1 to 10, where 10 means the "
           "expectations are fully met.\nReply with the number only.\n\n"
           "Expectations:\n" +
           expectations + "\n\nConversation:\n" + transcript;
}

std::string render_transcript(const std::vector<Message>& messages) {
    std::string out;
    for (const Message& m : messages) {
        out += to_string(m.role);
        out += ": ";
        out += m.text;
        out += '\n';
    }
    return out;
}

namespace {

Measurement judge_error(const std::string& metric_name,
                        const std::string& error,
                        const std::string& raw_reply = {}) {
    Measurement err;
    err.name = metric_name + ".error";
    err.value = 0.0;
    err.unit = Unit::Dimensionless;
    err.additional_info["error"] = error;
    if (!raw_reply.empty()) {
        err.additional_info["raw_reply"] = raw_reply;
    }
    return err;
}

}  // namespace

std::vector<Measurement> JudgeConcisenessMetric::evaluate_conversation(
    const std::vector<Trace>& conversation) const {
    const Trace* llm = last_llm_trace(conversation);
    const std::string* final_response = nullptr;
    if (llm != nullptr) {
        for (auto it = llm->user_conversation.rbegin();
             it != llm->user_conversation.rend(); ++it) {
            if (it->role == Role::Assistant) {
                final_response = &it->text;
                break;
            }
        }
    }
    if (final_response == nullptr) {
        return {judge_error(name(), "no final assistant response")};
    }

    const std::string reply =
        judge_.ask(render_conciseness_prompt(*final_response));
    const std::optional<int> score = parse_judge_score(reply);
    if (!score.has_value()) {
        return {judge_error(name(), "no score in 1..10 in judge reply", reply)};
    }

    Measurement m;
    m.name = name();
    m.unit = Unit::Score;
    m.value = static_cast<double>(*score);
    m.additional_info["judge_template"] = kConcisenessTemplateId;
    return {m};
}

std::vector<Measurement> JudgeExpectationMetric::evaluate_conversation(
    const std::vector<Trace>& conversation) const {
    auto case_it = cases_.find(conversation.front().case_name);
    if (case_it == cases_.end() ||
        !case_it->second.overall_expectations.has_value()) {
        return {};
    }
    const Trace* llm = last_llm_trace(conversation);
    if (llm == nullptr) {
        return {judge_error(name(), "conversation has no LLM trace")};
    }

    const std::string prompt = render_expectation_prompt(
        render_transcript(llm->user_conversation),
        *case_it->second.overall_expectations);
    const std::string reply = judge_.ask(prompt);
    const std::optional<int> score = parse_judge_score(reply);
    if (!score.has_value()) {
        return {judge_error(name(), "no score in 1..10 in judge reply", reply)};
    }

    Measurement m;
    m.name = name();
    m.unit = Unit::Score;
    m.value = static_cast<double>(*score);
    m.additional_info["judge_template"] = kExpectationTemplateId;
    return {m};
}

}  // namespace agenteval
