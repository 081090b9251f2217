// SPDX-License-Identifier: Apache-2.0
#include "agenteval/runtime/run.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <random>

namespace agenteval {

namespace {

std::int64_t now_epoch_ms() {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::system_clock::now().time_since_epoch())
        .count();
}

AgentConfig apply_params(AgentConfig base, const ParamMap& params) {
    for (const auto& [key, value] : params) {
        if (key == "system_prompt") {
            base.system_prompt = value;
        } else if (key == "model_id") {
            base.model_id = value;
        } else if (key == "temperature") {
            try {
                base.temperature = std::stod(value);
            } catch (const std::exception&) {
                throw Error("temperature value '" + value + "' is not a number");
            }
        } else if (key == "max_hops") {
            try {
                base.max_hops = std::stoll(value);
            } catch (const std::exception&) {
                throw Error("max_hops value '" + value + "' is not an integer");
            }
        } else {
            throw Error("unknown agent parameter '" + key + "'");
        }
    }
    return base;
}

}  // namespace

AgentFactory make_agent_factory(AgentConfig base, ModelProvider& provider,
                                ToolRegistry tools) {
    return [base, &provider, tools](const ParamMap& params,
                                    TraceRecorder& recorder) {
        return std::make_unique<Agent>(apply_params(base, params), provider,
                                       tools, &recorder);
    };
}

ConversationRecorder::ConversationRecorder(std::string conversation_id,
                                           std::string case_name,
                                           std::string permutation_id,
                                           std::int64_t run_index)
    : conversation_id_(std::move(conversation_id)),
      case_name_(std::move(case_name)),
      permutation_id_(std::move(permutation_id)),
      run_index_(run_index) {}

void ConversationRecorder::record(Trace step) {
    step.conversation_id = conversation_id_;
    step.case_name = case_name_;
    step.permutation_id = permutation_id_;
    step.run_index = run_index_;
    step.seq = static_cast<std::int64_t>(traces_.size());
    step.timestamp_ms = now_epoch_ms();
    traces_.push_back(std::move(step));
}

void ConversationRecorder::mark_error(const std::string& message) {
    if (traces_.empty()) {
        return;
    }
    auto& extras = traces_.back().extras;
    extras.emplace("error", message);
}

void ConversationRecorder::flush_to(TraceSink& sink) {
    for (const Trace& t : traces_) {
        sink.append(t);
    }
    sink.flush();
}

RunResult run_conversation(const AgentFactory& factory, const ParamMap& params,
                           const Case& case_def,
                           const std::string& conversation_id,
                           const std::string& permutation_id,
                           std::int64_t run_index, TraceSink* sink) {
    ConversationRecorder recorder(conversation_id, case_def.name,
                                  permutation_id, run_index);
    RunResult result;
    try {
        auto agent = factory(params, recorder);
        for (const Turn& turn : case_def.turns) {
            agent->converse(turn.user_input);
        }
    } catch (const std::exception& e) {
        result.error = e.what();
        recorder.mark_error(result.error);
    }
    if (sink != nullptr) {
        recorder.flush_to(*sink);
    }
    result.traces = recorder.take();
    return result;
}

std::string next_conversation_id() {
    static std::atomic<std::uint64_t> counter{0};
    static const std::uint64_t run_tag = [] {
        std::random_device rd;
        return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
    }();
    std::uint64_t n = counter.fetch_add(1, std::memory_order_relaxed);
    char buf[64];
    std::snprintf(buf, sizeof(buf), "conv-%08llu-%08llx",
                  static_cast<unsigned long long>(n),
                  static_cast<unsigned long long>((run_tag ^ (n * 0x9e3779b97f4a7c15ULL)) & 0xffffffffULL));
    return buf;
}

}  // namespace agenteval
