// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "agenteval/core/grid.hpp"
#include "agenteval/core/types.hpp"
#include "agenteval/persist/sink.hpp"
#include "agenteval/runtime/agent.hpp"

namespace agenteval {

// Builds a fresh agent for one conversation from the permutation's full
// parameter map. The factory owns interpreting the params; make_agent_factory
// covers the common case of a base config plus the standard keys.
using AgentFactory = std::function<std::unique_ptr<Agent>(const ParamMap& params,
                                                          TraceRecorder& recorder)>;

// Factory over a base config. Recognized param keys: system_prompt,
// model_id, temperature, max_hops. An unknown key throws at agent
// construction time.
AgentFactory make_agent_factory(AgentConfig base, ModelProvider& provider,
                                ToolRegistry tools);

// Stamps identity fields, seq, and timestamps onto step traces and buffers
// them for one conversation. Traces reach the sink on flush_to, after any
// error marking.
class ConversationRecorder : public TraceRecorder {
public:
    ConversationRecorder(std::string conversation_id, std::string case_name,
                         std::string permutation_id, std::int64_t run_index);

    void record(Trace step) override;

    // Sets extras["error"] on the last trace unless one is already present.
    // No-op on an empty recorder.
    void mark_error(const std::string& message);

    void flush_to(TraceSink& sink);

    const std::vector<Trace>& traces() const { return traces_; }
    std::vector<Trace> take() { return std::move(traces_); }

private:
    std::string conversation_id_;
    std::string case_name_;
    std::string permutation_id_;
    std::int64_t run_index_;
    std::vector<Trace> traces_;
};

struct RunResult {
    std::vector<Trace> traces;
    std::string error;  // empty on success

    bool failed() const { return !error.empty(); }
};

// Runs one case as one conversation: instantiates a fresh agent, feeds each
// turn in order, emits traces to the sink (may be null). Agent errors do not
// propagate as exceptions; they are recorded in extras["error"] of the last
// trace and in RunResult::error, with all traces up to the failure preserved.
RunResult run_conversation(const AgentFactory& factory, const ParamMap& params,
                           const Case& case_def,
                           const std::string& conversation_id,
                           const std::string& permutation_id,
                           std::int64_t run_index, TraceSink* sink);

// Process-unique conversation id: zero-padded counter plus random suffix.
// Ids created later in a process sort after earlier ones.
std::string next_conversation_id();

}  // namespace agenteval
