// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "agenteval/core/grid.hpp"
#include "agenteval/core/types.hpp"
#include "agenteval/errors.hpp"
#include "agenteval/eval/measurements.hpp"
#include "agenteval/eval/trace_set.hpp"
#include "agenteval/metrics/metric.hpp"
#include "agenteval/persist/sink.hpp"
#include "agenteval/runtime/run.hpp"

namespace agenteval {

// Raised by generate_traces only when not a single conversation succeeded.
struct AllConversationsFailed : Error {
    using Error::Error;
};

// Runs every permutation x case x run as one conversation, at most
// max_parallel in flight. Output order is (permutation index, case index,
// run index) regardless of completion order. Individual conversation
// failures are recorded in extras["error"] and kept; throws only when every
// conversation failed (or inputs are invalid).
TraceSet generate_traces(const std::vector<Case>& cases,
                         const AgentFactory& agent_factory,
                         std::int64_t nr_runs_per_case,
                         const ParameterGrid& agent_parameters,
                         std::size_t max_parallel, TraceSink* sink);

// Applies each metric to each conversation. Metrics are isolated: a metric
// that throws (or returns a non-finite value) yields one "<metric>.error"
// measurement for that conversation and the rest proceed untouched.
MeasurementSet eval(const TraceSet& traces,
                    const std::vector<const Metric*>& metrics);

MeasurementSet eval(const TraceSet& traces,
                    const std::vector<std::unique_ptr<Metric>>& metrics);

}  // namespace agenteval
