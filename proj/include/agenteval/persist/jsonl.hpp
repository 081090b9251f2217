// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <fstream>
#include <mutex>
#include <string>

#include "agenteval/eval/measurements.hpp"
#include "agenteval/eval/trace_set.hpp"
#include "agenteval/persist/sink.hpp"

namespace agenteval {

// Appends one JSON object per line per trace. Safe for concurrent
// conversations: each line is written under one lock.
class JsonlSink : public TraceSink {
public:
    explicit JsonlSink(const std::string& path);
    ~JsonlSink() override;

    void append(const Trace& trace) override;
    void flush() override;

    const std::string& path() const { return path_; }

private:
    std::string path_;
    std::mutex mutex_;
    std::ofstream out_;
};

// Loads a trace JSONL file into a TraceSet: groups by conversation_id,
// orders by (conversation_id, seq), validates each conversation. Malformed
// lines raise ParseError with the 1-based line number.
TraceSet load_trace_set(const std::string& path);

void save_measurements(const MeasurementSet& measurements,
                       const std::string& path);
MeasurementSet load_measurements(const std::string& path);

}  // namespace agenteval
