// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <mutex>

#include "agenteval/core/types.hpp"

namespace agenteval {

// Destination for traces. append must be callable from any number of
// concurrent conversations and must never reorder the traces of one
// conversation. Appended traces are durable after flush.
class TraceSink {
public:
    virtual ~TraceSink() = default;
    virtual void append(const Trace& trace) = 0;
    virtual void flush() {}
};

// Collects traces in memory. Handy for tests and for eval runs that build
// a TraceSet directly.
class MemorySink : public TraceSink {
public:
    void append(const Trace& trace) override {
        std::lock_guard<std::mutex> lock(mutex_);
        traces_.push_back(trace);
    }

    // Not for use while appends are in flight.
    const std::vector<Trace>& traces() const { return traces_; }

private:
    std::mutex mutex_;
    std::vector<Trace> traces_;
};

}  // namespace agenteval
