// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "agenteval/core/types.hpp"
#include "agenteval/metrics/metric.hpp"

namespace agenteval {

enum class Aggregation { Sum, Mean, CountNonzero };

const char* to_string(Aggregation agg);
Aggregation aggregation_from_string(const std::string& s);

enum class AlarmComparator { GreaterOrEqual, LessOrEqual };

// Sliding-window rule over the last `window` completed conversations'
// values of one metric.
struct AlarmRule {
    std::string metric;
    Aggregation aggregation = Aggregation::Sum;
    AlarmComparator comparator = AlarmComparator::GreaterOrEqual;
    double threshold = 0.0;
    std::size_t window = 1;

    std::string describe() const;
};

struct AlarmEvent {
    std::string rule;
    std::string metric;
    Aggregation aggregation = Aggregation::Sum;
    double value = 0.0;
    double threshold = 0.0;
    std::size_t window = 1;
    std::int64_t fired_at_ms = 0;
};

std::string alarm_event_to_json(const AlarmEvent& event);

// Evaluates runtime metrics on completed conversations and fires
// edge-triggered alarms over full sliding windows: an alarm fires when its
// window is full and the aggregation satisfies the comparator, and can fire
// again only after the condition has been observed false. State transitions
// are serialized internally; ring buffers never exceed the rule's window.
class Monitor {
public:
    Monitor(std::vector<std::unique_ptr<Metric>> metrics,
            std::vector<AlarmRule> rules);

    // Invoked on every alarm, before the event is returned to the caller.
    void add_handler(std::function<void(const AlarmEvent&)> handler);

    // Evaluates metrics on the conversation, appends values to each rule's
    // buffer, and returns any alarms that fired as a result. Metric failures
    // are counted and reported to the warn handler; they never affect alarms.
    std::vector<AlarmEvent> on_conversation_complete(
        const std::vector<Trace>& conversation);

    // Re-evaluates all rules against current buffers (timer-driven use).
    std::vector<AlarmEvent> check_alarms();

    void set_warn_handler(std::function<void(const std::string&)> warn) {
        warn_ = std::move(warn);
    }

    std::size_t metric_failure_count() const { return metric_failures_; }

private:
    struct RuleState {
        AlarmRule rule;
        std::deque<double> values;
        bool active = false;
    };

    std::vector<AlarmEvent> evaluate_locked();

    std::mutex mutex_;
    std::vector<std::unique_ptr<Metric>> metrics_;
    std::vector<RuleState> states_;
    std::vector<std::function<void(const AlarmEvent&)>> handlers_;
    std::function<void(const std::string&)> warn_;
    std::size_t metric_failures_ = 0;
};

}  // namespace agenteval
