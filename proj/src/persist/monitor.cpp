// SPDX-License-Identifier: Apache-2.0
#include "agenteval/persist/monitor.hpp"

#include <chrono>
#include <cstdio>

#include <nlohmann/json.hpp>

#include "agenteval/errors.hpp"

namespace agenteval {

const char* to_string(Aggregation agg) {
    switch (agg) {
        case Aggregation::Sum: return "sum";
        case Aggregation::Mean: return "mean";
        case Aggregation::CountNonzero: return "count_nonzero";
    }
    return "sum";
}

Aggregation aggregation_from_string(const std::string& s) {
    if (s == "sum") return Aggregation::Sum;
    if (s == "mean") return Aggregation::Mean;
    if (s == "count_nonzero") return Aggregation::CountNonzero;
    throw Error("unknown aggregation: '" + s + "'");
}

std::string AlarmRule::describe() const {
    return metric + " " + to_string(aggregation) + " " +
           (comparator == AlarmComparator::GreaterOrEqual ? ">=" : "<=") + " " +
           std::to_string(threshold) + " over " + std::to_string(window);
}

std::string alarm_event_to_json(const AlarmEvent& event) {
    nlohmann::ordered_json obj;
    obj["rule"] = event.rule;
    obj["metric"] = event.metric;
    obj["aggregation"] = to_string(event.aggregation);
    obj["value"] = event.value;
    obj["threshold"] = event.threshold;
    obj["window"] = event.window;
    obj["fired_at_ms"] = event.fired_at_ms;
    return obj.dump();
}

namespace {

double aggregate(const std::deque<double>& values, Aggregation agg) {
    double sum = 0.0;
    double nonzero = 0.0;
    for (double v : values) {
        sum += v;
        if (v != 0.0) {
            nonzero += 1.0;
        }
    }
    switch (agg) {
        case Aggregation::Sum: return sum;
        case Aggregation::Mean:
            return values.empty() ? 0.0
                                  : sum / static_cast<double>(values.size());
        case Aggregation::CountNonzero: return nonzero;
    }
    return sum;
}

std::int64_t now_epoch_ms() {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::system_clock::now().time_since_epoch())
        .count();
}

}  // namespace

Monitor::Monitor(std::vector<std::unique_ptr<Metric>> metrics,
                 std::vector<AlarmRule> rules)
    : metrics_(std::move(metrics)) {
    for (AlarmRule& rule : rules) {
        if (rule.window < 1) {
            throw Error("alarm rule window must be >= 1 (" + rule.describe() +
                        ")");
        }
        states_.push_back(RuleState{std::move(rule), {}, false});
    }
    warn_ = [](const std::string& message) {
        std::fprintf(stderr, "[monitor] %s\n", message.c_str());
    };
}

void Monitor::add_handler(std::function<void(const AlarmEvent&)> handler) {
    std::lock_guard<std::mutex> lock(mutex_);
    handlers_.push_back(std::move(handler));
}

std::vector<AlarmEvent> Monitor::evaluate_locked() {
    std::vector<AlarmEvent> fired;
    for (RuleState& state : states_) {
        if (state.values.size() < state.rule.window) {
            continue;
        }
        const double value = aggregate(state.values, state.rule.aggregation);
        const bool satisfied =
            state.rule.comparator == AlarmComparator::GreaterOrEqual
                ? value >= state.rule.threshold
                : value <= state.rule.threshold;
        if (satisfied && !state.active) {
            state.active = true;
            AlarmEvent event;
            event.rule = state.rule.describe();
            event.metric = state.rule.metric;
            event.aggregation = state.rule.aggregation;
            event.value = value;
            event.threshold = state.rule.threshold;
            event.window = state.rule.window;
            event.fired_at_ms = now_epoch_ms();
            fired.push_back(std::move(event));
        } else if (!satisfied) {
            state.active = false;
        }
    }
    for (const AlarmEvent& event : fired) {
        for (const auto& handler : handlers_) {
            handler(event);
        }
    }
    return fired;
}

std::vector<AlarmEvent> Monitor::on_conversation_complete(
    const std::vector<Trace>& conversation) {
    std::lock_guard<std::mutex> lock(mutex_);

    std::vector<Measurement> produced;
    for (const auto& metric : metrics_) {
        try {
            std::vector<Measurement> out =
                metric->evaluate_conversation(conversation);
            produced.insert(produced.end(),
                            std::make_move_iterator(out.begin()),
                            std::make_move_iterator(out.end()));
        } catch (const std::exception& e) {
            ++metric_failures_;
            warn_("metric '" + metric->name() + "' failed: " + e.what());
        }
    }

    for (RuleState& state : states_) {
        for (const Measurement& m : produced) {
            if (m.name != state.rule.metric) {
                continue;
            }
            state.values.push_back(m.value);
            while (state.values.size() > state.rule.window) {
                state.values.pop_front();
            }
        }
    }

    return evaluate_locked();
}

std::vector<AlarmEvent> Monitor::check_alarms() {
    std::lock_guard<std::mutex> lock(mutex_);
    return evaluate_locked();
}

}  // namespace agenteval
