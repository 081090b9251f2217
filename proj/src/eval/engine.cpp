// SPDX-License-Identifier: Apache-2.0
#include "agenteval/eval/engine.hpp"

#include <atomic>
#include <cmath>
#include <set>
#include <thread>

#include "agenteval/errors.hpp"

namespace agenteval {

namespace {

struct Job {
    const Permutation* permutation;
    const Case* case_def;
    std::int64_t run_index;
    std::string conversation_id;
};

}  // namespace

TraceSet generate_traces(const std::vector<Case>& cases,
                         const AgentFactory& agent_factory,
                         std::int64_t nr_runs_per_case,
                         const ParameterGrid& agent_parameters,
                         std::size_t max_parallel, TraceSink* sink) {
    if (cases.empty()) {
        throw Error("generate_traces requires at least one case");
    }
    if (nr_runs_per_case < 1) {
        throw Error("nr_runs_per_case must be >= 1");
    }
    if (max_parallel < 1) {
        throw Error("max_parallel must be >= 1");
    }
    std::set<std::string> names;
    for (const Case& c : cases) {
        if (c.name.empty()) {
            throw Error("case with empty name");
        }
        if (c.turns.empty()) {
            throw Error("case '" + c.name + "' has no turns");
        }
        if (!names.insert(c.name).second) {
            throw Error("duplicate case name '" + c.name + "'");
        }
    }

    const std::vector<Permutation> permutations = expand_grid(agent_parameters);

    std::vector<Job> jobs;
    jobs.reserve(permutations.size() * cases.size() *
                 static_cast<std::size_t>(nr_runs_per_case));
    for (const Permutation& perm : permutations) {
        for (const Case& c : cases) {
            for (std::int64_t run = 0; run < nr_runs_per_case; ++run) {
                jobs.push_back(Job{&perm, &c, run, next_conversation_id()});
            }
        }
    }

    std::vector<RunResult> results(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= jobs.size()) {
                return;
            }
            const Job& job = jobs[i];
            results[i] = run_conversation(agent_factory, job.permutation->params,
                                          *job.case_def, job.conversation_id,
                                          job.permutation->id, job.run_index,
                                          sink);
        }
    };

    std::size_t n_threads = std::min(max_parallel, jobs.size());
    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        threads.reserve(n_threads);
        for (std::size_t i = 0; i < n_threads; ++i) {
            threads.emplace_back(worker);
        }
        for (std::thread& t : threads) {
            t.join();
        }
    }

    TraceSet set;
    std::size_t failures = 0;
    for (RunResult& result : results) {
        if (result.failed()) {
            ++failures;
        }
        if (!result.traces.empty()) {
            set.add_conversation(std::move(result.traces));
        }
    }
    if (failures == results.size()) {
        throw AllConversationsFailed(
            "all " + std::to_string(failures) +
            " conversations failed; first error: " + results[0].error);
    }
    return set;
}

MeasurementSet eval(const TraceSet& traces,
                    const std::vector<const Metric*>& metrics) {
    MeasurementSet out;
    for (const std::string& id : traces.conversation_ids()) {
        const std::vector<Trace>& conversation = traces.conversation(id);
        const Trace& head = conversation.front();
        for (const Metric* metric : metrics) {
            std::vector<Measurement> produced;
            std::string error;
            try {
                produced = metric->evaluate_conversation(conversation);
            } catch (const std::exception& e) {
                error = e.what();
            }
            if (error.empty()) {
                for (Measurement& m : produced) {
                    if (!std::isfinite(m.value)) {
                        error = "metric '" + metric->name() +
                                "' produced a non-finite value for '" + m.name +
                                "'";
                        break;
                    }
                }
            }
            if (!error.empty()) {
                Measurement err;
                err.name = metric->name() + ".error";
                err.value = 0.0;
                err.unit = Unit::Dimensionless;
                err.additional_info["error"] = error;
                produced = {std::move(err)};
            }
            for (Measurement& m : produced) {
                m.conversation_id = head.conversation_id;
                m.case_name = head.case_name;
                m.permutation_id = head.permutation_id;
                m.run_index = head.run_index;
                out.add(std::move(m));
            }
        }
    }
    return out;
}

MeasurementSet eval(const TraceSet& traces,
                    const std::vector<std::unique_ptr<Metric>>& metrics) {
    std::vector<const Metric*> view;
    view.reserve(metrics.size());
    for (const auto& m : metrics) {
        view.push_back(m.get());
    }
    return eval(traces, view);
}

}  // namespace agenteval
