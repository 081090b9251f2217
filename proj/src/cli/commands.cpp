// SPDX-License-Identifier: Apache-2.0
#include "agenteval/cli/commands.hpp"

#include <atomic>
#include <chrono>
#include <csignal>
#include <set>
#include <cstdio>
#include <fstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "agenteval/cases/io.hpp"
#include "agenteval/cli/config.hpp"
#include "agenteval/cli/monitor_server.hpp"
#include "agenteval/errors.hpp"
#include "agenteval/eval/engine.hpp"
#include "agenteval/metrics/registry.hpp"
#include "agenteval/persist/jsonl.hpp"
#include "agenteval/report/html.hpp"
#include "agenteval/report/summary_io.hpp"

namespace agenteval {

namespace {

void diagnose(const char* command, const std::exception& e) {
    std::fprintf(stderr, "agenteval %s: %s\n", command, e.what());
}

std::atomic<bool> g_stop_requested{false};

void handle_stop_signal(int) {
    g_stop_requested = true;
}

}  // namespace

int cmd_run(const RunArgs& args) {
    try {
        const std::vector<Case> cases = load_cases(args.cases_file);
        const AgentSetup setup = load_agent_config(args.agent_config_file);
        const ParameterGrid grid = load_params(args.params_file);

        // The built-in factory only understands these keys; reject the rest
        // up front as a config error rather than failing every conversation.
        static const std::set<std::string> known_keys = {
            "system_prompt", "model_id", "temperature", "max_hops"};
        auto check_key = [&](const std::string& key) {
            if (known_keys.count(key) == 0) {
                throw Error("unknown agent parameter '" + key +
                            "' in params file (known: system_prompt, "
                            "model_id, temperature, max_hops)");
            }
        };
        for (const auto& [key, value] : grid.fixed) {
            (void)value;
            check_key(key);
        }
        for (const auto& [key, values] : grid.permuted) {
            (void)values;
            check_key(key);
        }

        JsonlSink sink(args.out_file);
        try {
            TraceSet traces =
                generate_traces(cases, setup.factory(), args.runs, grid,
                                args.max_parallel, &sink);
            std::fprintf(stderr, "agenteval run: %zu conversations, %zu traces\n",
                         traces.conversation_count(), traces.trace_count());
        } catch (const AllConversationsFailed& e) {
            diagnose("run", e);
            return kExitFailure;
        }
        return kExitOk;
    } catch (const std::exception& e) {
        diagnose("run", e);
        return kExitUsage;
    }
}

int cmd_eval(const EvalArgs& args) {
    try {
        const TraceSet traces = load_trace_set(args.traces_file);
        const std::vector<std::unique_ptr<Metric>> metrics =
            metrics_from_spec(args.metrics_spec);
        const MeasurementSet measurements = eval(traces, metrics);
        save_measurements(measurements, args.out_file);
        std::fprintf(stderr, "agenteval eval: %zu measurements\n",
                     measurements.size());
        return kExitOk;
    } catch (const std::exception& e) {
        diagnose("eval", e);
        return kExitUsage;
    }
}

int cmd_summary(const SummaryArgs& args) {
    try {
        const MeasurementSet measurements =
            load_measurements(args.measurements_file);
        const SummaryTable table = summary(measurements);
        std::string rendered;
        if (args.format == "table") {
            rendered = render_summary_table(table);
        } else if (args.format == "csv") {
            rendered = render_summary_csv(table);
        } else if (args.format == "json") {
            rendered = render_summary_json(table);
        } else {
            throw Error("unknown format '" + args.format +
                        "' (use table, csv, or json)");
        }
        std::fputs(rendered.c_str(), stdout);
        return kExitOk;
    } catch (const std::exception& e) {
        diagnose("summary", e);
        return kExitUsage;
    }
}

int cmd_assert(const AssertArgs& args) {
    Verdict verdict;
    try {
        const MeasurementSet measurements =
            load_measurements(args.measurements_file);
        const std::vector<AssertionRule> rules =
            load_assertion_rules(args.rules_file);
        verdict = assert_thresholds(summary(measurements), rules);
    } catch (const std::exception& e) {
        diagnose("assert", e);
        return kExitUsage;
    }

    for (const RuleReport& report : verdict.reports) {
        std::string line = report.passed ? "PASS " : "FAIL ";
        line += report.rule.metric;
        line += " (";
        line += to_string(report.rule.scope);
        line += " ";
        line += to_string(report.rule.comparator);
        line += " ";
        char threshold[32];
        std::snprintf(threshold, sizeof(threshold), "%g", report.rule.threshold);
        line += threshold;
        line += ")";
        if (report.has_observed) {
            char observed[32];
            std::snprintf(observed, sizeof(observed), "%.9g", report.observed);
            line += " observed ";
            line += observed;
        }
        if (!report.passed && !report.reason.empty()) {
            line += " -- " + report.reason;
        }
        for (const std::string& permutation : report.offending) {
            line += "\n  offending permutation: " +
                    (permutation.empty() ? "(none)" : permutation);
        }
        std::printf("%s\n", line.c_str());
    }
    std::printf("%s\n", verdict.passed ? "verdict: PASS" : "verdict: FAIL");
    return verdict.passed ? kExitOk : kExitFailure;
}

int cmd_report(const ReportArgs& args) {
    try {
        const TraceSet traces = load_trace_set(args.traces_file);
        const MeasurementSet measurements =
            load_measurements(args.measurements_file);

        std::vector<std::string> badge_metrics;
        if (!args.badge_rules_file.empty()) {
            std::ifstream in(args.badge_rules_file);
            if (!in) {
                throw Error("cannot open badge rules file '" +
                            args.badge_rules_file + "'");
            }
            for (const auto& name : nlohmann::json::parse(in)) {
                badge_metrics.push_back(name.get<std::string>());
            }
        }

        const std::string html =
            render_html_report(traces, measurements, badge_metrics);
        std::ofstream out(args.out_file, std::ios::out | std::ios::trunc);
        if (!out) {
            throw Error("cannot write report file '" + args.out_file + "'");
        }
        out << html;
        out.close();
        if (!out) {
            throw Error("failed writing report file '" + args.out_file + "'");
        }
        return kExitOk;
    } catch (const std::exception& e) {
        diagnose("report", e);
        return kExitUsage;
    }
}

int cmd_monitor(const MonitorArgs& args) {
    try {
        const MonitorConfig config = load_monitor_config(args.rules_file);

        std::string host = args.listen;
        int port = 0;
        const std::size_t colon = args.listen.rfind(':');
        if (colon != std::string::npos) {
            host = args.listen.substr(0, colon);
            port = std::stoi(args.listen.substr(colon + 1));
        }

        MonitorServer server(config, args.webhook_url);
        const int bound = server.start(host, port);
        std::fprintf(stderr,
                     "agenteval monitor: listening on %s:%d "
                     "(completion timeout %lld ms)\n",
                     host.c_str(), bound,
                     static_cast<long long>(config.completion_timeout_ms));

        g_stop_requested = false;
        std::signal(SIGINT, handle_stop_signal);
        std::signal(SIGTERM, handle_stop_signal);
        while (!g_stop_requested) {
            std::this_thread::sleep_for(std::chrono::milliseconds(100));
        }
        server.stop();
        return kExitOk;
    } catch (const std::exception& e) {
        diagnose("monitor", e);
        return kExitUsage;
    }
}

}  // namespace agenteval
