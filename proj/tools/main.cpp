// SPDX-License-Identifier: Apache-2.0
#include <CLI11.hpp>

#include "agenteval/cli/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"agenteval - evaluation, CI gating, and monitoring for "
                 "tool-calling LLM agents"};
    app.require_subcommand(1);

    agenteval::RunArgs run_args;
    CLI::App* run = app.add_subcommand(
        "run", "Run cases against every parameter permutation, write traces");
    run->add_option("--cases", run_args.cases_file, "Cases JSON file")
        ->required();
    run->add_option("--agent-config", run_args.agent_config_file,
                    "Agent config JSON file")
        ->required();
    run->add_option("--params", run_args.params_file,
                    "Parameter grid JSON file")
        ->required();
    run->add_option("--runs", run_args.runs, "Runs per case (default 1)");
    run->add_option("--max-parallel", run_args.max_parallel,
                    "Max conversations in flight (default 4)");
    run->add_option("--out", run_args.out_file, "Output traces JSONL file")
        ->required();

    agenteval::EvalArgs eval_args;
    CLI::App* eval = app.add_subcommand(
        "eval", "Apply metrics to traces, write measurements");
    eval->add_option("--traces", eval_args.traces_file, "Traces JSONL file")
        ->required();
    eval->add_option("--metrics", eval_args.metrics_spec,
                     "Comma-separated metric spec, e.g. "
                     "\"latency,hops,cost:pricing.json\"")
        ->required();
    eval->add_option("--out", eval_args.out_file,
                     "Output measurements JSONL file")
        ->required();

    agenteval::SummaryArgs summary_args;
    CLI::App* summary = app.add_subcommand(
        "summary", "Print per-permutation metric averages");
    summary->add_option("--measurements", summary_args.measurements_file,
                        "Measurements JSONL file")
        ->required();
    summary->add_option("--format", summary_args.format,
                        "table (default), csv, or json");

    agenteval::AssertArgs assert_args;
    CLI::App* assert_cmd = app.add_subcommand(
        "assert", "Check measurements against threshold rules (CI gate)");
    assert_cmd
        ->add_option("--measurements", assert_args.measurements_file,
                     "Measurements JSONL file")
        ->required();
    assert_cmd->add_option("--rules", assert_args.rules_file,
                           "Assertion rules JSON file")
        ->required();

    agenteval::ReportArgs report_args;
    CLI::App* report = app.add_subcommand(
        "report", "Write a self-contained HTML report");
    report->add_option("--traces", report_args.traces_file,
                       "Traces JSONL file")
        ->required();
    report->add_option("--measurements", report_args.measurements_file,
                       "Measurements JSONL file")
        ->required();
    report->add_option("--out", report_args.out_file, "Output HTML file")
        ->required();
    report->add_option("--badge-rules", report_args.badge_rules_file,
                       "JSON array of metric names that define pass/fail");

    agenteval::MonitorArgs monitor_args;
    CLI::App* monitor = app.add_subcommand(
        "monitor", "Receive trace POSTs and fire alarm rules");
    monitor->add_option("--listen", monitor_args.listen,
                        "host:port (default 127.0.0.1:8077)");
    monitor->add_option("--rules", monitor_args.rules_file,
                        "Monitor config JSON file")
        ->required();
    monitor->add_option("--webhook", monitor_args.webhook_url,
                        "Alarm webhook URL");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        // CLI11 reserves its own exit codes; map usage problems to 2.
        return code == 0 ? 0 : agenteval::kExitUsage;
    }

    if (run->parsed()) {
        return agenteval::cmd_run(run_args);
    }
    if (eval->parsed()) {
        return agenteval::cmd_eval(eval_args);
    }
    if (summary->parsed()) {
        return agenteval::cmd_summary(summary_args);
    }
    if (assert_cmd->parsed()) {
        return agenteval::cmd_assert(assert_args);
    }
    if (report->parsed()) {
        return agenteval::cmd_report(report_args);
    }
    if (monitor->parsed()) {
        return agenteval::cmd_monitor(monitor_args);
    }
    return agenteval::kExitUsage;
}
