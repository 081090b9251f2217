// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>

namespace agenteval {

// Exit codes shared by all commands: 0 success, 1 evaluation failure (all
// conversations failed / a threshold rule failed), 2 usage or config error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct RunArgs {
    std::string cases_file;
    std::string agent_config_file;
    std::string params_file;
    std::string out_file;
    std::int64_t runs = 1;
    std::size_t max_parallel = 4;
};
int cmd_run(const RunArgs& args);

struct EvalArgs {
    std::string traces_file;
    std::string metrics_spec;
    std::string out_file;
};
int cmd_eval(const EvalArgs& args);

struct SummaryArgs {
    std::string measurements_file;
    std::string format = "table";  // table|csv|json
};
int cmd_summary(const SummaryArgs& args);

struct AssertArgs {
    std::string measurements_file;
    std::string rules_file;
};
int cmd_assert(const AssertArgs& args);

struct ReportArgs {
    std::string traces_file;
    std::string measurements_file;
    std::string out_file;
    std::string badge_rules_file;  // optional JSON array of metric names
};
int cmd_report(const ReportArgs& args);

struct MonitorArgs {
    std::string listen = "127.0.0.1:8077";
    std::string rules_file;
    std::string webhook_url;
};
int cmd_monitor(const MonitorArgs& args);

}  // namespace agenteval
