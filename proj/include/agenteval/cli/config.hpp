// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "agenteval/core/grid.hpp"
#include "agenteval/eval/assertions.hpp"
#include "agenteval/persist/monitor.hpp"
#include "agenteval/runtime/agent.hpp"
#include "agenteval/runtime/run.hpp"

namespace agenteval {

// An agent loaded from its JSON config file: base config, provider, and
// canned tool implementations (each tool returns its configured "result"
// string, default "ok").
struct AgentSetup {
    AgentConfig config;
    std::shared_ptr<ModelProvider> provider;
    ToolRegistry tools;

    AgentFactory factory() const;
};

// Agent config file:
//   {provider:{kind:"scripted"|"http", ...}, system_prompt, model_id,
//    temperature, max_hops?, tools?:[{name, description, parameters?,
//    result?}], scripted_rules?:[...]}
// scripted_rules is an alternative spot for the scripted provider's rules.
AgentSetup load_agent_config(const std::string& path);

// Params file: {fixed:{name:value}, permuted:{name:[values]}}. Scalar JSON
// values are stringified (numbers canonically, booleans as true/false).
ParameterGrid load_params(const std::string& path);

// Assert rules file: JSON array of
//   {metric, scope:"overall"|"per_permutation", comparator:">="|"<=",
//    threshold}
std::vector<AssertionRule> load_assertion_rules(const std::string& path);

// Monitor config file:
//   {metrics:"spec,string", rules:[{metric, aggregation, comparator,
//    threshold, window}], completion_timeout_ms?:30000}
struct MonitorConfig {
    std::string metrics_spec;
    std::vector<AlarmRule> alarm_rules;
    std::int64_t completion_timeout_ms = 30000;
};

MonitorConfig load_monitor_config(const std::string& path);

}  // namespace agenteval
