// SPDX-License-Identifier: Apache-2.0
#include "agenteval/cli/config.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "agenteval/errors.hpp"
#include "agenteval/runtime/provider_config.hpp"

namespace agenteval {

using nlohmann::json;

namespace {

json load_json_file(const std::string& path, const char* what) {
    std::ifstream in(path);
    if (!in) {
        throw Error(std::string("cannot open ") + what + " file '" + path + "'");
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string(what) + " file '" + path + "': " + e.what());
    }
}

std::string scalar_to_string(const json& value) {
    if (value.is_string()) {
        return value.get<std::string>();
    }
    if (value.is_boolean()) {
        return value.get<bool>() ? "true" : "false";
    }
    return value.dump();
}

}  // namespace

AgentFactory AgentSetup::factory() const {
    // The provider is shared; keep it alive inside the closure.
    std::shared_ptr<ModelProvider> provider_ref = provider;
    AgentConfig base = config;
    ToolRegistry tool_copy = tools;
    AgentFactory inner = make_agent_factory(base, *provider_ref, tool_copy);
    return [provider_ref, inner](const ParamMap& params,
                                 TraceRecorder& recorder) {
        return inner(params, recorder);
    };
}

AgentSetup load_agent_config(const std::string& path) {
    const json doc = load_json_file(path, "agent config");
    if (!doc.is_object()) {
        throw ParseError("agent config '" + path + "' must be a JSON object");
    }

    AgentSetup setup;
    setup.config.system_prompt = doc.value("system_prompt", std::string{});
    setup.config.model_id = doc.value("model_id", std::string{"default-model"});
    setup.config.temperature = doc.value("temperature", 0.0);
    setup.config.max_hops = doc.value("max_hops", std::int64_t{8});

    if (doc.contains("tools")) {
        for (const json& tool_obj : doc["tools"]) {
            ToolSpec spec;
            spec.name = tool_obj.at("name").get<std::string>();
            spec.description = tool_obj.value("description", std::string{});
            if (tool_obj.contains("parameters")) {
                for (const auto& [pname, pspec] :
                     tool_obj["parameters"].items()) {
                    ToolParam param;
                    param.name = pname;
                    param.type = pspec.value("type", std::string{"string"});
                    param.description =
                        pspec.value("description", std::string{});
                    param.required = pspec.value("required", false);
                    spec.parameters.push_back(std::move(param));
                }
            }
            const std::string result =
                tool_obj.value("result", std::string{"ok"});
            setup.tools.emplace(
                spec.name,
                [result](const std::vector<std::pair<std::string, std::string>>&) {
                    return result;
                });
            setup.config.tools.push_back(std::move(spec));
        }
    }

    json provider_spec;
    if (doc.contains("provider")) {
        provider_spec = doc["provider"];
    } else {
        provider_spec = json{{"kind", "scripted"}};
    }
    // scripted_rules at the top level also feeds a scripted provider.
    if (doc.contains("scripted_rules") &&
        provider_spec.value("kind", std::string{"scripted"}) == "scripted" &&
        !provider_spec.contains("rules")) {
        provider_spec["rules"] = doc["scripted_rules"];
    }
    setup.provider = provider_from_json(provider_spec);
    return setup;
}

ParameterGrid load_params(const std::string& path) {
    const json doc = load_json_file(path, "params");
    if (!doc.is_object()) {
        throw ParseError("params file '" + path + "' must be a JSON object");
    }
    ParameterGrid grid;
    if (doc.contains("fixed")) {
        for (const auto& [name, value] : doc["fixed"].items()) {
            grid.fixed.emplace_back(name, scalar_to_string(value));
        }
    }
    if (doc.contains("permuted")) {
        for (const auto& [name, values] : doc["permuted"].items()) {
            if (!values.is_array()) {
                throw ParseError("permuted param '" + name +
                                 "' must list candidate values");
            }
            std::vector<std::string> candidates;
            for (const json& v : values) {
                candidates.push_back(scalar_to_string(v));
            }
            grid.permuted.emplace_back(name, std::move(candidates));
        }
    }
    return grid;
}

std::vector<AssertionRule> load_assertion_rules(const std::string& path) {
    const json doc = load_json_file(path, "rules");
    if (!doc.is_array()) {
        throw ParseError("rules file '" + path + "' must be a JSON array");
    }
    std::vector<AssertionRule> rules;
    for (const json& entry : doc) {
        AssertionRule rule;
        rule.metric = entry.at("metric").get<std::string>();
        const std::string scope =
            entry.value("scope", std::string{"overall"});
        if (scope == "overall") {
            rule.scope = RuleScope::Overall;
        } else if (scope == "per_permutation") {
            rule.scope = RuleScope::PerPermutation;
        } else {
            throw ParseError("unknown rule scope '" + scope + "'");
        }
        const std::string comparator = entry.at("comparator").get<std::string>();
        if (comparator == ">=") {
            rule.comparator = Comparator::GreaterOrEqual;
        } else if (comparator == "<=") {
            rule.comparator = Comparator::LessOrEqual;
        } else {
            throw ParseError("unknown comparator '" + comparator +
                             "' (use \">=\" or \"<=\")");
        }
        rule.threshold = entry.at("threshold").get<double>();
        rules.push_back(std::move(rule));
    }
    return rules;
}

MonitorConfig load_monitor_config(const std::string& path) {
    const json doc = load_json_file(path, "monitor config");
    MonitorConfig config;
    config.metrics_spec = doc.value("metrics", std::string{});
    config.completion_timeout_ms =
        doc.value("completion_timeout_ms",
                  doc.value("completion_timeout_s", std::int64_t{30}) * 1000);
    if (doc.contains("rules")) {
        for (const json& entry : doc["rules"]) {
            AlarmRule rule;
            rule.metric = entry.at("metric").get<std::string>();
            rule.aggregation = aggregation_from_string(
                entry.value("aggregation", std::string{"sum"}));
            const std::string comparator =
                entry.value("comparator", std::string{">="});
            if (comparator == ">=") {
                rule.comparator = AlarmComparator::GreaterOrEqual;
            } else if (comparator == "<=") {
                rule.comparator = AlarmComparator::LessOrEqual;
            } else {
                throw ParseError("unknown comparator '" + comparator + "'");
            }
            rule.threshold = entry.at("threshold").get<double>();
            rule.window = entry.at("window").get<std::size_t>();
            config.alarm_rules.push_back(std::move(rule));
        }
    }
    return config;
}

}  // namespace agenteval
