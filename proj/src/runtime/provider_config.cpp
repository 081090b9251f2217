// SPDX-License-Identifier: Apache-2.0
#include "agenteval/runtime/provider_config.hpp"

#include <cstdlib>

#include "agenteval/errors.hpp"
#include "agenteval/runtime/http_provider.hpp"

namespace agenteval {

using nlohmann::json;

std::vector<ScriptedRule> scripted_rules_from_json(const json& rules) {
    if (!rules.is_array()) {
        throw ParseError("scripted rules must be a JSON array");
    }
    std::vector<ScriptedRule> out;
    for (const json& entry : rules) {
        ScriptedRule rule;
        const std::string match = entry.value("match", std::string{"any"});
        if (match == "exact") {
            rule.match = MatchKind::Exact;
        } else if (match == "substring") {
            rule.match = MatchKind::Substring;
        } else if (match == "any") {
            rule.match = MatchKind::Any;
        } else {
            throw ParseError("unknown rule match kind '" + match + "'");
        }
        rule.pattern = entry.value("pattern", std::string{});
        rule.reply_text = entry.value("reply_text", std::string{});
        rule.delay_ms = entry.value("delay_ms", std::int64_t{0});
        if (entry.contains("tool_calls")) {
            for (const json& call : entry["tool_calls"]) {
                ToolCallRequest request;
                request.tool_name = call.at("name").get<std::string>();
                if (call.contains("arguments")) {
                    for (const auto& [k, v] : call["arguments"].items()) {
                        request.arguments.emplace_back(
                            k, v.is_string() ? v.get<std::string>() : v.dump());
                    }
                }
                rule.tool_calls.push_back(std::move(request));
            }
        }
        if (rule.reply_text.empty() && rule.tool_calls.empty()) {
            throw ParseError("scripted rule needs reply_text or tool_calls");
        }
        out.push_back(std::move(rule));
    }
    return out;
}

std::shared_ptr<ModelProvider> provider_from_json(const json& spec) {
    if (!spec.is_object()) {
        throw ParseError("provider spec must be a JSON object");
    }
    const std::string kind = spec.value("kind", std::string{"scripted"});
    if (kind == "scripted") {
        std::vector<ScriptedRule> rules;
        if (spec.contains("rules")) {
            rules = scripted_rules_from_json(spec["rules"]);
        }
        return std::make_shared<ScriptedProvider>(std::move(rules));
    }
    if (kind == "http") {
        HttpProviderConfig config;
        if (!spec.contains("endpoint")) {
            throw ParseError("http provider needs an endpoint");
        }
        config.endpoint = spec["endpoint"].get<std::string>();
        config.auth_header_name = spec.value("auth_header", std::string{});
        config.timeout_s = spec.value("timeout_s", 30);
        const std::string auth_env = spec.value("auth_env", std::string{});
        if (!auth_env.empty()) {
            const char* value = std::getenv(auth_env.c_str());
            if (value != nullptr) {
                config.auth_header_value = value;
            }
        }
        return std::make_shared<HttpProvider>(std::move(config));
    }
    throw ParseError("unknown provider kind '" + kind + "'");
}

}  // namespace agenteval
