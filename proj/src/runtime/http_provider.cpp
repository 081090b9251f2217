// SPDX-License-Identifier: Apache-2.0
#include "agenteval/runtime/http_provider.hpp"

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "agenteval/errors.hpp"
#include "agenteval/persist/http_sink.hpp"

namespace agenteval {

using nlohmann::json;

HttpProvider::HttpProvider(HttpProviderConfig config)
    : config_(std::move(config)) {
    auto [base, path] = split_http_endpoint(config_.endpoint);
    base_url_ = std::move(base);
    path_ = std::move(path);
}

ModelReply HttpProvider::converse(const std::string& system_prompt,
                                  const std::vector<Message>& messages,
                                  const std::string& model_id,
                                  double temperature,
                                  const std::vector<ToolSpec>& tools) {
    json body;
    body["model"] = model_id;
    body["system"] = system_prompt;
    json msgs = json::array();
    for (const Message& m : messages) {
        msgs.push_back(json{{"role", to_string(m.role)}, {"text", m.text}});
    }
    body["messages"] = std::move(msgs);
    body["temperature"] = temperature;
    json tool_specs = json::array();
    for (const ToolSpec& tool : tools) {
        json parameters = json::object();
        for (const ToolParam& p : tool.parameters) {
            parameters[p.name] = json{{"type", p.type},
                                      {"description", p.description},
                                      {"required", p.required}};
        }
        tool_specs.push_back(json{{"name", tool.name},
                                  {"description", tool.description},
                                  {"parameters", std::move(parameters)}});
    }
    body["tools"] = std::move(tool_specs);

    httplib::Client client(base_url_);
    client.set_connection_timeout(config_.timeout_s, 0);
    client.set_read_timeout(config_.timeout_s, 0);
    httplib::Headers headers;
    if (!config_.auth_header_name.empty()) {
        headers.emplace(config_.auth_header_name, config_.auth_header_value);
    }

    auto result = client.Post(path_, headers, body.dump(), "application/json");
    if (!result) {
        throw ProviderError("transport failure reaching " + config_.endpoint +
                                ": " + httplib::to_string(result.error()),
                            true);
    }
    if (result->status == 429 || result->status >= 500) {
        throw ProviderError("provider returned status " +
                                std::to_string(result->status),
                            true);
    }
    if (result->status < 200 || result->status >= 300) {
        throw ProviderError("provider refused with status " +
                                std::to_string(result->status) + ": " +
                                result->body,
                            false);
    }

    json reply_json;
    try {
        reply_json = json::parse(result->body);
    } catch (const json::parse_error& e) {
        throw ProviderError(std::string("malformed provider reply: ") +
                                e.what(),
                            false);
    }

    ModelReply reply;
    try {
        if (reply_json.contains("text") && !reply_json["text"].is_null()) {
            reply.text = reply_json["text"].get<std::string>();
        }
        if (reply_json.contains("tool_calls")) {
            for (const json& call : reply_json["tool_calls"]) {
                ToolCallRequest request;
                request.tool_name = call.at("name").get<std::string>();
                if (call.contains("arguments")) {
                    for (const auto& [k, v] : call.at("arguments").items()) {
                        request.arguments.emplace_back(
                            k, v.is_string() ? v.get<std::string>() : v.dump());
                    }
                }
                reply.tool_calls.push_back(std::move(request));
            }
        }
        if (reply_json.contains("usage")) {
            const json& usage = reply_json["usage"];
            reply.input_tokens = usage.value("input_tokens", std::int64_t{0});
            reply.output_tokens = usage.value("output_tokens", std::int64_t{0});
        }
    } catch (const json::exception& e) {
        throw ProviderError(std::string("malformed provider reply: ") +
                                e.what(),
                            false);
    }
    if (reply.text.empty() && reply.tool_calls.empty()) {
        throw ProviderError("provider reply has neither text nor tool calls",
                            false);
    }
    return reply;
}

}  // namespace agenteval
