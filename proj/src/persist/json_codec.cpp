// SPDX-License-Identifier: Apache-2.0
#include "agenteval/persist/json_codec.hpp"

#include "agenteval/errors.hpp"

namespace agenteval {

using json = nlohmann::ordered_json;

json trace_to_json(const Trace& trace) {
    json obj;
    obj["version"] = kTraceSchemaVersion;
    obj["conversation_id"] = trace.conversation_id;
    obj["case_name"] = trace.case_name;
    obj["permutation_id"] = trace.permutation_id;
    obj["run_index"] = trace.run_index;
    obj["seq"] = trace.seq;
    obj["to"] = to_string(trace.to);
    obj["timestamp_ms"] = trace.timestamp_ms;
    obj["latency_ms"] = trace.latency_ms;
    obj["input_tokens"] = trace.input_tokens;
    obj["output_tokens"] = trace.output_tokens;
    obj["model_id"] = trace.model_id;

    json messages = json::array();
    for (const Message& m : trace.user_conversation) {
        messages.push_back(json{{"role", to_string(m.role)}, {"text", m.text}});
    }
    obj["messages"] = std::move(messages);

    json invocations = json::array();
    for (const ToolInvocation& inv : trace.tool_invocations) {
        json arguments = json::object();
        for (const auto& [name, value] : inv.arguments) {
            arguments[name] = value;
        }
        invocations.push_back(json{{"tool_name", inv.tool_name},
                                   {"arguments", std::move(arguments)},
                                   {"result_text", inv.result_text},
                                   {"latency_ms", inv.latency_ms},
                                   {"success", inv.success}});
    }
    obj["tool_invocations"] = std::move(invocations);
    obj["extras"] = trace.extras;
    return obj;
}

Trace trace_from_json(const json& obj) {
    if (!obj.is_object()) {
        throw ParseError("trace is not a JSON object");
    }
    Trace t;
    for (const auto& [key, value] : obj.items()) {
        if (key == "version") {
            if (!value.is_string() ||
                value.get<std::string>() != kTraceSchemaVersion) {
                throw ParseError("unsupported trace schema version");
            }
        } else if (key == "conversation_id") {
            t.conversation_id = value.get<std::string>();
        } else if (key == "case_name") {
            t.case_name = value.get<std::string>();
        } else if (key == "permutation_id") {
            t.permutation_id = value.get<std::string>();
        } else if (key == "run_index") {
            t.run_index = value.get<std::int64_t>();
        } else if (key == "seq") {
            t.seq = value.get<std::int64_t>();
        } else if (key == "to") {
            t.to = trace_kind_from_string(value.get<std::string>());
        } else if (key == "timestamp_ms") {
            t.timestamp_ms = value.get<std::int64_t>();
        } else if (key == "latency_ms") {
            t.latency_ms = value.get<std::int64_t>();
        } else if (key == "input_tokens") {
            t.input_tokens = value.get<std::int64_t>();
        } else if (key == "output_tokens") {
            t.output_tokens = value.get<std::int64_t>();
        } else if (key == "model_id") {
            t.model_id = value.get<std::string>();
        } else if (key == "messages") {
            for (const json& m : value) {
                t.user_conversation.push_back(
                    Message{role_from_string(m.at("role").get<std::string>()),
                            m.at("text").get<std::string>()});
            }
        } else if (key == "tool_invocations") {
            for (const json& inv : value) {
                ToolInvocation invocation;
                invocation.tool_name = inv.at("tool_name").get<std::string>();
                if (inv.contains("arguments")) {
                    for (const auto& [arg, arg_value] :
                         inv.at("arguments").items()) {
                        invocation.arguments.emplace_back(
                            arg, arg_value.get<std::string>());
                    }
                }
                invocation.result_text =
                    inv.value("result_text", std::string{});
                invocation.latency_ms = inv.value("latency_ms", std::int64_t{0});
                invocation.success = inv.value("success", true);
                t.tool_invocations.push_back(std::move(invocation));
            }
        } else if (key == "extras") {
            for (const auto& [ek, ev] : value.items()) {
                t.extras[ek] =
                    ev.is_string() ? ev.get<std::string>() : ev.dump();
            }
        } else {
            // Unknown fields survive in extras.
            t.extras[key] = value.is_string() ? value.get<std::string>()
                                              : value.dump();
        }
    }
    return t;
}

json measurement_to_json(const Measurement& m) {
    json obj;
    obj["name"] = m.name;
    obj["value"] = m.value;
    obj["unit"] = to_string(m.unit);
    obj["additional_info"] = m.additional_info;
    obj["conversation_id"] = m.conversation_id;
    obj["case_name"] = m.case_name;
    obj["permutation_id"] = m.permutation_id;
    obj["run_index"] = m.run_index;
    return obj;
}

Measurement measurement_from_json(const json& obj) {
    if (!obj.is_object()) {
        throw ParseError("measurement is not a JSON object");
    }
    Measurement m;
    m.name = obj.at("name").get<std::string>();
    m.value = obj.at("value").get<double>();
    m.unit = unit_from_string(obj.at("unit").get<std::string>());
    if (obj.contains("additional_info")) {
        for (const auto& [k, v] : obj.at("additional_info").items()) {
            m.additional_info[k] = v.is_string() ? v.get<std::string>() : v.dump();
        }
    }
    m.conversation_id = obj.value("conversation_id", std::string{});
    m.case_name = obj.value("case_name", std::string{});
    m.permutation_id = obj.value("permutation_id", std::string{});
    m.run_index = obj.value("run_index", std::int64_t{0});
    return m;
}

}  // namespace agenteval
