// SPDX-License-Identifier: Apache-2.0
#include "agenteval/cases/io.hpp"

#include <fstream>
#include <set>

#include <nlohmann/json.hpp>

#include "agenteval/errors.hpp"

namespace agenteval {

using nlohmann::json;

namespace {

std::string context_for(std::size_t index, const std::string& field) {
    return "case[" + std::to_string(index) + "]." + field;
}

Case parse_case(const json& obj, std::size_t index) {
    if (!obj.is_object()) {
        throw ParseError("case entry is not an object", 0,
                         "case[" + std::to_string(index) + "]");
    }
    Case c;
    for (const auto& [key, value] : obj.items()) {
        if (key == "name") {
            if (!value.is_string()) {
                throw ParseError("name must be a string", 0,
                                 context_for(index, "name"));
            }
            c.name = value.get<std::string>();
        } else if (key == "turns") {
            if (!value.is_array()) {
                throw ParseError("turns must be an array", 0,
                                 context_for(index, "turns"));
            }
            for (std::size_t t = 0; t < value.size(); ++t) {
                const json& turn_obj = value[t];
                Turn turn;
                if (!turn_obj.is_object() || !turn_obj.contains("user_input") ||
                    !turn_obj["user_input"].is_string()) {
                    throw ParseError(
                        "turn needs a string user_input", 0,
                        context_for(index, "turns[" + std::to_string(t) + "]"));
                }
                turn.user_input = turn_obj["user_input"].get<std::string>();
                if (turn.user_input.empty()) {
                    throw ParseError(
                        "turn user_input is empty", 0,
                        context_for(index, "turns[" + std::to_string(t) + "]"));
                }
                if (turn_obj.contains("acceptable_responses")) {
                    for (const json& r : turn_obj["acceptable_responses"]) {
                        turn.acceptable_responses.push_back(r.get<std::string>());
                    }
                }
                c.turns.push_back(std::move(turn));
            }
        } else if (key == "overall_expectations") {
            c.overall_expectations = value.get<std::string>();
        } else if (key == "expected_tool") {
            c.expected_tool = value.get<std::string>();
        } else if (key == "metadata") {
            if (!value.is_object()) {
                throw ParseError("metadata must be an object", 0,
                                 context_for(index, "metadata"));
            }
            for (const auto& [mk, mv] : value.items()) {
                c.metadata[mk] =
                    mv.is_string() ? mv.get<std::string>() : mv.dump();
            }
        } else {
            // Forward compatibility: keep unknown fields as metadata.
            c.metadata[key] = value.is_string() ? value.get<std::string>()
                                                : value.dump();
        }
    }
    if (c.name.empty()) {
        throw ParseError("case has no name", 0,
                         "case[" + std::to_string(index) + "]");
    }
    if (c.turns.empty()) {
        throw ParseError("case '" + c.name + "' has no turns", 0,
                         context_for(index, "turns"));
    }
    return c;
}

}  // namespace

std::vector<Case> load_cases(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open cases file '" + path + "'");
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError("cases file '" + path + "': " + e.what());
    }
    if (!doc.is_array()) {
        throw ParseError("cases file '" + path + "' must be a JSON array");
    }

    std::vector<Case> cases;
    std::set<std::string> names;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        Case c = parse_case(doc[i], i);
        if (!names.insert(c.name).second) {
            throw ParseError("duplicate case name '" + c.name + "'", 0,
                             context_for(i, "name"));
        }
        cases.push_back(std::move(c));
    }
    return cases;
}

void save_cases(const std::vector<Case>& cases, const std::string& path) {
    json doc = json::array();
    for (const Case& c : cases) {
        json obj;
        obj["name"] = c.name;
        json turns = json::array();
        for (const Turn& t : c.turns) {
            json turn;
            turn["user_input"] = t.user_input;
            turn["acceptable_responses"] = t.acceptable_responses;
            turns.push_back(std::move(turn));
        }
        obj["turns"] = std::move(turns);
        if (c.overall_expectations.has_value()) {
            obj["overall_expectations"] = *c.overall_expectations;
        }
        if (c.expected_tool.has_value()) {
            obj["expected_tool"] = *c.expected_tool;
        }
        if (!c.metadata.empty()) {
            obj["metadata"] = c.metadata;
        }
        doc.push_back(std::move(obj));
    }

    std::ofstream out(path);
    if (!out) {
        throw Error("cannot write cases file '" + path + "'");
    }
    out << doc.dump(2) << '\n';
}

std::map<std::string, Case> case_map(const std::vector<Case>& cases) {
    std::map<std::string, Case> out;
    for (const Case& c : cases) {
        out.emplace(c.name, c);
    }
    return out;
}

}  // namespace agenteval
