// SPDX-License-Identifier: Apache-2.0
#include "agenteval/metrics/builtin.hpp"

#include <cctype>
#include <fstream>

#include <nlohmann/json.hpp>

#include "agenteval/errors.hpp"

namespace agenteval {

using nlohmann::json;

PricingTable load_pricing_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open pricing file '" + path + "'");
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError("pricing file '" + path + "': " + e.what());
    }
    if (!doc.is_object()) {
        throw ParseError("pricing file '" + path + "' must be a JSON object");
    }
    PricingTable table;
    for (const auto& [model, entry] : doc.items()) {
        ModelPricing pricing;
        pricing.input_per_1k = entry.at("input_per_1k").get<double>();
        pricing.output_per_1k = entry.at("output_per_1k").get<double>();
        if (pricing.input_per_1k < 0 || pricing.output_per_1k < 0) {
            throw ParseError("pricing for '" + model + "' is negative", 0, model);
        }
        table.models.emplace(model, pricing);
    }
    return table;
}

const Trace* final_llm_trace(const std::vector<Trace>& conversation) {
    if (conversation.empty() || conversation.back().to != TraceKind::LLM) {
        return nullptr;
    }
    return &conversation.back();
}

const Trace* last_llm_trace(const std::vector<Trace>& conversation) {
    for (auto it = conversation.rbegin(); it != conversation.rend(); ++it) {
        if (it->to == TraceKind::LLM) {
            return &*it;
        }
    }
    return nullptr;
}

std::vector<std::string> assistant_texts(const std::vector<Message>& messages) {
    std::vector<std::string> out;
    for (const Message& m : messages) {
        if (m.role == Role::Assistant) {
            out.push_back(m.text);
        }
    }
    return out;
}

std::string ascii_lower(const std::string& s) {
    std::string out = s;
    for (char& c : out) {
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    return out;
}

std::string normalize_apostrophes(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        // U+2019 encodes as E2 80 99.
        if (i + 2 < s.size() && static_cast<unsigned char>(s[i]) == 0xE2 &&
            static_cast<unsigned char>(s[i + 1]) == 0x80 &&
            static_cast<unsigned char>(s[i + 2]) == 0x99) {
            out += '\'';
            i += 2;
        } else {
            out += s[i];
        }
    }
    return out;
}

std::vector<Measurement> LatencyMetric::evaluate_conversation(
    const std::vector<Trace>& conversation) const {
    Measurement m;
    m.name = "Latency";
    m.unit = Unit::Milliseconds;
    double total = 0.0;
    for (const Trace& t : conversation) {
        total += static_cast<double>(t.latency_ms);
        m.additional_info["seq:" + std::to_string(t.seq)] =
            std::to_string(t.latency_ms);
    }
    m.value = total;
    return {m};
}

std::vector<Measurement> TokensMetric::evaluate_conversation(
    const std::vector<Trace>& conversation) const {
    double input = 0.0;
    double output = 0.0;
    for (const Trace& t : conversation) {
        if (t.to == TraceKind::LLM) {
            input += static_cast<double>(t.input_tokens);
            output += static_cast<double>(t.output_tokens);
        }
    }
    Measurement in;
    in.name = "InputTokens";
    in.unit = Unit::Tokens;
    in.value = input;
    Measurement out;
    out.name = "OutputTokens";
    out.unit = Unit::Tokens;
    out.value = output;
    return {in, out};
}

std::vector<Measurement> CostMetric::evaluate_conversation(
    const std::vector<Trace>& conversation) const {
    double total = 0.0;
    for (const Trace& t : conversation) {
        if (t.to != TraceKind::LLM) {
            continue;
        }
        auto it = pricing_.models.find(t.model_id);
        if (it == pricing_.models.end()) {
            Measurement err;
            err.name = "Cost.error";
            err.value = 0.0;
            err.unit = Unit::Dimensionless;
            err.additional_info["missing_model"] = t.model_id;
            return {err};
        }
        total += static_cast<double>(t.input_tokens) / 1000.0 *
                     it->second.input_per_1k +
                 static_cast<double>(t.output_tokens) / 1000.0 *
                     it->second.output_per_1k;
    }
    Measurement m;
    m.name = "Cost";
    m.unit = Unit::USD;
    m.value = total;
    return {m};
}

std::vector<Measurement> HopsMetric::evaluate_conversation(
    const std::vector<Trace>& conversation) const {
    std::int64_t hops = 0;
    for (const Trace& t : conversation) {
        if (t.to == TraceKind::LLM) {
            ++hops;
        }
    }
    Measurement m;
    m.name = "Hops";
    m.unit = Unit::Count;
    m.value = static_cast<double>(hops);
    return {m};
}

std::vector<Measurement> NoToolMetric::evaluate_conversation(
    const std::vector<Trace>& conversation) const {
    Measurement m;
    m.name = "AgentDoesntInvokeAnyTool";
    m.unit = Unit::Count;
    m.value = conversation.back().tool_invocations.empty() ? 1.0 : 0.0;
    return {m};
}

std::vector<Measurement> CorrectToolMetric::evaluate_conversation(
    const std::vector<Trace>& conversation) const {
    const std::string& case_name = conversation.front().case_name;

    std::optional<std::string> expected;
    auto it = cases_.find(case_name);
    if (it != cases_.end()) {
        expected = it->second.resolved_expected_tool();
    }
    if (!expected.has_value()) {
        Case probe;
        probe.name = case_name;
        expected = probe.resolved_expected_tool();
    }
    if (!expected.has_value()) {
        Measurement err;
        err.name = "AgentInvokesCorrectTool.error";
        err.value = 0.0;
        err.unit = Unit::Dimensionless;
        err.additional_info["error"] =
            "expected tool unresolvable for case '" + case_name + "'";
        return {err};
    }

    std::int64_t correct_count = 0;
    bool used_other_tool = false;
    for (const ToolInvocation& invocation :
         conversation.back().tool_invocations) {
        if (invocation.tool_name == *expected) {
            correct_count += 1;
        } else {
            used_other_tool = true;
            break;
        }
    }

    Measurement m;
    m.name = "AgentInvokesCorrectTool";
    m.unit = Unit::Count;
    m.value = (!used_other_tool && correct_count > 0) ? 1.0 : 0.0;
    m.additional_info["expected_tool"] = *expected;
    return {m};
}

const std::vector<std::string>& default_unable_to_help_indicators() {
    static const std::vector<std::string> indicators = {
        "unfortunately", "I am sorry",  "I'm sorry",
        "I am afraid",   "I'm afraid",  "I apologize",
    };
    return indicators;
}

namespace {

bool matches_at(const std::string& lower_text, std::size_t pos,
                const std::string& lower_phrase) {
    if (pos + lower_phrase.size() > lower_text.size()) {
        return false;
    }
    return lower_text.compare(pos, lower_phrase.size(), lower_phrase) == 0;
}

}  // namespace

std::vector<Measurement> UnableToHelpMetric::evaluate_conversation(
    const std::vector<Trace>& conversation) const {
    const Trace* last = final_llm_trace(conversation);
    if (last == nullptr) {
        return {};
    }

    std::vector<std::string> lowered_indicators;
    lowered_indicators.reserve(indicators_.size());
    for (const std::string& phrase : indicators_) {
        lowered_indicators.push_back(ascii_lower(normalize_apostrophes(phrase)));
    }

    std::int64_t count = 0;
    std::string found;
    for (const std::string& text : assistant_texts(last->user_conversation)) {
        const std::string lowered = ascii_lower(normalize_apostrophes(text));
        for (std::size_t pos = 0; pos < lowered.size(); ++pos) {
            // At most one indicator counts per position, like a lookahead
            // alternation; overlaps across positions all count.
            for (std::size_t k = 0; k < lowered_indicators.size(); ++k) {
                if (matches_at(lowered, pos, lowered_indicators[k])) {
                    ++count;
                    if (!found.empty()) {
                        found += ", ";
                    }
                    found += indicators_[k];
                    break;
                }
            }
        }
    }

    Measurement m;
    m.name = "AgentIsUnableToHelpUser";
    m.unit = Unit::Count;
    m.value = static_cast<double>(count);
    m.additional_info["found"] = found;
    return {m};
}

KeywordPresenceMetric::KeywordPresenceMetric(
    std::string metric_name, std::vector<std::string> allowed_terms)
    : name_(std::move(metric_name)), terms_(std::move(allowed_terms)) {
    if (name_.empty()) {
        throw Error("keyword metric needs a name");
    }
    if (terms_.empty()) {
        throw Error("keyword metric needs at least one term");
    }
}

std::vector<Measurement> KeywordPresenceMetric::evaluate_conversation(
    const std::vector<Trace>& conversation) const {
    const Trace* last = final_llm_trace(conversation);
    if (last == nullptr) {
        return {};
    }

    bool present = false;
    for (const std::string& text : assistant_texts(last->user_conversation)) {
        const std::string lowered = ascii_lower(text);
        for (const std::string& term : terms_) {
            if (lowered.find(ascii_lower(term)) != std::string::npos) {
                present = true;
                break;
            }
        }
        if (present) {
            break;
        }
    }

    Measurement m;
    m.name = name_;
    m.unit = Unit::Count;
    m.value = present ? 1.0 : 0.0;
    m.additional_info["case"] = conversation.front().case_name;
    return {m};
}

}  // namespace agenteval
