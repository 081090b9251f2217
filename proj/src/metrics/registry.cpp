// SPDX-License-Identifier: Apache-2.0
#include "agenteval/metrics/registry.hpp"

#include <filesystem>
#include <fstream>

#include <nlohmann/json.hpp>

#include "agenteval/cases/io.hpp"
#include "agenteval/errors.hpp"
#include "agenteval/metrics/builtin.hpp"
#include "agenteval/metrics/judge.hpp"
#include "agenteval/metrics/text.hpp"
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

JudgeClient judge_from_file(const std::string& path,
                            std::map<std::string, Case>* cases_out) {
    const json doc = load_json_file(path, "judge config");
    if (!doc.contains("provider")) {
        throw ParseError("judge config '" + path + "' needs a provider");
    }
    std::shared_ptr<ModelProvider> provider = provider_from_json(doc["provider"]);
    const std::string model_id = doc.value("model_id", std::string{"judge"});
    if (cases_out != nullptr && doc.contains("cases")) {
        // Relative case paths resolve against the judge config's directory.
        std::filesystem::path cases_path = doc["cases"].get<std::string>();
        if (cases_path.is_relative()) {
            cases_path = std::filesystem::path(path).parent_path() / cases_path;
        }
        *cases_out = case_map(load_cases(cases_path.string()));
    }
    return JudgeClient(std::move(provider), model_id);
}

// The embedder shared by all similarity metrics built from specs.
const HashedBowEmbedder& shared_embedder() {
    static const HashedBowEmbedder embedder;
    return embedder;
}

std::unique_ptr<Metric> build_metric(const std::string& name,
                                     const std::string& config) {
    auto require_config = [&](const char* what) {
        if (config.empty()) {
            throw Error("metric '" + name + "' needs a config file (" + what +
                        "), e.g. \"" + name + ":file.json\"");
        }
    };

    if (name == "latency") {
        return std::make_unique<LatencyMetric>();
    }
    if (name == "tokens") {
        return std::make_unique<TokensMetric>();
    }
    if (name == "hops") {
        return std::make_unique<HopsMetric>();
    }
    if (name == "no-tool") {
        return std::make_unique<NoToolMetric>();
    }
    if (name == "correct-tool") {
        if (config.empty()) {
            return std::make_unique<CorrectToolMetric>();
        }
        return std::make_unique<CorrectToolMetric>(case_map(load_cases(config)));
    }
    if (name == "unable-to-help") {
        if (config.empty()) {
            return std::make_unique<UnableToHelpMetric>();
        }
        const json doc = load_json_file(config, "indicator");
        std::vector<std::string> indicators;
        for (const json& phrase : doc) {
            indicators.push_back(phrase.get<std::string>());
        }
        return std::make_unique<UnableToHelpMetric>(std::move(indicators));
    }
    if (name == "cost") {
        require_config("pricing table");
        return std::make_unique<CostMetric>(load_pricing_table(config));
    }
    if (name == "keyword") {
        require_config("terms");
        const json doc = load_json_file(config, "keyword");
        std::vector<std::string> terms;
        for (const json& term : doc.at("terms")) {
            terms.push_back(term.get<std::string>());
        }
        return std::make_unique<KeywordPresenceMetric>(
            doc.value("name", std::string{"KeywordPresence"}), std::move(terms));
    }
    if (name == "similarity") {
        require_config("cases");
        return std::make_unique<ResponseSimilarityMetric>(
            case_map(load_cases(config)), shared_embedder());
    }
    if (name == "bleu") {
        require_config("cases");
        return std::make_unique<BleuMetric>(case_map(load_cases(config)));
    }
    if (name == "conciseness") {
        require_config("judge config");
        return std::make_unique<JudgeConcisenessMetric>(
            judge_from_file(config, nullptr));
    }
    if (name == "expectation") {
        require_config("judge config");
        std::map<std::string, Case> cases;
        JudgeClient judge = judge_from_file(config, &cases);
        return std::make_unique<JudgeExpectationMetric>(std::move(cases),
                                                        std::move(judge));
    }

    std::string known;
    for (const std::string& n : known_metric_names()) {
        if (!known.empty()) {
            known += ", ";
        }
        known += n;
    }
    throw Error("unknown metric '" + name + "' (known: " + known + ")");
}

}  // namespace

const std::vector<std::string>& known_metric_names() {
    static const std::vector<std::string> names = {
        "latency",      "tokens",     "hops",    "no-tool",
        "correct-tool", "unable-to-help", "cost", "keyword",
        "similarity",   "bleu",       "conciseness", "expectation",
    };
    return names;
}

std::vector<std::unique_ptr<Metric>> metrics_from_spec(const std::string& spec) {
    std::vector<std::unique_ptr<Metric>> metrics;
    std::size_t pos = 0;
    while (pos <= spec.size()) {
        std::size_t comma = spec.find(',', pos);
        if (comma == std::string::npos) {
            comma = spec.size();
        }
        std::string item = spec.substr(pos, comma - pos);
        pos = comma + 1;

        // Trim surrounding whitespace.
        const std::size_t first = item.find_first_not_of(" \t");
        if (first == std::string::npos) {
            continue;
        }
        const std::size_t last = item.find_last_not_of(" \t");
        item = item.substr(first, last - first + 1);

        const std::size_t colon = item.find(':');
        const std::string name =
            colon == std::string::npos ? item : item.substr(0, colon);
        const std::string config =
            colon == std::string::npos ? std::string{} : item.substr(colon + 1);
        metrics.push_back(build_metric(name, config));
    }
    if (metrics.empty()) {
        throw Error("metric spec selects no metrics");
    }
    return metrics;
}

}  // namespace agenteval
