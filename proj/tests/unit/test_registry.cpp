// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "agenteval/errors.hpp"
#include "agenteval/eval/engine.hpp"
#include "agenteval/metrics/registry.hpp"
#include "support/fixtures.hpp"

using namespace agenteval;

namespace {

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    out << content;
}

}  // namespace

TEST_CASE("metric spec parsing: plain names and config files") {
    write_file("reg_cases.json", R"([
      {"name": "Tool use: get_weather",
       "turns": [{"user_input": "What is the weather?",
                  "acceptable_responses": ["It is sunny."]}],
       "overall_expectations": "- answers the weather question"}
    ])");
    write_file("reg_pricing.json",
               R"({"model-a": {"input_per_1k": 0.003, "output_per_1k": 0.015}})");
    write_file("reg_keywords.json",
               R"({"name": "NoRealDishMetric",
                   "terms": ["chicken nuggets", "macaroni and cheese"]})");
    write_file("reg_indicators.json", R"(["sorry", "unfortunately"])");
    write_file("reg_judge.json", R"({
      "provider": {"kind": "scripted",
                   "rules": [{"match": "any", "reply_text": "9"}]},
      "model_id": "j",
      "cases": "reg_cases.json"
    })");

    auto metrics = metrics_from_spec(
        "latency, tokens,hops,no-tool,correct-tool:reg_cases.json,"
        "unable-to-help:reg_indicators.json,cost:reg_pricing.json,"
        "keyword:reg_keywords.json,similarity:reg_cases.json,"
        "bleu:reg_cases.json,conciseness:reg_judge.json,"
        "expectation:reg_judge.json");
    CHECK(metrics.size() == 12);

    // The full set runs cleanly over a matching conversation.
    TraceSet traces;
    auto conv = fixtures::direct_conversation(
        "c", "Tool use: get_weather", "What is the weather?", "It is sunny.");
    conv[0].tool_invocations.push_back(fixtures::invocation("get_weather"));
    traces.add_conversation(conv);
    MeasurementSet measurements = eval(traces, metrics);
    CHECK(measurements.size() >= 10);
    for (const Measurement& m : measurements.measurements()) {
        CHECK(m.name.find(".error") == std::string::npos);
    }

    for (const char* f : {"reg_cases.json", "reg_pricing.json",
                          "reg_keywords.json", "reg_indicators.json",
                          "reg_judge.json"}) {
        std::remove(f);
    }
}

TEST_CASE("metric spec errors") {
    try {
        metrics_from_spec("bogus");
        FAIL("expected an error");
    } catch (const Error& e) {
        // The message lists the known metric names.
        CHECK(std::string(e.what()).find("latency") != std::string::npos);
        CHECK(std::string(e.what()).find("bleu") != std::string::npos);
    }
    CHECK_THROWS_AS(metrics_from_spec("cost"), Error);      // needs config
    CHECK_THROWS_AS(metrics_from_spec(""), Error);          // selects nothing
    CHECK_THROWS_AS(metrics_from_spec("cost:missing_file.json"), Error);
}

TEST_CASE("agent construction validates its config") {
    fixtures::ScriptedAgent fixture = fixtures::weather_agent();

    AgentConfig hot = fixture.config;
    hot.temperature = 1.5;
    CHECK_THROWS_AS(Agent(hot, *fixture.provider, fixture.tools, nullptr),
                    Error);

    AgentConfig no_hops = fixture.config;
    no_hops.max_hops = 0;
    CHECK_THROWS_AS(Agent(no_hops, *fixture.provider, fixture.tools, nullptr),
                    Error);

    AgentConfig duped = fixture.config;
    duped.tools.push_back(duped.tools[0]);
    CHECK_THROWS_AS(Agent(duped, *fixture.provider, fixture.tools, nullptr),
                    Error);

    AgentConfig unimplemented = fixture.config;
    ToolSpec ghost;
    ghost.name = "ghost_tool";
    unimplemented.tools.push_back(ghost);
    CHECK_THROWS_AS(
        Agent(unimplemented, *fixture.provider, fixture.tools, nullptr),
        ToolResolutionError);
}
