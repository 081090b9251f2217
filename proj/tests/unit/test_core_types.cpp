// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "agenteval/errors.hpp"
#include "agenteval/eval/trace_set.hpp"
#include "support/fixtures.hpp"

using namespace agenteval;

TEST_CASE("expected tool resolves from the name prefix") {
    Case c;
    c.name = "Tool use: phone_call";
    REQUIRE(c.resolved_expected_tool().has_value());
    CHECK(*c.resolved_expected_tool() == "phone_call");

    c.expected_tool = "navigation";
    CHECK(*c.resolved_expected_tool() == "navigation");

    Case plain;
    plain.name = "greeting";
    CHECK_FALSE(plain.resolved_expected_tool().has_value());
}

TEST_CASE("seq gaps and repeats are rejected at construction") {
    auto make = [](std::vector<std::int64_t> seqs) {
        std::vector<Trace> conv;
        for (std::int64_t s : seqs) {
            Trace t = fixtures::llm_trace("conv", s, {fixtures::user("hi")},
                                          1, 1, 0);
            conv.push_back(std::move(t));
        }
        TraceSet set;
        set.add_conversation(std::move(conv));
        return set;
    };

    CHECK_NOTHROW(make({0, 1, 2}));
    CHECK_THROWS_AS(make({0, 2}), Error);    // gap
    CHECK_THROWS_AS(make({0, 1, 1}), Error); // repeat
    CHECK_THROWS_AS(make({1, 2}), Error);    // does not start at 0
}

TEST_CASE("tool traces must carry exactly one invocation and no tokens") {
    std::vector<Trace> conv;
    conv.push_back(fixtures::llm_trace("c", 0, {fixtures::user("x")}, 1, 1, 0));
    Trace bad = fixtures::tool_trace("c", 1, {fixtures::user("x")},
                                     fixtures::invocation("t"), 0);
    bad.tool_invocations.clear();
    conv.push_back(bad);

    TraceSet set;
    CHECK_THROWS_AS(set.add_conversation(std::move(conv)), Error);

    std::vector<Trace> conv2;
    conv2.push_back(fixtures::llm_trace("c", 0, {fixtures::user("x")}, 1, 1, 0));
    Trace tokens = fixtures::tool_trace("c", 1, {fixtures::user("x")},
                                        fixtures::invocation("t"), 0);
    tokens.input_tokens = 3;
    conv2.push_back(tokens);
    TraceSet set2;
    CHECK_THROWS_AS(set2.add_conversation(std::move(conv2)), Error);
}

TEST_CASE("LLM traces need a conversation snapshot") {
    std::vector<Trace> conv;
    conv.push_back(fixtures::llm_trace("c", 0, {}, 1, 1, 0));
    TraceSet set;
    CHECK_THROWS_AS(set.add_conversation(std::move(conv)), Error);
}

TEST_CASE("only tool messages may carry empty text") {
    std::vector<Trace> conv;
    conv.push_back(fixtures::llm_trace(
        "c", 0, {fixtures::user("hi"), fixtures::assistant("")}, 1, 1, 0));
    TraceSet set;
    CHECK_THROWS_AS(set.add_conversation(std::move(conv)), Error);

    std::vector<Trace> ok;
    ok.push_back(fixtures::llm_trace(
        "c", 0, {fixtures::user("hi"), fixtures::tool_msg("")}, 1, 1, 0));
    TraceSet set2;
    CHECK_NOTHROW(set2.add_conversation(std::move(ok)));
}

TEST_CASE("invocations need a tool name") {
    std::vector<Trace> conv;
    conv.push_back(fixtures::llm_trace("c", 0, {fixtures::user("x")}, 1, 1, 0,
                                       "m", {fixtures::invocation("")}));
    TraceSet set;
    CHECK_THROWS_AS(set.add_conversation(std::move(conv)), Error);
}

TEST_CASE("trace set enforces unique identity triples") {
    TraceSet set;
    auto conv_a = fixtures::direct_conversation("a", "case-1", "hi", "hello");
    auto conv_b = fixtures::direct_conversation("b", "case-1", "hi", "hello");
    set.add_conversation(conv_a);
    // Same (permutation, case, run) triple under a different conversation id.
    CHECK_THROWS_AS(set.add_conversation(conv_b), Error);

    for (Trace& t : conv_b) {
        t.run_index = 1;
    }
    CHECK_NOTHROW(set.add_conversation(conv_b));
    CHECK(set.conversation_count() == 2);
    CHECK(set.find("", "case-1", 1) != nullptr);
    CHECK(set.find("", "case-1", 2) == nullptr);
}

TEST_CASE("enum round trips") {
    CHECK(role_from_string(to_string(Role::Tool)) == Role::Tool);
    CHECK(trace_kind_from_string("LLM") == TraceKind::LLM);
    CHECK(unit_from_string("USD") == Unit::USD);
    CHECK_THROWS_AS(role_from_string("robot"), Error);
    CHECK_THROWS_AS(unit_from_string("Parsecs"), Error);
    CHECK_THROWS_AS(trace_kind_from_string("llm"), Error);
}
