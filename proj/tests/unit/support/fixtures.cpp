// SPDX-License-Identifier: Apache-2.0
#include "support/fixtures.hpp"

namespace fixtures {

using namespace agenteval;

Message user(const std::string& text) {
    return Message{Role::User, text};
}

Message assistant(const std::string& text) {
    return Message{Role::Assistant, text};
}

Message tool_msg(const std::string& text) {
    return Message{Role::Tool, text};
}

ToolInvocation invocation(const std::string& tool, const std::string& result,
                          std::int64_t latency_ms, bool success) {
    ToolInvocation inv;
    inv.tool_name = tool;
    inv.arguments = {{"arg", "value"}};
    inv.result_text = result;
    inv.latency_ms = latency_ms;
    inv.success = success;
    return inv;
}

namespace {

Trace base_trace(const std::string& conversation_id, std::int64_t seq,
                 const std::string& model_id) {
    Trace t;
    t.conversation_id = conversation_id;
    t.seq = seq;
    t.model_id = model_id;
    t.timestamp_ms = 1720000000000 + seq;
    return t;
}

}  // namespace

Trace llm_trace(const std::string& conversation_id, std::int64_t seq,
                std::vector<Message> snapshot, std::int64_t input_tokens,
                std::int64_t output_tokens, std::int64_t latency_ms,
                const std::string& model_id,
                std::vector<ToolInvocation> invocations) {
    Trace t = base_trace(conversation_id, seq, model_id);
    t.to = TraceKind::LLM;
    t.user_conversation = std::move(snapshot);
    t.input_tokens = input_tokens;
    t.output_tokens = output_tokens;
    t.latency_ms = latency_ms;
    t.tool_invocations = std::move(invocations);
    return t;
}

Trace tool_trace(const std::string& conversation_id, std::int64_t seq,
                 std::vector<Message> snapshot, ToolInvocation inv,
                 std::int64_t latency_ms, const std::string& model_id) {
    Trace t = base_trace(conversation_id, seq, model_id);
    t.to = TraceKind::Tool;
    t.user_conversation = std::move(snapshot);
    t.latency_ms = latency_ms;
    t.tool_invocations = {std::move(inv)};
    return t;
}

std::vector<Trace> direct_conversation(const std::string& conversation_id,
                                       const std::string& case_name,
                                       const std::string& user_text,
                                       const std::string& assistant_text,
                                       std::int64_t input_tokens,
                                       std::int64_t output_tokens,
                                       std::int64_t latency_ms,
                                       const std::string& model_id,
                                       const std::string& permutation_id) {
    Trace t = llm_trace(conversation_id, 0,
                        {user(user_text), assistant(assistant_text)},
                        input_tokens, output_tokens, latency_ms, model_id);
    t.case_name = case_name;
    t.permutation_id = permutation_id;
    return {std::move(t)};
}

std::vector<std::vector<Trace>> oracle_conversations() {
    std::vector<std::vector<Trace>> all;
    const std::string perm_a = "model_id=model-a";
    const std::string perm_b = "model_id=model-b";

    auto stamp = [](std::vector<Trace> traces, const std::string& case_name,
                    const std::string& permutation_id) {
        for (Trace& t : traces) {
            t.case_name = case_name;
            t.permutation_id = permutation_id;
        }
        return traces;
    };

    // c00: plain greeting.
    all.push_back(direct_conversation("c00", "greet", "Hello",
                                      "Hello! How can I help?", 12, 4, 100,
                                      "model-a", perm_a));

    // c01: one weather round-trip; final trace aggregates the invocation.
    {
        ToolInvocation weather = invocation("get_weather", "22C", 20);
        std::vector<Message> mid = {user("What is the weather?"),
                                    tool_msg("22C")};
        std::vector<Message> full = {user("What is the weather?"),
                                     tool_msg("22C"),
                                     assistant("It is 22C.")};
        std::vector<Trace> conv;
        conv.push_back(llm_trace("c01", 0, {user("What is the weather?")}, 30,
                                 0, 50, "model-a", {invocation("get_weather", "", 0)}));
        conv.push_back(tool_trace("c01", 1, mid, weather, 20, "model-a"));
        conv.push_back(
            llm_trace("c01", 2, full, 45, 6, 70, "model-a", {weather}));
        all.push_back(stamp(std::move(conv), "Tool use: get_weather", perm_a));
    }

    // c02: two indicator hits in one sentence.
    all.push_back(direct_conversation(
        "c02", "apologize", "Open the sunroof",
        "I'm sorry, unfortunately that is not possible.", 9, 8, 10, "model-a",
        perm_a));

    // c03: two direct turns.
    {
        std::vector<Trace> conv;
        conv.push_back(llm_trace("c03", 0,
                                 {user("Book a table"), assistant("Sure.")},
                                 20, 5, 30, "model-a"));
        conv.push_back(llm_trace(
            "c03", 1,
            {user("Book a table"), assistant("Sure."), user("For tonight"),
             assistant("Done, I booked it.")},
            28, 7, 40, "model-a"));
        all.push_back(stamp(std::move(conv), "booking", perm_a));
    }

    // c04: curly apostrophes (U+2019), two indicators.
    all.push_back(direct_conversation(
        "c04", "unicode-apology", "Fly me to the moon",
        "I\xE2\x80\x99m afraid I can\xE2\x80\x99t do that. I apologize.", 14,
        9, 25, "model-a", perm_a));

    // c05: ends on a tool trace (failed conversation shape).
    {
        ToolInvocation failed =
            invocation("phone_call", "ERROR: no signal", 5, false);
        std::vector<Trace> conv;
        conv.push_back(llm_trace("c05", 0, {user("Call home")}, 22, 0, 15,
                                 "model-a",
                                 {invocation("phone_call", "", 0)}));
        Trace t = tool_trace("c05", 1,
                             {user("Call home"), tool_msg("ERROR: no signal")},
                             failed, 5, "model-a");
        t.extras["error"] = "hop limit of 1 reached without a final reply";
        conv.push_back(std::move(t));
        all.push_back(stamp(std::move(conv), "call-home", perm_a));
    }

    // c06: plain greeting on the other model.
    all.push_back(direct_conversation("c06", "greet", "Hello", "Hi there.", 40,
                                      12, 200, "model-b", perm_b));

    // c07: navigation round-trip with one indicator in the final text.
    {
        ToolInvocation nav = invocation("navigation", "route set", 35);
        std::vector<Trace> conv;
        conv.push_back(llm_trace("c07", 0, {user("Take me to Berlin")}, 33, 0,
                                 60, "model-b",
                                 {invocation("navigation", "", 0)}));
        conv.push_back(tool_trace(
            "c07", 1, {user("Take me to Berlin"), tool_msg("route set")}, nav,
            35, "model-b"));
        conv.push_back(llm_trace(
            "c07", 2,
            {user("Take me to Berlin"), tool_msg("route set"),
             assistant("Navigation started. Unfortunately traffic is heavy.")},
            50, 9, 90, "model-b", {nav}));
        all.push_back(stamp(std::move(conv), "Tool use: navigation", perm_b));
    }

    // c08: two turns, each apologizing once.
    {
        std::vector<Trace> conv;
        conv.push_back(llm_trace(
            "c08", 0, {user("Sing a song"), assistant("I apologize, I cannot.")},
            18, 6, 12, "model-b"));
        conv.push_back(llm_trace(
            "c08", 1,
            {user("Sing a song"), assistant("I apologize, I cannot."),
             user("Please"), assistant("Again, I apologize.")},
            26, 8, 18, "model-b"));
        all.push_back(stamp(std::move(conv), "sing", perm_b));
    }

    // c09: two different tools in one step; wrong tool for the case.
    {
        ToolInvocation weather = invocation("get_weather", "20C", 10);
        ToolInvocation nav = invocation("navigation", "ok", 12);
        std::vector<Message> opening = {user("Weather and route please")};
        std::vector<Trace> conv;
        conv.push_back(llm_trace("c09", 0, opening, 60, 0, 40, "model-b",
                                 {invocation("get_weather", "", 0),
                                  invocation("navigation", "", 0)}));
        conv.push_back(tool_trace("c09", 1,
                                  {user("Weather and route please"),
                                   tool_msg("20C")},
                                  weather, 10, "model-b"));
        conv.push_back(tool_trace("c09", 2,
                                  {user("Weather and route please"),
                                   tool_msg("20C"), tool_msg("ok")},
                                  nav, 12, "model-b"));
        conv.push_back(llm_trace("c09", 3,
                                 {user("Weather and route please"),
                                  tool_msg("20C"), tool_msg("ok"),
                                  assistant("Done. 20C and route set.")},
                                 70, 11, 55, "model-b", {weather, nav}));
        all.push_back(stamp(std::move(conv), "Tool use: get_weather", perm_b));
    }

    // c10: terse exchange.
    all.push_back(direct_conversation("c10", "ack", "Stop", "Ok.", 5, 1, 1,
                                      "model-b", perm_b));

    // c11: three indicator hits.
    all.push_back(direct_conversation(
        "c11", "fail-twice", "Park the car",
        "Unfortunately, I am sorry to say, unfortunately it failed.", 16, 10,
        33, "model-b", perm_b));

    return all;
}

TraceSet oracle_trace_set() {
    TraceSet set;
    std::int64_t run = 0;
    for (std::vector<Trace>& conv : oracle_conversations()) {
        for (Trace& t : conv) {
            t.run_index = run;
        }
        ++run;
        set.add_conversation(std::move(conv));
    }
    return set;
}

AgentFactory ScriptedAgent::factory() const {
    return make_agent_factory(config, *provider, tools);
}

ScriptedAgent weather_agent(std::int64_t max_hops) {
    ScriptedAgent agent;
    agent.config.system_prompt = "You are a helpful assistant.";
    agent.config.model_id = "model-a";
    agent.config.temperature = 0.0;
    agent.config.max_hops = max_hops;

    ToolSpec weather;
    weather.name = "get_weather";
    weather.description = "Get the current weather for a city";
    weather.parameters = {{"city", "string", "City name", true}};
    agent.config.tools.push_back(weather);

    ToolSpec phone;
    phone.name = "phone_call";
    phone.description = "Place a phone call";
    phone.parameters = {{"contact", "string", "Contact name", true}};
    agent.config.tools.push_back(phone);

    agent.tools.emplace("get_weather", [](const auto&) {
        return std::string("22C, sunny");
    });
    agent.tools.emplace("phone_call", [](const auto&) {
        return std::string("calling");
    });

    std::vector<ScriptedRule> rules;
    {
        ScriptedRule rule;
        rule.match = MatchKind::Substring;
        rule.pattern = "22C, sunny";
        rule.reply_text = "It is 22C and sunny.";
        rules.push_back(rule);
    }
    {
        ScriptedRule rule;
        rule.match = MatchKind::Exact;
        rule.pattern = "What is the weather?";
        rule.tool_calls = {
            ToolCallRequest{"get_weather", {{"city", "Berlin"}}}};
        rules.push_back(rule);
    }
    {
        ScriptedRule rule;
        rule.match = MatchKind::Exact;
        rule.pattern = "Call John Doe";
        rule.reply_text = "Ok, calling.";
        rules.push_back(rule);
    }
    {
        // Endless tool requests: "loop" and every phone result re-trigger.
        ScriptedRule rule;
        rule.match = MatchKind::Substring;
        rule.pattern = "loop";
        rule.tool_calls = {
            ToolCallRequest{"phone_call", {{"contact", "Nobody"}}}};
        rules.push_back(rule);
    }
    {
        ScriptedRule rule;
        rule.match = MatchKind::Substring;
        rule.pattern = "calling";
        rule.tool_calls = {
            ToolCallRequest{"phone_call", {{"contact", "Nobody"}}}};
        rules.push_back(rule);
    }
    {
        ScriptedRule rule;
        rule.match = MatchKind::Exact;
        rule.pattern = "Hello";
        rule.reply_text = "Hi!";
        rules.push_back(rule);
    }
    agent.provider = std::make_shared<ScriptedProvider>(std::move(rules));
    return agent;
}

}  // namespace fixtures
