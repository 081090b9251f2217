// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <random>
#include <thread>

#include "agenteval/errors.hpp"
#include "agenteval/persist/json_codec.hpp"
#include "agenteval/persist/jsonl.hpp"
#include "support/fixtures.hpp"

using namespace agenteval;

namespace {

void write_lines(const std::string& path, const std::vector<std::string>& lines) {
    std::ofstream out(path);
    for (const std::string& line : lines) {
        out << line << '\n';
    }
}

}  // namespace

TEST_CASE("trace json codec round-trips every field") {
    auto conversations = fixtures::oracle_conversations();
    for (const auto& conv : conversations) {
        for (const Trace& t : conv) {
            Trace back = trace_from_json(trace_to_json(t));
            CHECK(back == t);
        }
    }
}

TEST_CASE("unknown trace fields are preserved in extras") {
    Trace t = fixtures::direct_conversation("c", "k", "q", "a")[0];
    auto obj = trace_to_json(t);
    obj["custom_field"] = "hello";
    obj["numeric_field"] = 42;
    Trace back = trace_from_json(obj);
    CHECK(back.extras.at("custom_field") == "hello");
    CHECK(back.extras.at("numeric_field") == "42");
}

TEST_CASE("jsonl sink/store round-trips a multi-conversation set") {
    const std::string path = "agenteval_test_roundtrip.jsonl";
    TraceSet original = fixtures::oracle_trace_set();
    {
        JsonlSink sink(path);
        for (const std::string& id : original.conversation_ids()) {
            for (const Trace& t : original.conversation(id)) {
                sink.append(t);
            }
        }
        sink.flush();
    }

    TraceSet loaded = load_trace_set(path);
    REQUIRE(loaded.conversation_count() == original.conversation_count());
    for (const std::string& id : original.conversation_ids()) {
        CHECK(loaded.conversation(id) == original.conversation(id));
    }
    std::remove(path.c_str());
}

TEST_CASE("interleaved and shuffled lines are regrouped by (id, seq)") {
    const std::string path = "agenteval_test_shuffled.jsonl";
    TraceSet original = fixtures::oracle_trace_set();

    std::vector<std::string> lines;
    for (const std::string& id : original.conversation_ids()) {
        for (const Trace& t : original.conversation(id)) {
            lines.push_back(trace_to_json(t).dump());
        }
    }
    std::mt19937 rng(123);
    std::shuffle(lines.begin(), lines.end(), rng);
    write_lines(path, lines);

    TraceSet loaded = load_trace_set(path);
    REQUIRE(loaded.conversation_count() == original.conversation_count());
    for (const std::string& id : original.conversation_ids()) {
        const auto& conv = loaded.conversation(id);
        for (std::size_t i = 0; i < conv.size(); ++i) {
            CHECK(conv[i].seq == static_cast<std::int64_t>(i));
        }
        CHECK(conv == original.conversation(id));
    }
    std::remove(path.c_str());
}

TEST_CASE("a truncated final line names the line number") {
    const std::string path = "agenteval_test_truncated.jsonl";
    TraceSet original = fixtures::oracle_trace_set();
    const Trace& t = original.conversation(original.conversation_ids()[0])[0];
    std::string good = trace_to_json(t).dump();
    write_lines(path, {good, good.substr(0, good.size() / 2)});
    // The second line duplicates seq 0 anyway, but the parse error fires
    // first and carries the position.
    try {
        load_trace_set(path);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
    std::remove(path.c_str());
}

TEST_CASE("concurrent appends keep per-conversation order") {
    const std::string path = "agenteval_test_concurrent.jsonl";
    {
        JsonlSink sink(path);
        std::vector<std::thread> writers;
        for (int w = 0; w < 8; ++w) {
            writers.emplace_back([&sink, w] {
                const std::string id = "conv-" + std::to_string(w);
                for (int i = 0; i < 50; ++i) {
                    Trace t = fixtures::llm_trace(
                        id, i, {fixtures::user("m" + std::to_string(i))}, 1, 1,
                        0);
                    t.case_name = "case";
                    t.run_index = w;
                    sink.append(t);
                }
            });
        }
        for (std::thread& t : writers) {
            t.join();
        }
        sink.flush();
    }

    TraceSet loaded = load_trace_set(path);
    CHECK(loaded.conversation_count() == 8);
    CHECK(loaded.trace_count() == 400);
    for (const std::string& id : loaded.conversation_ids()) {
        const auto& conv = loaded.conversation(id);
        REQUIRE(conv.size() == 50);
        for (std::size_t i = 0; i < conv.size(); ++i) {
            CHECK(conv[i].seq == static_cast<std::int64_t>(i));
        }
    }
    std::remove(path.c_str());
}

TEST_CASE("measurement jsonl round-trips") {
    const std::string path = "agenteval_test_measurements.jsonl";
    MeasurementSet set;
    Measurement m;
    m.name = "Hops";
    m.value = 2;
    m.unit = Unit::Count;
    m.conversation_id = "c1";
    m.case_name = "k";
    m.permutation_id = "model_id=m";
    m.run_index = 1;
    m.additional_info["note"] = "x";
    set.add(m);
    Measurement f;
    f.name = "Cost";
    f.value = 0.010500000000000001;
    f.unit = Unit::USD;
    f.conversation_id = "c2";
    set.add(f);

    save_measurements(set, path);
    MeasurementSet loaded = load_measurements(path);
    REQUIRE(loaded.size() == 2);
    CHECK(loaded.measurements()[0] == set.measurements()[0]);
    // Full double precision survives the round trip.
    CHECK(loaded.measurements()[1].value == f.value);
    std::remove(path.c_str());
}
