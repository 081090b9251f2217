// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "agenteval/report/html.hpp"
#include "support/fixtures.hpp"

using namespace agenteval;

namespace {

std::size_t count_occurrences(const std::string& haystack,
                              const std::string& needle) {
    std::size_t count = 0;
    std::size_t pos = haystack.find(needle);
    while (pos != std::string::npos) {
        ++count;
        pos = haystack.find(needle, pos + needle.size());
    }
    return count;
}

struct ReportFixture {
    TraceSet traces;
    MeasurementSet measurements;
};

// Two conversations: one passing, one with a 0-valued boolean metric.
ReportFixture two_conversation_fixture() {
    ReportFixture fixture;
    fixture.traces.add_conversation(
        fixtures::direct_conversation("good", "case-a", "hi", "hello"));
    fixture.traces.add_conversation(
        fixtures::direct_conversation("bad", "case-b", "hi", "hmpf"));

    auto boolean = [](const std::string& conv, double value) {
        Measurement m;
        m.name = "AgentInvokesCorrectTool";
        m.unit = Unit::Count;
        m.value = value;
        m.conversation_id = conv;
        m.case_name = conv == "good" ? "case-a" : "case-b";
        return m;
    };
    fixture.measurements.add(boolean("good", 1));
    fixture.measurements.add(boolean("bad", 0));

    Measurement hops;
    hops.name = "Hops";
    hops.unit = Unit::Count;
    hops.value = 3;  // not 0/1-valued: must not affect badges
    hops.conversation_id = "bad";
    hops.case_name = "case-b";
    fixture.measurements.add(hops);
    return fixture;
}

}  // namespace

TEST_CASE("boolean metric inference: Count metrics with only 0/1 values") {
    ReportFixture fixture = two_conversation_fixture();
    auto names = boolean_metric_names(fixture.measurements);
    REQUIRE(names.size() == 1);
    CHECK(names[0] == "AgentInvokesCorrectTool");
}

TEST_CASE("badges fail on a zero boolean metric or an error measurement") {
    ReportFixture fixture = two_conversation_fixture();
    auto badges =
        conversation_badges(fixture.traces, fixture.measurements, {});
    CHECK(badges.at("good"));
    CHECK_FALSE(badges.at("bad"));

    Measurement err;
    err.name = "Cost.error";
    err.unit = Unit::Dimensionless;
    err.additional_info["error"] = "missing model";
    err.conversation_id = "good";
    fixture.measurements.add(err);
    auto with_error =
        conversation_badges(fixture.traces, fixture.measurements, {});
    CHECK_FALSE(with_error.at("good"));
}

TEST_CASE("explicit badge metric lists override inference") {
    ReportFixture fixture = two_conversation_fixture();
    // Only Hops counts, and it is never 0, so both conversations pass.
    auto badges = conversation_badges(fixture.traces, fixture.measurements,
                                      {"Hops"});
    CHECK(badges.at("good"));
    CHECK(badges.at("bad"));
}

TEST_CASE("report structure: one FAIL badge, one section per conversation") {
    ReportFixture fixture = two_conversation_fixture();
    const std::string html =
        render_html_report(fixture.traces, fixture.measurements);

    // Overview + detail heading for the failing conversation.
    CHECK(count_occurrences(html, "class=\"badge fail\"") == 2);
    CHECK(count_occurrences(html, "<section class=\"conversation\"") == 2);
    CHECK(html.find("case-a") != std::string::npos);
    CHECK(html.find("AgentInvokesCorrectTool") != std::string::npos);
}

TEST_CASE("report is self-contained: no external references") {
    TraceSet traces = fixtures::oracle_trace_set();
    MeasurementSet measurements;
    const std::string html = render_html_report(traces, measurements);

    CHECK(html.find("src=\"http") == std::string::npos);
    CHECK(html.find("href=\"http") == std::string::npos);
    CHECK(html.find("src='http") == std::string::npos);
    CHECK(html.find("href='http") == std::string::npos);
    CHECK(count_occurrences(html, "<section class=\"conversation\"") == 12);
}

TEST_CASE("html escaping") {
    CHECK(html_escape("<tool> & \"args\"") ==
          "&lt;tool&gt; &amp; &quot;args&quot;");
    // Message text flows through escaped.
    TraceSet traces;
    traces.add_conversation(fixtures::direct_conversation(
        "c", "case", "<script>alert(1)</script>", "ok"));
    const std::string html = render_html_report(traces, MeasurementSet{});
    CHECK(html.find("<script>alert(1)</script>") == std::string::npos);
    CHECK(html.find("&lt;script&gt;") != std::string::npos);
}
