// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <atomic>
#include <thread>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "agenteval/cli/config.hpp"
#include "agenteval/cli/monitor_server.hpp"
#include "agenteval/errors.hpp"
#include "agenteval/persist/http_sink.hpp"
#include "agenteval/persist/json_codec.hpp"
#include "agenteval/runtime/http_provider.hpp"
#include "support/fixtures.hpp"

using namespace agenteval;

namespace {

// Local HTTP endpoint that can fail the first N requests.
class FlakyEndpoint {
public:
    explicit FlakyEndpoint(int failures_before_success)
        : failures_(failures_before_success) {
        server_.Post("/traces", [this](const httplib::Request& request,
                                       httplib::Response& response) {
            const int seen = requests_.fetch_add(1) + 1;
            if (seen <= failures_) {
                response.status = 500;
                return;
            }
            bodies_.push_back(request.body);
            response.status = 200;
        });
        port_ = server_.bind_to_any_port("127.0.0.1");
        thread_ = std::thread([this] { server_.listen_after_bind(); });
        server_.wait_until_ready();
    }

    ~FlakyEndpoint() {
        server_.stop();
        thread_.join();
    }

    int port() const { return port_; }
    int requests() const { return requests_.load(); }
    const std::vector<std::string>& bodies() const { return bodies_; }

private:
    int failures_;
    std::atomic<int> requests_{0};
    std::vector<std::string> bodies_;
    httplib::Server server_;
    std::thread thread_;
    int port_ = 0;
};

}  // namespace

TEST_CASE("endpoint splitting") {
    auto [base, path] = split_http_endpoint("http://127.0.0.1:8080/traces");
    CHECK(base == "http://127.0.0.1:8080");
    CHECK(path == "/traces");
    auto [base2, path2] = split_http_endpoint("http://example.test:9");
    CHECK(base2 == "http://example.test:9");
    CHECK(path2 == "/");
    CHECK_THROWS_AS(split_http_endpoint("ftp://nope"), Error);
}

TEST_CASE("http sink delivers each trace with one POST") {
    FlakyEndpoint endpoint(0);
    HttpSink sink("http://127.0.0.1:" + std::to_string(endpoint.port()) +
                  "/traces");
    sink.set_backoff_base_ms(1);

    auto conv = fixtures::direct_conversation("c", "k", "q", "a");
    sink.append(conv[0]);
    CHECK(endpoint.requests() == 1);
    REQUIRE(endpoint.bodies().size() == 1);
    Trace delivered =
        trace_from_json(nlohmann::ordered_json::parse(endpoint.bodies()[0]));
    CHECK(delivered == conv[0]);
}

TEST_CASE("http sink retries twice-failing endpoints and then succeeds") {
    FlakyEndpoint endpoint(2);
    HttpSink sink("http://127.0.0.1:" + std::to_string(endpoint.port()) +
                  "/traces");
    sink.set_backoff_base_ms(1);
    std::vector<std::string> warnings;
    sink.set_warn_handler([&](const std::string& w) { warnings.push_back(w); });

    auto conv = fixtures::direct_conversation("c", "k", "q", "a");
    sink.append(conv[0]);
    CHECK(endpoint.requests() == 3);
    CHECK(endpoint.bodies().size() == 1);
    CHECK(warnings.empty());
}

TEST_CASE("http sink drops after 4 attempts with a warning, never throws") {
    FlakyEndpoint endpoint(1000);
    HttpSink sink("http://127.0.0.1:" + std::to_string(endpoint.port()) +
                  "/traces");
    sink.set_backoff_base_ms(1);
    std::vector<std::string> warnings;
    sink.set_warn_handler([&](const std::string& w) { warnings.push_back(w); });

    auto conv = fixtures::direct_conversation("c", "k", "q", "a");
    CHECK_NOTHROW(sink.append(conv[0]));
    CHECK(endpoint.requests() == 4);
    REQUIRE(warnings.size() == 1);
    CHECK(warnings[0].find("dropping trace") != std::string::npos);
}

TEST_CASE("http provider round-trips the chat-completion wire format") {
    httplib::Server server;
    nlohmann::json seen_request;
    server.Post("/v1/chat", [&](const httplib::Request& request,
                                httplib::Response& response) {
        seen_request = nlohmann::json::parse(request.body);
        nlohmann::json reply;
        reply["text"] = "All done.";
        reply["usage"] = {{"input_tokens", 42}, {"output_tokens", 7}};
        response.set_content(reply.dump(), "application/json");
    });
    int port = server.bind_to_any_port("127.0.0.1");
    std::thread thread([&] { server.listen_after_bind(); });
    server.wait_until_ready();

    HttpProviderConfig config;
    config.endpoint = "http://127.0.0.1:" + std::to_string(port) + "/v1/chat";
    HttpProvider provider(config);

    std::vector<Message> messages{fixtures::user("hello")};
    ToolSpec weather;
    weather.name = "get_weather";
    weather.description = "Weather lookup";
    weather.parameters = {{"city", "string", "City", true}};

    ModelReply reply =
        provider.converse("be nice", messages, "model-x", 0.25, {weather});
    CHECK(reply.text == "All done.");
    CHECK(reply.input_tokens == 42);
    CHECK(reply.output_tokens == 7);

    CHECK(seen_request["model"] == "model-x");
    CHECK(seen_request["system"] == "be nice");
    CHECK(seen_request["temperature"] == 0.25);
    REQUIRE(seen_request["messages"].size() == 1);
    CHECK(seen_request["messages"][0]["role"] == "user");
    CHECK(seen_request["tools"][0]["name"] == "get_weather");
    CHECK(seen_request["tools"][0]["parameters"]["city"]["required"] == true);

    server.stop();
    thread.join();
}

TEST_CASE("monitor server completes conversations after the idle timeout") {
    MonitorConfig config;
    config.completion_timeout_ms = 300;
    AlarmRule rule;
    rule.metric = "AgentDoesntInvokeAnyTool";
    rule.aggregation = Aggregation::Sum;
    rule.comparator = AlarmComparator::GreaterOrEqual;
    rule.threshold = 3;
    rule.window = 10;
    config.alarm_rules = {rule};
    config.metrics_spec = "no-tool";

    FlakyEndpoint webhook(0);
    MonitorServer server(config, "http://127.0.0.1:" +
                                     std::to_string(webhook.port()) +
                                     "/traces");
    const int port = server.start("127.0.0.1", 0);
    httplib::Client client("127.0.0.1", port);

    // A malformed POST gets a 400 and does not disturb the server.
    auto bad = client.Post("/traces", "{not json", "application/json");
    REQUIRE(bad);
    CHECK(bad->status == 400);

    // Ten single-trace conversations without tool use trip the sum>=3 rule
    // exactly once.
    for (int i = 0; i < 10; ++i) {
        auto conv = fixtures::direct_conversation("mon-" + std::to_string(i),
                                                  "case", "q", "a");
        auto posted = client.Post("/traces", trace_to_json(conv[0]).dump(),
                                  "application/json");
        REQUIRE(posted);
        CHECK(posted->status == 202);
    }

    // Wait for the reaper to time the conversations out.
    for (int waited = 0;
         waited < 5000 && server.completed_conversations() < 10; waited += 50) {
        std::this_thread::sleep_for(std::chrono::milliseconds(50));
    }
    CHECK(server.completed_conversations() == 10);
    CHECK(server.alarms_fired() == 1);
    CHECK(webhook.bodies().size() == 1);

    // Each conversation was evaluated exactly once.
    auto stats = client.Get("/stats");
    REQUIRE(stats);
    auto parsed = nlohmann::json::parse(stats->body);
    CHECK(parsed["completed_conversations"] == 10);

    server.stop();
}
