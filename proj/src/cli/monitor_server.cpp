// SPDX-License-Identifier: Apache-2.0
#include "agenteval/cli/monitor_server.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdio>
#include <map>
#include <mutex>
#include <thread>
#include <vector>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "agenteval/errors.hpp"
#include "agenteval/metrics/registry.hpp"
#include "agenteval/persist/http_sink.hpp"
#include "agenteval/persist/json_codec.hpp"
#include "agenteval/persist/monitor.hpp"

namespace agenteval {

namespace {

std::int64_t steady_now_ms() {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

}  // namespace

struct MonitorServer::Impl {
    struct Pending {
        std::vector<Trace> traces;
        std::int64_t last_seen_ms = 0;
    };

    explicit Impl(const MonitorConfig& config, std::string webhook)
        : completion_timeout_ms(config.completion_timeout_ms),
          webhook_url(std::move(webhook)) {
        std::vector<std::unique_ptr<Metric>> metrics;
        if (!config.metrics_spec.empty()) {
            metrics = metrics_from_spec(config.metrics_spec);
        }
        monitor = std::make_unique<Monitor>(std::move(metrics),
                                            config.alarm_rules);
        monitor->add_handler([this](const AlarmEvent& event) {
            deliver(event);
        });
    }

    void deliver(const AlarmEvent& event) {
        const std::string body = alarm_event_to_json(event);
        std::fprintf(stderr, "[alarm] %s\n", body.c_str());
        alarms.fetch_add(1, std::memory_order_relaxed);
        if (webhook_url.empty()) {
            return;
        }
        try {
            auto [base, path] = split_http_endpoint(webhook_url);
            httplib::Client client(base);
            client.set_connection_timeout(2, 0);
            client.Post(path, body, "application/json");
        } catch (const std::exception& e) {
            std::fprintf(stderr, "[alarm] webhook delivery failed: %s\n",
                         e.what());
        }
    }

    void ingest(Trace trace) {
        std::lock_guard<std::mutex> lock(mutex);
        Pending& pending = conversations[trace.conversation_id];
        pending.traces.push_back(std::move(trace));
        pending.last_seen_ms = steady_now_ms();
    }

    void reap(bool flush_all) {
        std::vector<std::vector<Trace>> ready;
        {
            std::lock_guard<std::mutex> lock(mutex);
            const std::int64_t now = steady_now_ms();
            for (auto it = conversations.begin(); it != conversations.end();) {
                if (flush_all ||
                    now - it->second.last_seen_ms >= completion_timeout_ms) {
                    ready.push_back(std::move(it->second.traces));
                    it = conversations.erase(it);
                } else {
                    ++it;
                }
            }
        }
        for (std::vector<Trace>& traces : ready) {
            std::sort(traces.begin(), traces.end(),
                      [](const Trace& a, const Trace& b) {
                          return a.seq < b.seq;
                      });
            completed.fetch_add(1, std::memory_order_relaxed);
            monitor->on_conversation_complete(traces);
        }
    }

    std::int64_t completion_timeout_ms;
    std::string webhook_url;
    std::unique_ptr<Monitor> monitor;

    std::mutex mutex;
    std::map<std::string, Pending> conversations;
    std::atomic<std::size_t> completed{0};
    std::atomic<std::size_t> alarms{0};

    httplib::Server server;
    std::thread serve_thread;
    std::thread reaper_thread;
    std::atomic<bool> running{false};
    std::condition_variable reaper_cv;
    std::mutex reaper_mutex;
    int bound_port = 0;
};

MonitorServer::MonitorServer(const MonitorConfig& config,
                             std::string webhook_url)
    : impl_(std::make_unique<Impl>(config, std::move(webhook_url))) {}

MonitorServer::~MonitorServer() {
    stop();
}

int MonitorServer::start(const std::string& host, int port) {
    Impl& impl = *impl_;

    auto handle_post = [this](const httplib::Request& request,
                              httplib::Response& response) {
        try {
            Trace trace =
                trace_from_json(nlohmann::ordered_json::parse(request.body));
            impl_->ingest(std::move(trace));
            response.status = 202;
            response.set_content("{\"accepted\":true}", "application/json");
        } catch (const std::exception& e) {
            response.status = 400;
            response.set_content(std::string("{\"error\":\"") + e.what() +
                                     "\"}",
                                 "application/json");
        }
    };
    impl.server.Post("/traces", handle_post);
    impl.server.Post("/", handle_post);
    impl.server.Get("/stats", [this](const httplib::Request&,
                                     httplib::Response& response) {
        nlohmann::json stats;
        stats["completed_conversations"] = impl_->completed.load();
        stats["alarms_fired"] = impl_->alarms.load();
        response.set_content(stats.dump(), "application/json");
    });

    if (port == 0) {
        impl.bound_port = impl.server.bind_to_any_port(host);
        if (impl.bound_port <= 0) {
            throw Error("cannot bind monitor server to " + host);
        }
    } else {
        if (!impl.server.bind_to_port(host, port)) {
            throw Error("cannot bind monitor server to " + host + ":" +
                        std::to_string(port));
        }
        impl.bound_port = port;
    }

    impl.running = true;
    impl.serve_thread = std::thread([&impl] { impl.server.listen_after_bind(); });
    impl.server.wait_until_ready();
    impl.reaper_thread = std::thread([&impl] {
        std::unique_lock<std::mutex> lock(impl.reaper_mutex);
        while (impl.running) {
            impl.reaper_cv.wait_for(lock, std::chrono::milliseconds(200));
            if (!impl.running) {
                break;
            }
            lock.unlock();
            impl.reap(false);
            lock.lock();
        }
    });
    return impl.bound_port;
}

void MonitorServer::stop() {
    Impl& impl = *impl_;
    if (!impl.running.exchange(false)) {
        return;
    }
    impl.reaper_cv.notify_all();
    impl.server.stop();
    if (impl.serve_thread.joinable()) {
        impl.serve_thread.join();
    }
    if (impl.reaper_thread.joinable()) {
        impl.reaper_thread.join();
    }
    // Evaluate whatever is still pending.
    impl.reap(true);
}

int MonitorServer::port() const {
    return impl_->bound_port;
}

std::size_t MonitorServer::completed_conversations() const {
    return impl_->completed.load();
}

std::size_t MonitorServer::alarms_fired() const {
    return impl_->alarms.load();
}

}  // namespace agenteval
