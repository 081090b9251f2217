// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <string>

#include "agenteval/persist/sink.hpp"

namespace agenteval {

// POSTs each trace as JSON to an endpoint. Transport failures are retried
// up to 3 times with exponential backoff (base 200 ms); after the final
// failure the trace is dropped with a warning. Never throws into the agent
// path: monitoring must not block or break conversations.
class HttpSink : public TraceSink {
public:
    // endpoint: "http://host:port/path". Optional auth header.
    explicit HttpSink(std::string endpoint, std::string auth_header_name = {},
                      std::string auth_header_value = {});

    void append(const Trace& trace) override;

    // Backoff override for tests (milliseconds; default 200).
    void set_backoff_base_ms(int ms) { backoff_base_ms_ = ms; }
    void set_warn_handler(std::function<void(const std::string&)> warn) {
        warn_ = std::move(warn);
    }

private:
    std::string base_url_;
    std::string path_;
    std::string auth_header_name_;
    std::string auth_header_value_;
    int backoff_base_ms_ = 200;
    std::function<void(const std::string&)> warn_;
};

// Splits "http://host:port/path" into base url and path ("/" when absent).
// Throws Error on anything that does not look like an http url.
std::pair<std::string, std::string> split_http_endpoint(
    const std::string& endpoint);

}  // namespace agenteval
