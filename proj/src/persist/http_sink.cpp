// SPDX-License-Identifier: Apache-2.0
#include "agenteval/persist/http_sink.hpp"

#include <chrono>
#include <cstdio>
#include <thread>

#include <httplib.h>

#include "agenteval/errors.hpp"
#include "agenteval/persist/json_codec.hpp"

namespace agenteval {

std::pair<std::string, std::string> split_http_endpoint(
    const std::string& endpoint) {
    const std::string scheme = "http://";
    if (endpoint.rfind(scheme, 0) != 0) {
        throw Error("endpoint must start with http:// : '" + endpoint + "'");
    }
    std::size_t path_start = endpoint.find('/', scheme.size());
    if (path_start == std::string::npos) {
        return {endpoint, "/"};
    }
    return {endpoint.substr(0, path_start), endpoint.substr(path_start)};
}

HttpSink::HttpSink(std::string endpoint, std::string auth_header_name,
                   std::string auth_header_value)
    : auth_header_name_(std::move(auth_header_name)),
      auth_header_value_(std::move(auth_header_value)) {
    auto [base, path] = split_http_endpoint(endpoint);
    base_url_ = std::move(base);
    path_ = std::move(path);
    warn_ = [](const std::string& message) {
        std::fprintf(stderr, "[http_sink] %s\n", message.c_str());
    };
}

void HttpSink::append(const Trace& trace) {
    const std::string body = trace_to_json(trace).dump();

    // 1 attempt + up to 3 retries.
    for (int attempt = 0; attempt < 4; ++attempt) {
        if (attempt > 0) {
            std::this_thread::sleep_for(std::chrono::milliseconds(
                backoff_base_ms_ * (1 << (attempt - 1))));
        }
        httplib::Client client(base_url_);
        client.set_connection_timeout(2, 0);
        httplib::Headers headers;
        if (!auth_header_name_.empty()) {
            headers.emplace(auth_header_name_, auth_header_value_);
        }
        auto result = client.Post(path_, headers, body, "application/json");
        if (result && result->status >= 200 && result->status < 300) {
            return;
        }
    }
    warn_("dropping trace " + trace.conversation_id + "/" +
          std::to_string(trace.seq) + " after 4 failed deliveries to " +
          base_url_ + path_);
}

}  // namespace agenteval
