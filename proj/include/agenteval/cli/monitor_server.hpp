// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "agenteval/cli/config.hpp"

namespace agenteval {

// HTTP front end for the runtime monitor. Accepts trace POSTs in the trace
// wire format on /traces (and /), groups them by conversation_id, and
// treats a conversation as complete after completion_timeout_ms without new
// traces. Completed conversations feed the monitor; alarms go to the log
// and, when configured, a webhook. GET /stats reports counters.
class MonitorServer {
public:
    MonitorServer(const MonitorConfig& config, std::string webhook_url = {});
    ~MonitorServer();

    MonitorServer(const MonitorServer&) = delete;
    MonitorServer& operator=(const MonitorServer&) = delete;

    // Binds and serves in background threads. port 0 picks a free port.
    // Returns the bound port, or throws Error when the address is unusable.
    int start(const std::string& host, int port);

    void stop();

    int port() const;
    std::size_t completed_conversations() const;
    std::size_t alarms_fired() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace agenteval
