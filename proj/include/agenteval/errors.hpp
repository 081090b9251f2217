// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace agenteval {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A parameter grid violated its invariants (empty candidate list,
// overlapping fixed/permuted keys).
struct InvalidGridError : Error {
    using Error::Error;
};

// A model provider failed to produce a reply. retriable distinguishes
// transient transport problems from permanent ones (no matching rule,
// malformed reply).
struct ProviderError : Error {
    ProviderError(const std::string& what, bool retriable_flag)
        : Error(what), retriable(retriable_flag) {}
    bool retriable = false;
};

// The model requested a tool that is not registered with the agent.
struct ToolResolutionError : Error {
    using Error::Error;
};

// A file (cases, traces, measurements, rules, config) failed to parse.
// line is 1-based; 0 means not line-oriented. context names the offending
// field or case where known.
struct ParseError : Error {
    ParseError(const std::string& what, std::size_t line_no = 0,
               std::string field_context = {})
        : Error(what), line(line_no), context(std::move(field_context)) {}
    std::size_t line = 0;
    std::string context;
};

// Case construction violated an invariant (empty name, empty user input,
// zero turns).
struct BuildError : Error {
    using Error::Error;
};

}  // namespace agenteval
