// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "agenteval/core/types.hpp"

namespace agenteval {

// Maps one conversation's ordered traces to zero or more measurements.
// Implementations must be stateless with respect to evaluate_conversation:
// the engine may call it concurrently for different conversations.
//
// Returned measurements need only name/value/unit/additional_info; the
// engine stamps conversation/case/permutation/run identity.
class Metric {
public:
    virtual ~Metric() = default;

    virtual std::string name() const = 0;

    virtual std::vector<Measurement> evaluate_conversation(
        const std::vector<Trace>& conversation) const = 0;
};

}  // namespace agenteval
