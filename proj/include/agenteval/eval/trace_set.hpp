// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "agenteval/core/types.hpp"

namespace agenteval {

// Conversations keyed by conversation_id, each ordered by seq, indexed by
// (permutation_id, case_name, run_index). Conversation order is insertion
// order.
class TraceSet {
public:
    using Key = std::tuple<std::string, std::string, std::int64_t>;

    // Validates the conversation (gapless seq from 0, per-kind constraints)
    // and the uniqueness of its (permutation_id, case_name, run_index).
    void add_conversation(std::vector<Trace> traces);

    std::size_t conversation_count() const { return order_.size(); }
    std::size_t trace_count() const;

    const std::vector<std::string>& conversation_ids() const { return order_; }
    const std::vector<Trace>& conversation(const std::string& id) const;

    // Null if the triple is absent.
    const std::vector<Trace>* find(const std::string& permutation_id,
                                   const std::string& case_name,
                                   std::int64_t run_index) const;

private:
    std::vector<std::string> order_;
    std::map<std::string, std::vector<Trace>> conversations_;
    std::map<Key, std::string> index_;
};

}  // namespace agenteval
