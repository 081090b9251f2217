// SPDX-License-Identifier: Apache-2.0
#include "agenteval/eval/trace_set.hpp"

#include "agenteval/errors.hpp"

namespace agenteval {

void TraceSet::add_conversation(std::vector<Trace> traces) {
    validate_conversation(traces);
    const Trace& head = traces.front();
    const std::string& id = head.conversation_id;
    if (conversations_.count(id) != 0) {
        throw Error("duplicate conversation id '" + id + "'");
    }
    Key key{head.permutation_id, head.case_name, head.run_index};
    if (index_.count(key) != 0) {
        throw Error("duplicate (permutation, case, run) triple for case '" +
                    head.case_name + "' run " + std::to_string(head.run_index));
    }
    index_.emplace(std::move(key), id);
    order_.push_back(id);
    conversations_.emplace(id, std::move(traces));
}

std::size_t TraceSet::trace_count() const {
    std::size_t n = 0;
    for (const auto& [id, traces] : conversations_) {
        (void)id;
        n += traces.size();
    }
    return n;
}

const std::vector<Trace>& TraceSet::conversation(const std::string& id) const {
    auto it = conversations_.find(id);
    if (it == conversations_.end()) {
        throw Error("unknown conversation id '" + id + "'");
    }
    return it->second;
}

const std::vector<Trace>* TraceSet::find(const std::string& permutation_id,
                                         const std::string& case_name,
                                         std::int64_t run_index) const {
    auto it = index_.find(Key{permutation_id, case_name, run_index});
    if (it == index_.end()) {
        return nullptr;
    }
    return &conversations_.at(it->second);
}

}  // namespace agenteval
