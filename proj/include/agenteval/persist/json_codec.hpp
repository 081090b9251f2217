// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <nlohmann/json.hpp>

#include "agenteval/core/types.hpp"

namespace agenteval {

// Trace wire schema (one JSON object per trace):
//   version:"1", conversation_id, case_name, permutation_id, run_index, seq,
//   to:"LLM"|"Tool", timestamp_ms, latency_ms, input_tokens, output_tokens,
//   model_id, messages:[{role,text}],
//   tool_invocations:[{tool_name, arguments, result_text, latency_ms,
//   success}], extras:{string:string}
// Unknown fields are preserved in extras on parse.
nlohmann::ordered_json trace_to_json(const Trace& trace);
Trace trace_from_json(const nlohmann::ordered_json& obj);

nlohmann::ordered_json measurement_to_json(const Measurement& m);
Measurement measurement_from_json(const nlohmann::ordered_json& obj);

inline constexpr const char* kTraceSchemaVersion = "1";

}  // namespace agenteval
