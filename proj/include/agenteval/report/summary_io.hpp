// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "agenteval/eval/measurements.hpp"

namespace agenteval {

// Fixed-width ASCII table: permutation | metric | mean | count | min | max
// | unit. Means are printed with 4 decimal places; output is byte-stable
// for identical input.
std::string render_summary_table(const SummaryTable& table);

// Lossless exports (full double precision).
std::string render_summary_csv(const SummaryTable& table);
std::string render_summary_json(const SummaryTable& table);

}  // namespace agenteval
