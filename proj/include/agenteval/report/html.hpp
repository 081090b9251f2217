// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>
#include <vector>

#include "agenteval/eval/measurements.hpp"
#include "agenteval/eval/trace_set.hpp"

namespace agenteval {

// Metric names whose 0/1 values define the pass/fail badge. With no
// explicit list, boolean metrics are inferred: Count-unit metrics whose
// every value across the set is 0 or 1.
std::vector<std::string> boolean_metric_names(
    const MeasurementSet& measurements);

// conversation_id -> passed. A conversation fails on any 0-valued badge
// metric or any error measurement (name ending in ".error" or an "error"
// key in additional_info).
std::map<std::string, bool> conversation_badges(
    const TraceSet& traces, const MeasurementSet& measurements,
    const std::vector<std::string>& badge_metrics);

// Self-contained report: inline style and script only, no external
// resource references; an overview grid of cases x permutations with
// badges, and one detail section per conversation with every trace and
// measurement.
std::string render_html_report(const TraceSet& traces,
                               const MeasurementSet& measurements,
                               const std::vector<std::string>& badge_metrics = {});

std::string html_escape(const std::string& text);

}  // namespace agenteval
