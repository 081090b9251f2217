// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "agenteval/eval/measurements.hpp"

namespace agenteval {

enum class RuleScope { Overall, PerPermutation };
enum class Comparator { GreaterOrEqual, LessOrEqual };

const char* to_string(RuleScope scope);
const char* to_string(Comparator cmp);

// A CI gate: compare a metric's summary mean against a threshold,
// inclusively, either over all permutations (count-weighted) or for every
// permutation separately.
struct AssertionRule {
    std::string metric;
    RuleScope scope = RuleScope::Overall;
    Comparator comparator = Comparator::GreaterOrEqual;
    double threshold = 0.0;
};

struct RuleReport {
    AssertionRule rule;
    bool passed = false;
    std::string reason;                     // set when failed
    std::vector<std::string> offending;     // permutation ids, per_permutation scope
    double observed = 0.0;                  // overall mean or worst permutation mean
    bool has_observed = false;
};

struct Verdict {
    bool passed = false;
    std::vector<RuleReport> reports;
};

// A rule naming an absent metric fails with reason "metric missing".
// Never throws.
Verdict assert_thresholds(const SummaryTable& table,
                          const std::vector<AssertionRule>& rules);

}  // namespace agenteval
