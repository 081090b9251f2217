// SPDX-License-Identifier: Apache-2.0
#include "agenteval/eval/assertions.hpp"

namespace agenteval {

const char* to_string(RuleScope scope) {
    return scope == RuleScope::Overall ? "overall" : "per_permutation";
}

const char* to_string(Comparator cmp) {
    return cmp == Comparator::GreaterOrEqual ? ">=" : "<=";
}

namespace {

bool satisfies(double value, Comparator cmp, double threshold) {
    return cmp == Comparator::GreaterOrEqual ? value >= threshold
                                             : value <= threshold;
}

}  // namespace

Verdict assert_thresholds(const SummaryTable& table,
                          const std::vector<AssertionRule>& rules) {
    Verdict verdict;
    verdict.passed = true;

    for (const AssertionRule& rule : rules) {
        RuleReport report;
        report.rule = rule;

        std::vector<const SummaryRow*> rows;
        for (const SummaryRow& row : table.rows) {
            if (row.metric == rule.metric) {
                rows.push_back(&row);
            }
        }

        if (rows.empty()) {
            report.passed = false;
            report.reason = "metric missing";
        } else if (rule.scope == RuleScope::Overall) {
            double sum = 0.0;
            std::size_t count = 0;
            for (const SummaryRow* row : rows) {
                sum += row->mean * static_cast<double>(row->count);
                count += row->count;
            }
            double overall_mean = sum / static_cast<double>(count);
            report.observed = overall_mean;
            report.has_observed = true;
            report.passed = satisfies(overall_mean, rule.comparator, rule.threshold);
            if (!report.passed) {
                report.reason = "overall mean violates threshold";
            }
        } else {
            report.passed = true;
            bool first = true;
            for (const SummaryRow* row : rows) {
                bool ok = satisfies(row->mean, rule.comparator, rule.threshold);
                if (!ok) {
                    report.passed = false;
                    report.offending.push_back(row->permutation_id);
                }
                // Track the worst mean for reporting.
                bool worse = rule.comparator == Comparator::GreaterOrEqual
                                 ? row->mean < report.observed
                                 : row->mean > report.observed;
                if (first || worse) {
                    report.observed = row->mean;
                    first = false;
                }
            }
            report.has_observed = true;
            if (!report.passed) {
                report.reason = "permutation mean violates threshold";
            }
        }

        if (!report.passed) {
            verdict.passed = false;
        }
        verdict.reports.push_back(std::move(report));
    }

    return verdict;
}

}  // namespace agenteval
