// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "agenteval/core/types.hpp"

namespace agenteval {

// All measurements of an evaluation, in evaluation order.
class MeasurementSet {
public:
    void add(Measurement m) { all_.push_back(std::move(m)); }

    const std::vector<Measurement>& measurements() const { return all_; }
    std::size_t size() const { return all_.size(); }
    bool empty() const { return all_.empty(); }

    // Values for one (metric name, permutation) pair, in insertion order.
    std::vector<double> values(const std::string& metric_name,
                               const std::string& permutation_id) const;

private:
    std::vector<Measurement> all_;
};

struct SummaryRow {
    std::string permutation_id;
    std::string metric;
    double mean = 0.0;
    std::size_t count = 0;
    double min = 0.0;
    double max = 0.0;
    Unit unit = Unit::Dimensionless;
};

struct SummaryTable {
    std::vector<SummaryRow> rows;
};

// One row per (metric, permutation) pair present in the set, sorted by
// (permutation_id, metric name).
SummaryTable summary(const MeasurementSet& measurements);

}  // namespace agenteval
