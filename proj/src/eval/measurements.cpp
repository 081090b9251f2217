// SPDX-License-Identifier: Apache-2.0
#include "agenteval/eval/measurements.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace agenteval {

std::vector<double> MeasurementSet::values(
    const std::string& metric_name, const std::string& permutation_id) const {
    std::vector<double> out;
    for (const Measurement& m : all_) {
        if (m.name == metric_name && m.permutation_id == permutation_id) {
            out.push_back(m.value);
        }
    }
    return out;
}

SummaryTable summary(const MeasurementSet& measurements) {
    struct Accum {
        double sum = 0.0;
        std::size_t count = 0;
        double min = 0.0;
        double max = 0.0;
        Unit unit = Unit::Dimensionless;
    };
    std::map<std::pair<std::string, std::string>, Accum> groups;

    for (const Measurement& m : measurements.measurements()) {
        auto key = std::make_pair(m.permutation_id, m.name);
        auto [it, inserted] = groups.try_emplace(key);
        Accum& acc = it->second;
        if (inserted) {
            acc.min = m.value;
            acc.max = m.value;
            acc.unit = m.unit;
        } else {
            acc.min = std::min(acc.min, m.value);
            acc.max = std::max(acc.max, m.value);
        }
        acc.sum += m.value;
        acc.count += 1;
    }

    SummaryTable table;
    table.rows.reserve(groups.size());
    for (const auto& [key, acc] : groups) {
        SummaryRow row;
        row.permutation_id = key.first;
        row.metric = key.second;
        row.mean = acc.sum / static_cast<double>(acc.count);
        row.count = acc.count;
        row.min = acc.min;
        row.max = acc.max;
        row.unit = acc.unit;
        table.rows.push_back(std::move(row));
    }
    // std::map iteration already yields (permutation_id, metric) order.
    return table;
}

}  // namespace agenteval
