// SPDX-License-Identifier: Apache-2.0
#include "agenteval/report/summary_io.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

#include <nlohmann/json.hpp>

namespace agenteval {

namespace {

std::string fixed4(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", value);
    return buf;
}

std::string full_precision(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\n") == std::string::npos) {
        return value;
    }
    std::string quoted = "\"";
    for (char c : value) {
        if (c == '"') {
            quoted += '"';
        }
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

}  // namespace

std::string render_summary_table(const SummaryTable& table) {
    const std::vector<std::string> headers = {"permutation", "metric", "mean",
                                              "count",       "min",    "max",
                                              "unit"};
    std::vector<std::vector<std::string>> rows;
    rows.reserve(table.rows.size());
    for (const SummaryRow& row : table.rows) {
        rows.push_back({row.permutation_id.empty() ? "(none)"
                                                   : row.permutation_id,
                        row.metric, fixed4(row.mean), std::to_string(row.count),
                        fixed4(row.min), fixed4(row.max),
                        to_string(row.unit)});
    }

    std::vector<std::size_t> widths(headers.size());
    for (std::size_t i = 0; i < headers.size(); ++i) {
        widths[i] = headers[i].size();
        for (const auto& row : rows) {
            widths[i] = std::max(widths[i], row[i].size());
        }
    }

    auto render_row = [&](const std::vector<std::string>& cells) {
        std::string line;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i > 0) {
                line += " | ";
            }
            line += cells[i];
            line.append(widths[i] - cells[i].size(), ' ');
        }
        // No trailing spaces.
        while (!line.empty() && line.back() == ' ') {
            line.pop_back();
        }
        return line + "\n";
    };

    std::string out = render_row(headers);
    std::string rule;
    for (std::size_t i = 0; i < widths.size(); ++i) {
        if (i > 0) {
            rule += "-+-";
        }
        rule.append(widths[i], '-');
    }
    out += rule + "\n";
    for (const auto& row : rows) {
        out += render_row(row);
    }
    return out;
}

std::string render_summary_csv(const SummaryTable& table) {
    std::string out = "permutation,metric,mean,count,min,max,unit\n";
    for (const SummaryRow& row : table.rows) {
        out += csv_field(row.permutation_id);
        out += ',';
        out += csv_field(row.metric);
        out += ',';
        out += full_precision(row.mean);
        out += ',';
        out += std::to_string(row.count);
        out += ',';
        out += full_precision(row.min);
        out += ',';
        out += full_precision(row.max);
        out += ',';
        out += to_string(row.unit);
        out += '\n';
    }
    return out;
}

std::string render_summary_json(const SummaryTable& table) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const SummaryRow& row : table.rows) {
        nlohmann::ordered_json obj;
        obj["permutation"] = row.permutation_id;
        obj["metric"] = row.metric;
        obj["mean"] = row.mean;
        obj["count"] = row.count;
        obj["min"] = row.min;
        obj["max"] = row.max;
        obj["unit"] = to_string(row.unit);
        doc.push_back(std::move(obj));
    }
    return doc.dump(2) + "\n";
}

}  // namespace agenteval
