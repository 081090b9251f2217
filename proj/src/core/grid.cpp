// SPDX-License-Identifier: Apache-2.0
#include "agenteval/core/grid.hpp"

#include <algorithm>
#include <set>

#include "agenteval/errors.hpp"

namespace agenteval {

namespace {

std::string escape_value(const std::string& value) {
    std::string out;
    out.reserve(value.size());
    for (char c : value) {
        switch (c) {
            case '%': out += "%25"; break;
            case '=': out += "%3D"; break;
            case ';': out += "%3B"; break;
            default: out += c;
        }
    }
    return out;
}

void check_grid(const ParameterGrid& grid) {
    std::set<std::string> fixed_keys;
    for (const auto& [name, value] : grid.fixed) {
        (void)value;
        if (!fixed_keys.insert(name).second) {
            throw InvalidGridError("duplicate fixed param '" + name + "'");
        }
    }
    std::set<std::string> permuted_keys;
    for (const auto& [name, values] : grid.permuted) {
        if (values.empty()) {
            throw InvalidGridError("permuted param '" + name +
                                   "' has an empty candidate list");
        }
        if (!permuted_keys.insert(name).second) {
            throw InvalidGridError("duplicate permuted param '" + name + "'");
        }
        if (fixed_keys.count(name) != 0) {
            throw InvalidGridError("param '" + name +
                                   "' is both fixed and permuted");
        }
    }
}

}  // namespace

std::size_t ParameterGrid::permutation_count() const {
    check_grid(*this);
    std::size_t count = 1;
    for (const auto& [name, values] : permuted) {
        (void)name;
        count *= values.size();
    }
    return count;
}

std::string permutation_id(const ParamMap& assignments) {
    ParamMap sorted = assignments;
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::string id;
    for (const auto& [name, value] : sorted) {
        if (!id.empty()) {
            id += ';';
        }
        id += name;
        id += '=';
        id += escape_value(value);
    }
    return id;
}

std::vector<Permutation> expand_grid(const ParameterGrid& grid) {
    check_grid(grid);

    std::vector<Permutation> result;
    result.reserve(grid.permutation_count());

    std::vector<std::size_t> odometer(grid.permuted.size(), 0);
    while (true) {
        ParamMap assigned;
        assigned.reserve(grid.permuted.size());
        for (std::size_t i = 0; i < grid.permuted.size(); ++i) {
            assigned.emplace_back(grid.permuted[i].first,
                                  grid.permuted[i].second[odometer[i]]);
        }

        Permutation perm;
        perm.id = permutation_id(assigned);
        perm.params = grid.fixed;
        perm.params.insert(perm.params.end(), assigned.begin(), assigned.end());
        result.push_back(std::move(perm));

        // Advance the odometer, last param fastest.
        std::size_t pos = grid.permuted.size();
        while (pos > 0) {
            --pos;
            if (++odometer[pos] < grid.permuted[pos].second.size()) {
                break;
            }
            odometer[pos] = 0;
            if (pos == 0) {
                return result;
            }
        }
        if (grid.permuted.empty()) {
            return result;
        }
    }
}

}  // namespace agenteval
