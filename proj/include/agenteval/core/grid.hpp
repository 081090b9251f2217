// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <utility>
#include <vector>

namespace agenteval {

using ParamMap = std::vector<std::pair<std::string, std::string>>;

// Agent parameter assignments: fixed ones applied to every run, permuted
// ones expanded into the Cartesian product of their candidate lists.
// Both maps are ordered; key sets must be disjoint.
struct ParameterGrid {
    ParamMap fixed;
    std::vector<std::pair<std::string, std::vector<std::string>>> permuted;

    // Product of permuted list lengths (1 if permuted is empty).
    // Throws InvalidGridError on an empty candidate list.
    std::size_t permutation_count() const;
};

// One expanded permutation: its canonical id and the full parameter map
// (fixed merged with this permutation's assignments, fixed first).
struct Permutation {
    std::string id;
    ParamMap params;
};

// Canonical permutation id: permuted params sorted by name, rendered
// "name=value" joined by ";". Values are percent-encoded ("%3D" for "=",
// "%3B" for ";", "%25" for "%") so distinct assignments always get
// distinct ids. Fixed params are excluded by the caller.
std::string permutation_id(const ParamMap& assignments);

// Cartesian expansion in odometer order: the first permuted param varies
// slowest, the last fastest. Throws InvalidGridError if any candidate
// list is empty or fixed/permuted keys overlap.
std::vector<Permutation> expand_grid(const ParameterGrid& grid);

}  // namespace agenteval
