// SPDX-License-Identifier: Apache-2.0
//
// Independent reference computations. These stay deliberately separate from
// the library implementations: different data structures, different
// accumulation order, no shared helpers beyond the stdlib.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace oracle {

// Second from-the-formula BLEU: map<vector<token>,count> n-gram counting,
// long-double product of precisions, pow-based geometric mean.
double bleu_reference(const std::string& candidate,
                      const std::vector<std::string>& references, int max_n);

// Naive shift-by-one, case-folded indicator count: per phrase, gather all
// match positions with string::find, then count the union of positions.
std::int64_t indicator_scan_count(const std::string& text,
                                  const std::vector<std::string>& indicators);

// Direct dot/norm cosine with long-double accumulation.
double cosine_reference(const std::vector<double>& u,
                        const std::vector<double>& v);

}  // namespace oracle
