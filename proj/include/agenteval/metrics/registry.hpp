// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "agenteval/metrics/metric.hpp"

namespace agenteval {

// Metric selection syntax: comma-separated "name" or "name:configfile".
//   latency | tokens | hops | no-tool | unable-to-help[:indicators.json]
//   correct-tool[:cases.json] | cost:pricing.json | keyword:keywords.json
//   similarity:cases.json | bleu:cases.json | conciseness:judge.json
//   expectation:judge.json
// Unknown names raise Error listing the known metrics; missing required
// config files raise Error too.
std::vector<std::unique_ptr<Metric>> metrics_from_spec(const std::string& spec);

const std::vector<std::string>& known_metric_names();

}  // namespace agenteval
