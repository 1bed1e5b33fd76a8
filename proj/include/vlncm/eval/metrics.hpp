// Copyright 2026 The VLN-CM Simulator Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

#include "vlncm/eval/result.hpp"

namespace vlncm::eval {

struct MetricsSummary {
  std::string config_label;
  double sr = 0.0;
  double spl = 0.0;
  double collision_rate = 0.0;  // mean collisions per episode
  int n_episodes = 0;

  bool operator==(const MetricsSummary&) const = default;
};

// Mean of S_i * l_i / max(p_i, l_i). Throws UndefinedMetricError on an
// empty list and InvalidInputError on a non-positive shortest path.
double compute_spl(const std::vector<EpisodeResult>& results);

// Throws UndefinedMetricError on an empty list.
MetricsSummary summarize(const std::string& config_label,
                         const std::vector<EpisodeResult>& results);

}  // namespace vlncm::eval
