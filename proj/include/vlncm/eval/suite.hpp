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

#include <cstdint>
#include <vector>

#include "vlncm/eval/metrics.hpp"
#include "vlncm/policy/agent.hpp"
#include "vlncm/world/floorplan.hpp"

namespace vlncm::eval {

struct SuiteOutput {
  std::vector<MetricsSummary> summaries;  // config order
  std::vector<EpisodeResult> results;     // config order, then episode id
};

// Runs every (config, episode) pair on up to `parallelism` threads. Each
// episode's seed is derived from `seed` and its id, so the output does not
// depend on scheduling. An episode that throws is recorded as failed.
SuiteOutput run_suite(const std::vector<world::Floorplan>& floorplans,
                      const std::vector<world::Episode>& episodes,
                      const std::vector<policy::AgentConfig>& configs,
                      const policy::AgentDeps& deps, std::uint64_t seed, int parallelism);

}  // namespace vlncm::eval
