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

#include "vlncm/eval/metrics.hpp"

#include <algorithm>

#include "vlncm/error.hpp"

namespace vlncm::eval {

double compute_spl(const std::vector<EpisodeResult>& results) {
  if (results.empty()) throw UndefinedMetricError("SPL of an empty episode list");
  double total = 0.0;
  for (const EpisodeResult& r : results) {
    const double l = r.shortest_path_length;
    if (!(l > 0.0)) {
      throw InvalidInputError("episode '" + r.episode_id + "' has no positive shortest path");
    }
    if (r.success) total += l / std::max(r.path_length, l);
  }
  return total / static_cast<double>(results.size());
}

MetricsSummary summarize(const std::string& config_label,
                         const std::vector<EpisodeResult>& results) {
  if (results.empty()) throw UndefinedMetricError("no episodes for '" + config_label + "'");
  MetricsSummary s;
  s.config_label = config_label;
  s.n_episodes = static_cast<int>(results.size());
  double successes = 0.0;
  double collisions = 0.0;
  for (const EpisodeResult& r : results) {
    successes += r.success ? 1.0 : 0.0;
    collisions += r.collisions;
  }
  s.sr = successes / s.n_episodes;
  s.spl = compute_spl(results);
  s.collision_rate = collisions / s.n_episodes;
  return s;
}

}  // namespace vlncm::eval
