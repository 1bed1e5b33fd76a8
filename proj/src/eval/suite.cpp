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

#include "vlncm/eval/suite.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <thread>

#include "vlncm/error.hpp"
#include "vlncm/seed.hpp"

namespace vlncm::eval {

SuiteOutput run_suite(const std::vector<world::Floorplan>& floorplans,
                      const std::vector<world::Episode>& episodes,
                      const std::vector<policy::AgentConfig>& configs,
                      const policy::AgentDeps& deps, std::uint64_t seed, int parallelism) {
  if (episodes.empty()) throw InvalidInputError("no episodes to evaluate");
  if (configs.empty()) throw InvalidInputError("no agent configurations");
  for (const auto& c : configs) {
    if (c.label.empty()) throw InvalidInputError("agent configuration without a label");
  }
  std::map<std::string, const world::Floorplan*> by_id;
  for (const auto& p : floorplans) {
    if (!by_id.emplace(p.id, &p).second) {
      throw InvalidInputError("duplicate floorplan id '" + p.id + "'");
    }
  }
  std::set<std::string> episode_ids;
  for (const auto& e : episodes) {
    if (!episode_ids.insert(e.id).second) {
      throw InvalidInputError("duplicate episode id '" + e.id + "'");
    }
    if (!by_id.count(e.floorplan_id)) {
      throw InvalidInputError("episode '" + e.id + "' references unknown floorplan '" +
                              e.floorplan_id + "'");
    }
  }

  std::vector<const world::Episode*> ordered;
  for (const auto& e : episodes) ordered.push_back(&e);
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const world::Episode* a, const world::Episode* b) { return a->id < b->id; });

  const std::size_t n = ordered.size();
  const std::size_t jobs = configs.size() * n;
  std::vector<EpisodeResult> results(jobs);
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t job = next++; job < jobs; job = next++) {
      const policy::AgentConfig& config = configs[job / n];
      const world::Episode& episode = *ordered[job % n];
      const std::uint64_t episode_seed = derive_seed(seed, episode.id);
      try {
        results[job] = policy::run_agent(episode, *by_id.at(episode.floorplan_id), deps, config,
                                         episode_seed);
      } catch (const std::exception& e) {
        EpisodeResult failed;
        failed.episode_id = episode.id;
        failed.config_label = config.label;
        failed.shortest_path_length = episode.shortest_path_length;
        failed.final_pose = episode.start;
        failed.final_distance_to_goal = distance(episode.start.position, episode.goal);
        failed.failure_reason = e.what();
        results[job] = std::move(failed);
      }
    }
  };

  const int threads = std::clamp(parallelism, 1, static_cast<int>(std::min<std::size_t>(jobs, 256)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  SuiteOutput out;
  for (std::size_t c = 0; c < configs.size(); ++c) {
    std::vector<EpisodeResult> slice(results.begin() + c * n, results.begin() + (c + 1) * n);
    out.summaries.push_back(summarize(configs[c].label, slice));
  }
  out.results = std::move(results);
  return out;
}

}  // namespace vlncm::eval
