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
#include <string>

#include "vlncm/eval/result.hpp"
#include "vlncm/language/attention_spots.hpp"
#include "vlncm/language/parsers.hpp"
#include "vlncm/perception/occupancy.hpp"
#include "vlncm/policy/progress.hpp"
#include "vlncm/policy/similarity.hpp"
#include "vlncm/world/floorplan.hpp"

namespace vlncm::policy {

enum class AgentKind { kVlnCm, kRandom, kHandcrafted };

struct AgentConfig {
  std::string label = "full";
  AgentKind kind = AgentKind::kVlnCm;
  bool use_omp = true;
  bool use_asp = true;
  int step_budget = 200;
  int progress_threshold = kDefaultProgressThreshold;
  int max_spots = language::kDefaultMaxSpots;
  double success_radius = eval::kDefaultSuccessRadius;
  int rays_per_view = world::kDefaultRaysPerView;
};

// Full pipeline with the given modules switched on or off. Labels are
// "full", "no-omp", "no-asp" and "no-omp-asp".
AgentConfig ablation_variant(bool use_omp, bool use_asp);
AgentConfig random_baseline();
AgentConfig handcrafted_baseline();

// Shared, thread-safe collaborators. Only the ones a configuration needs
// are touched: the parser is unused without ASP, the predictor without OMP.
struct AgentDeps {
  const perception::OccupancyPredictor* predictor = nullptr;
  language::InstructionParser* parser = nullptr;
  SimilarityScorer* scorer = nullptr;
  language::RetryPolicy retry;
};

// Runs one episode to completion: stop, finished spot sequence or spent
// budget. Scorer failures end the episode as failed with a zero-length path.
// `seed` drives the baseline agents only.
eval::EpisodeResult run_agent(const world::Episode& episode, const world::Floorplan& plan,
                              const AgentDeps& deps, const AgentConfig& config,
                              std::uint64_t seed);

}  // namespace vlncm::policy
