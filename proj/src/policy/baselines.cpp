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

#include "vlncm/policy/baselines.hpp"

namespace vlncm::policy {

RandomAgent::RandomAgent(std::uint64_t seed) : rng_(seed), dist_({68, 15, 15, 2}) {}

Action RandomAgent::next() {
  switch (dist_(rng_)) {
    case 0: return Action::kForward;
    case 1: return Action::kTurnLeft;
    case 2: return Action::kTurnRight;
    default: return Action::kStop;
  }
}

std::vector<Action> handcrafted_actions(std::uint64_t seed, double start_heading) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, 23);
  const double heading = pick(rng) * world::kTurnStep;
  std::vector<Action> actions = decompose({heading, 0.0}, start_heading);
  actions.insert(actions.end(), kHandcraftedForwards, Action::kForward);
  actions.push_back(Action::kStop);
  return actions;
}

}  // namespace vlncm::policy
