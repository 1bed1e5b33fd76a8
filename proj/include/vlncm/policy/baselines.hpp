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
#include <random>
#include <vector>

#include "vlncm/policy/planning.hpp"

namespace vlncm::policy {

inline constexpr int kHandcraftedForwards = 37;

// Samples forward/left/right/stop with probabilities 0.68/0.15/0.15/0.02.
class RandomAgent {
 public:
  explicit RandomAgent(std::uint64_t seed);
  Action next();

 private:
  std::mt19937_64 rng_;
  std::discrete_distribution<int> dist_;
};

// Turns to a heading drawn uniformly from the 24 multiples of 15 degrees,
// then 37 forwards, then stop.
std::vector<Action> handcrafted_actions(std::uint64_t seed, double start_heading);

}  // namespace vlncm::policy
