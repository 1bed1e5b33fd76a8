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

#include <optional>
#include <string>
#include <vector>

#include "vlncm/geometry.hpp"
#include "vlncm/world/floorplan.hpp"

namespace vlncm::eval {

inline constexpr double kDefaultSuccessRadius = 3.0;

// One executed low-level action and what the agent knew when taking it.
struct StepRecord {
  int step = 0;
  std::string action;
  world::Pose pose;        // after the action
  bool collided = false;
  int view = -1;           // view chosen by the plan that produced the action
  std::string spot;
  double similarity = -1;  // progress sample taken after the action, if any
  std::string decision;    // progress decision for that sample, if any
};

struct EpisodeResult {
  std::string episode_id;
  std::string config_label;
  bool success = false;
  bool stopped = false;
  double path_length = 0.0;
  double shortest_path_length = 0.0;
  int collisions = 0;
  int steps = 0;
  double final_distance_to_goal = 0.0;
  world::Pose final_pose;
  std::vector<std::string> spots;
  std::optional<std::string> failure_reason;
  std::vector<StepRecord> trajectory;
};

// Success needs an explicit stop within the radius (inclusive); running out
// of budget never counts.
inline bool judge_success(const world::Pose& final_pose, Vec2 goal, bool stopped,
                          double success_radius = kDefaultSuccessRadius) {
  return stopped && distance(final_pose.position, goal) <= success_radius;
}

}  // namespace vlncm::eval
