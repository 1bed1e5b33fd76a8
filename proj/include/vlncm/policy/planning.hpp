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

#include <string_view>
#include <vector>

#include "vlncm/perception/occupancy.hpp"
#include "vlncm/policy/similarity.hpp"

namespace vlncm::policy {

struct Waypoint {
  double heading = 0.0;   // absolute, [0, 360)
  double distance = 0.0;  // metres, multiple of 0.25 in [0, 3]
};

enum class Action { kForward, kTurnLeft, kTurnRight, kStop };

std::string_view to_string(Action action);

// Heads for the centre of `view_index` as far as the mask allows. A blocked
// view hands over to the next-best score (ties: closest to the chosen view,
// then lowest index); if every view is blocked the result is the chosen
// view's heading with distance 0.
Waypoint plan_waypoint(int view_index, const perception::OccupancyMask& mask,
                       const ViewScores& scores);

// Waypoint used without an occupancy mask: full range toward the view.
Waypoint plan_waypoint_blind(int view_index);

// Turns by the shorter direction (an exact half turn goes right), then
// forwards. The turn count is the rounded heading change over 15 degrees.
std::vector<Action> decompose(const Waypoint& waypoint, double current_heading);

}  // namespace vlncm::policy
