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

#include "vlncm/policy/planning.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

namespace vlncm::policy {

std::string_view to_string(Action action) {
  switch (action) {
    case Action::kForward: return "forward";
    case Action::kTurnLeft: return "turn_left";
    case Action::kTurnRight: return "turn_right";
    case Action::kStop: return "stop";
  }
  return "unknown";
}

Waypoint plan_waypoint(int view_index, const perception::OccupancyMask& mask,
                       const ViewScores& scores) {
  std::array<int, world::kViewCount> order;
  std::iota(order.begin(), order.end(), 0);
  const double chosen = world::view_center(view_index);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (a == view_index || b == view_index) return a == view_index && b != view_index;
    if (scores[a].value != scores[b].value) return scores[a].value > scores[b].value;
    return abs_angle_diff(world::view_center(a), chosen) <
           abs_angle_diff(world::view_center(b), chosen);
  });
  for (int v : order) {
    const double heading = world::view_center(v);
    const double d = perception::max_free_distance(mask, heading);
    if (d > 0.0) return {heading, d};
  }
  return {chosen, 0.0};
}

Waypoint plan_waypoint_blind(int view_index) {
  return {world::view_center(view_index), perception::kMaskRange};
}

std::vector<Action> decompose(const Waypoint& waypoint, double current_heading) {
  std::vector<Action> actions;
  const double diff = signed_angle_diff(current_heading, waypoint.heading);
  const long turns = std::lround(diff / world::kTurnStep);
  const Action turn = turns < 0 ? Action::kTurnLeft : Action::kTurnRight;
  for (long i = 0; i < std::labs(turns); ++i) actions.push_back(turn);
  const long forwards = std::lround(waypoint.distance / world::kForwardStep);
  for (long i = 0; i < forwards; ++i) actions.push_back(Action::kForward);
  return actions;
}

}  // namespace vlncm::policy
