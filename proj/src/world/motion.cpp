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

#include "vlncm/world/motion.hpp"

namespace vlncm::world {

StepOutcome step_forward(const Floorplan& plan, const Pose& pose, double distance,
                         double agent_radius) {
  const Vec2 target = pose.position + heading_vector(pose.heading) * distance;
  const Segment swept{pose.position, target};
  for (const Segment& w : plan.walls) {
    if (segment_segment_distance(swept, w) < agent_radius - 1e-9) {
      return {pose, true};
    }
  }
  return {Pose{target, pose.heading}, false};
}

Pose turn(const Pose& pose, TurnDirection direction) {
  const double delta = direction == TurnDirection::kLeft ? -kTurnStep : kTurnStep;
  return Pose{pose.position, normalize_heading(pose.heading + delta)};
}

}  // namespace vlncm::world
