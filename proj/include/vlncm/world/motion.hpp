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

#include "vlncm/world/floorplan.hpp"

namespace vlncm::world {

struct StepOutcome {
  Pose pose;
  bool collided = false;
};

// Moves `distance` metres along the heading if the swept segment keeps at
// least `agent_radius` clearance from every wall. On contact the agent
// stays where it was; there is no sliding.
StepOutcome step_forward(const Floorplan& plan, const Pose& pose,
                         double distance = kForwardStep,
                         double agent_radius = kAgentRadius);

enum class TurnDirection { kLeft, kRight };

// Rotates by kTurnStep; left is counterclockwise (decreasing compass heading).
Pose turn(const Pose& pose, TurnDirection direction);

}  // namespace vlncm::world
