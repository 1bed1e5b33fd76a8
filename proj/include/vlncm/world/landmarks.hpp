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

#include <string>
#include <vector>

#include "vlncm/world/floorplan.hpp"

namespace vlncm::world {

struct VisibleLandmark {
  std::string label;
  double bearing = 0.0;           // relative to the agent heading, (-180, 180]
  double absolute_bearing = 0.0;  // compass, [0, 360)
  double distance = 0.0;
  bool occluded = false;
};

// Landmarks whose angular extent (disc of `radius` seen from the pose)
// overlaps the span of `view_index`, nearest first.
std::vector<VisibleLandmark> visible_landmarks(const Floorplan& plan, const Pose& pose,
                                               int view_index);

// True when the straight line between the two points crosses a wall.
bool line_of_sight_blocked(const Floorplan& plan, Vec2 from, Vec2 to);

}  // namespace vlncm::world
