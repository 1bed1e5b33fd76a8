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

#include "vlncm/geometry.hpp"

namespace vlncm::world {

// Embodiment and action conventions shared by every module.
inline constexpr double kAgentRadius = 0.1;
inline constexpr double kMaxDepth = 10.0;
inline constexpr double kForwardStep = 0.25;
inline constexpr double kTurnStep = 15.0;
inline constexpr int kViewCount = 12;
inline constexpr double kViewSpan = 30.0;
inline constexpr int kDefaultRaysPerView = 10;

struct Pose {
  Vec2 position;
  double heading = 0.0;  // compass degrees in [0, 360)

  bool operator==(const Pose&) const = default;
};

// Builds a pose with the heading folded into [0, 360).
inline Pose make_pose(double x, double y, double heading) {
  return Pose{{x, y}, normalize_heading(heading)};
}

struct Landmark {
  std::string label;
  Vec2 position;
  double radius = 0.0;

  bool operator==(const Landmark&) const = default;
};

struct Floorplan {
  std::string id;
  Rect bounds;
  std::vector<Segment> walls;
  std::vector<Landmark> landmarks;

  bool operator==(const Floorplan&) const = default;
};

struct Episode {
  std::string id;
  std::string floorplan_id;
  Pose start;
  Vec2 goal;
  std::string instruction;
  double shortest_path_length = 0.0;

  bool operator==(const Episode&) const = default;
};

// Throws InvalidInputError when a structural invariant is violated.
void validate(const Floorplan& plan);
void validate(const Episode& episode, const Floorplan& plan);

// Distance from `p` to the nearest wall (+inf when there are no walls).
double wall_clearance(const Floorplan& plan, Vec2 p);

// Angle of the centre of view `view_index`, in degrees.
inline double view_center(int view_index) {
  return view_index * kViewSpan + kViewSpan / 2.0;
}

// Index of the view whose span [i*30, (i+1)*30) holds `heading`.
inline int view_of(double heading) {
  const int v = static_cast<int>(normalize_heading(heading) / kViewSpan);
  return v >= kViewCount ? kViewCount - 1 : v;
}

}  // namespace vlncm::world
