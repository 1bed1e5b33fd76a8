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

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "vlncm/world/floorplan.hpp"

namespace vlncm::testing {

inline void add_box(world::Floorplan& plan, double x0, double y0, double x1, double y1) {
  plan.walls.push_back({{x0, y0}, {x1, y0}});
  plan.walls.push_back({{x1, y0}, {x1, y1}});
  plan.walls.push_back({{x1, y1}, {x0, y1}});
  plan.walls.push_back({{x0, y1}, {x0, y0}});
}

inline world::Floorplan box_room(double x0, double y0, double x1, double y1,
                                 std::string id = "box") {
  world::Floorplan plan;
  plan.id = std::move(id);
  plan.bounds = {{x0, y0}, {x1, y1}};
  add_box(plan, x0, y0, x1, y1);
  return plan;
}

// 4 x 4 m room centred on the origin.
inline world::Floorplan square_room() { return box_room(-2, -2, 2, 2, "square"); }

// Regular polygon approximating a circle of radius r around the origin.
inline world::Floorplan circle_room(double r, int sides) {
  world::Floorplan plan;
  plan.id = "circle";
  plan.bounds = {{-r - 0.5, -r - 0.5}, {r + 0.5, r + 0.5}};
  for (int i = 0; i < sides; ++i) {
    const double a0 = 2 * std::numbers::pi * i / sides;
    const double a1 = 2 * std::numbers::pi * (i + 1) / sides;
    plan.walls.push_back({{r * std::cos(a0), r * std::sin(a0)}, {r * std::cos(a1), r * std::sin(a1)}});
  }
  return plan;
}

// L-shaped corridor of width w: a leg up from (0, 0) then a leg east.
inline world::Floorplan l_corridor(double w, double up, double east) {
  world::Floorplan plan;
  plan.id = "ell";
  const double top = up + w;
  const double right = east + w;
  plan.bounds = {{0, 0}, {right, top}};
  plan.walls = {{{0, 0}, {w, 0}},        {{w, 0}, {w, up}},        {{w, up}, {right, up}},
                {{right, up}, {right, top}}, {{right, top}, {0, top}}, {{0, top}, {0, 0}}};
  return plan;
}

}  // namespace vlncm::testing
