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
#include <string>
#include <vector>

#include "vlncm/world/floorplan.hpp"

namespace vlncm::world {

struct GenerationParams {
  std::string world_id = "world";
  int room_count = 3;                    // in [2, 8]
  double corridor_width = 2.0;           // >= 1.0
  double min_room_size = 4.0;
  double max_room_size = 7.0;
  double min_corridor_length = 1.0;
  double max_corridor_length = 2.5;
  double max_extent = 80.0;              // side length limit of the bounds
  int episodes = 5;
  int max_route_rooms = 2;               // rooms crossed by one episode route
  double min_goal_distance = 4.0;
  double landmark_radius = 0.3;
  std::vector<std::string> vocabulary;   // empty = default_vocabulary()
};

std::vector<std::string> default_vocabulary();

struct GeneratedWorld {
  Floorplan floorplan;
  std::vector<Episode> episodes;
  // Per episode, the landmark labels the instruction names, in route order.
  std::vector<std::vector<std::string>> routes;
};

// Rooms laid out west to east, joined by straight corridors. Every room but
// the last has a landmark in its east doorway and every room has one in its
// interior. An episode starts in one room and ends at the interior landmark
// of a room further east; its instruction names the doorways it crosses and
// the goal landmark. Throws GenerationError for infeasible parameters.
GeneratedWorld generate_world(std::uint64_t seed, const GenerationParams& params);

// Builds the instruction text for a landmark route. `variant` picks among a
// few phrasings that all use the "past the" / "to the" / "at the" markers.
std::string instruction_from_route(const std::vector<std::string>& labels, int variant);

}  // namespace vlncm::world
