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

#include "vlncm/world/floorplan.hpp"

#include <cmath>
#include <limits>

#include "vlncm/error.hpp"

namespace vlncm::world {

void validate(const Floorplan& plan) {
  if (plan.id.empty()) throw InvalidInputError("floorplan id is empty");
  if (!(plan.bounds.min.x < plan.bounds.max.x && plan.bounds.min.y < plan.bounds.max.y)) {
    throw InvalidInputError("floorplan '" + plan.id + "' has degenerate bounds");
  }
  if (plan.walls.size() < 4) {
    throw InvalidInputError("floorplan '" + plan.id + "' needs at least 4 walls");
  }
  for (const Segment& w : plan.walls) {
    if (!std::isfinite(w.a.x) || !std::isfinite(w.a.y) || !std::isfinite(w.b.x) ||
        !std::isfinite(w.b.y)) {
      throw InvalidInputError("floorplan '" + plan.id + "' has a non-finite wall");
    }
  }
  for (const Landmark& l : plan.landmarks) {
    if (l.label.empty()) throw InvalidInputError("landmark with empty label");
    if (!plan.bounds.contains(l.position)) {
      throw InvalidInputError("landmark '" + l.label + "' lies outside the bounds");
    }
    if (l.radius < 0.0) throw InvalidInputError("landmark '" + l.label + "' has negative radius");
  }
}

void validate(const Episode& episode, const Floorplan& plan) {
  if (episode.floorplan_id != plan.id) {
    throw InvalidInputError("episode '" + episode.id + "' belongs to another floorplan");
  }
  if (!plan.bounds.contains(episode.goal)) {
    throw InvalidInputError("episode '" + episode.id + "' goal lies outside the bounds");
  }
  if (!(episode.shortest_path_length > 0.0) ||
      episode.shortest_path_length + 1e-9 < distance(episode.start.position, episode.goal)) {
    throw InvalidInputError("episode '" + episode.id + "' has an invalid shortest path length");
  }
}

double wall_clearance(const Floorplan& plan, Vec2 p) {
  double best = std::numeric_limits<double>::infinity();
  for (const Segment& w : plan.walls) best = std::min(best, point_segment_distance(p, w));
  return best;
}

}  // namespace vlncm::world
