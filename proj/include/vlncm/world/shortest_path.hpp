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
#include <optional>
#include <random>
#include <vector>

#include "vlncm/world/floorplan.hpp"

namespace vlncm::world {

inline constexpr double kPathGridResolution = 0.1;

// Regular grid over the floorplan bounds; a node is free when its centre
// has at least `agent_radius` clearance from every wall.
class FreeSpaceGrid {
 public:
  FreeSpaceGrid(const Floorplan& plan, double resolution = kPathGridResolution,
                double agent_radius = kAgentRadius);

  int width() const { return width_; }
  int height() const { return height_; }
  double resolution() const { return resolution_; }

  bool in_grid(int ix, int iy) const {
    return ix >= 0 && iy >= 0 && ix < width_ && iy < height_;
  }
  bool free(int ix, int iy) const { return in_grid(ix, iy) && free_[index(ix, iy)] != 0; }
  Vec2 node_position(int ix, int iy) const;

  // Nearest free node to `p` within a few cells, if any.
  std::optional<std::pair<int, int>> snap(Vec2 p) const;

  // 8-connected A* with octile heuristic. Returns the path length including
  // the connectors from the query points to their snapped nodes.
  std::optional<double> path_length(Vec2 start, Vec2 goal) const;

  // Nodes reachable from `seed` (same connectivity as path_length).
  std::vector<std::uint8_t> reachable_from(Vec2 seed) const;

  int index(int ix, int iy) const { return iy * width_ + ix; }

 private:
  Vec2 origin_;
  double resolution_;
  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> free_;
};

// Shortest collision-free path length. Throws NoPathError when unreachable.
double shortest_path(const Floorplan& plan, Vec2 start, Vec2 goal);

// Uniform pose sampler over the free space connected to the first landmark
// (or the bounds centre when there are none). Headings are multiples of the
// turn step.
class FreePoseSampler {
 public:
  explicit FreePoseSampler(const Floorplan& plan, double min_clearance = kAgentRadius);

  Pose sample(std::mt19937_64& rng) const;

 private:
  const Floorplan* plan_;
  double min_clearance_;
  FreeSpaceGrid grid_;
  std::vector<std::uint8_t> reachable_;
};

}  // namespace vlncm::world
