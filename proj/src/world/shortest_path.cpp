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

#include "vlncm/world/shortest_path.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <queue>

#include "vlncm/error.hpp"

namespace vlncm::world {
namespace {

constexpr int kSnapRadiusCells = 3;
constexpr int kDx[8] = {1, -1, 0, 0, 1, 1, -1, -1};
constexpr int kDy[8] = {0, 0, 1, -1, 1, -1, 1, -1};

double octile(int dx, int dy) {
  dx = std::abs(dx);
  dy = std::abs(dy);
  return (std::max(dx, dy) - std::min(dx, dy)) + std::numbers::sqrt2 * std::min(dx, dy);
}

}  // namespace

FreeSpaceGrid::FreeSpaceGrid(const Floorplan& plan, double resolution, double agent_radius)
    : origin_(plan.bounds.min), resolution_(resolution) {
  width_ = static_cast<int>(std::floor((plan.bounds.max.x - plan.bounds.min.x) / resolution)) + 1;
  height_ = static_cast<int>(std::floor((plan.bounds.max.y - plan.bounds.min.y) / resolution)) + 1;
  free_.assign(static_cast<std::size_t>(width_) * height_, 1);
  // Stamp each wall's clearance band instead of testing every node against
  // every wall.
  for (const Segment& w : plan.walls) {
    const double lo_x = std::min(w.a.x, w.b.x) - agent_radius;
    const double hi_x = std::max(w.a.x, w.b.x) + agent_radius;
    const double lo_y = std::min(w.a.y, w.b.y) - agent_radius;
    const double hi_y = std::max(w.a.y, w.b.y) + agent_radius;
    const int ix0 = std::max(0, static_cast<int>(std::floor((lo_x - origin_.x) / resolution)));
    const int ix1 = std::min(width_ - 1, static_cast<int>(std::ceil((hi_x - origin_.x) / resolution)));
    const int iy0 = std::max(0, static_cast<int>(std::floor((lo_y - origin_.y) / resolution)));
    const int iy1 = std::min(height_ - 1, static_cast<int>(std::ceil((hi_y - origin_.y) / resolution)));
    for (int iy = iy0; iy <= iy1; ++iy) {
      for (int ix = ix0; ix <= ix1; ++ix) {
        if (point_segment_distance(node_position(ix, iy), w) < agent_radius) {
          free_[index(ix, iy)] = 0;
        }
      }
    }
  }
}

Vec2 FreeSpaceGrid::node_position(int ix, int iy) const {
  return {origin_.x + ix * resolution_, origin_.y + iy * resolution_};
}

std::optional<std::pair<int, int>> FreeSpaceGrid::snap(Vec2 p) const {
  const int cx = static_cast<int>(std::lround((p.x - origin_.x) / resolution_));
  const int cy = static_cast<int>(std::lround((p.y - origin_.y) / resolution_));
  std::optional<std::pair<int, int>> best;
  double best_d = std::numeric_limits<double>::infinity();
  for (int dy = -kSnapRadiusCells; dy <= kSnapRadiusCells; ++dy) {
    for (int dx = -kSnapRadiusCells; dx <= kSnapRadiusCells; ++dx) {
      const int ix = cx + dx;
      const int iy = cy + dy;
      if (!free(ix, iy)) continue;
      const double d = distance(node_position(ix, iy), p);
      if (d < best_d) {
        best_d = d;
        best = std::make_pair(ix, iy);
      }
    }
  }
  return best;
}

std::optional<double> FreeSpaceGrid::path_length(Vec2 start, Vec2 goal) const {
  const auto s = snap(start);
  const auto g = snap(goal);
  if (!s || !g) return std::nullopt;
  const double connectors =
      distance(start, node_position(s->first, s->second)) +
      distance(goal, node_position(g->first, g->second));
  const int start_idx = index(s->first, s->second);
  const int goal_idx = index(g->first, g->second);
  if (start_idx == goal_idx) return distance(start, goal);

  std::vector<double> cost(free_.size(), std::numeric_limits<double>::infinity());
  std::vector<std::uint8_t> closed(free_.size(), 0);
  using Entry = std::pair<double, int>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;
  cost[start_idx] = 0.0;
  open.emplace(octile(s->first - g->first, s->second - g->second), start_idx);
  while (!open.empty()) {
    const int cur = open.top().second;
    open.pop();
    if (closed[cur]) continue;
    closed[cur] = 1;
    if (cur == goal_idx) return cost[cur] * resolution_ + connectors;
    const int cx = cur % width_;
    const int cy = cur / width_;
    for (int k = 0; k < 8; ++k) {
      const int nx = cx + kDx[k];
      const int ny = cy + kDy[k];
      if (!free(nx, ny)) continue;
      if (k >= 4 && (!free(cx + kDx[k], cy) || !free(cx, cy + kDy[k]))) continue;
      const int ni = index(nx, ny);
      const double step = k >= 4 ? std::numbers::sqrt2 : 1.0;
      if (cost[cur] + step < cost[ni]) {
        cost[ni] = cost[cur] + step;
        open.emplace(cost[ni] + octile(nx - g->first, ny - g->second), ni);
      }
    }
  }
  return std::nullopt;
}

std::vector<std::uint8_t> FreeSpaceGrid::reachable_from(Vec2 seed) const {
  std::vector<std::uint8_t> seen(free_.size(), 0);
  const auto s = snap(seed);
  if (!s) return seen;
  std::deque<int> queue{index(s->first, s->second)};
  seen[queue.front()] = 1;
  while (!queue.empty()) {
    const int cur = queue.front();
    queue.pop_front();
    const int cx = cur % width_;
    const int cy = cur / width_;
    for (int k = 0; k < 8; ++k) {
      const int nx = cx + kDx[k];
      const int ny = cy + kDy[k];
      if (!free(nx, ny)) continue;
      if (k >= 4 && (!free(cx + kDx[k], cy) || !free(cx, cy + kDy[k]))) continue;
      const int ni = index(nx, ny);
      if (!seen[ni]) {
        seen[ni] = 1;
        queue.push_back(ni);
      }
    }
  }
  return seen;
}

double shortest_path(const Floorplan& plan, Vec2 start, Vec2 goal) {
  const FreeSpaceGrid grid(plan);
  const auto length = grid.path_length(start, goal);
  if (!length) {
    throw NoPathError("no collision-free path in '" + plan.id + "'");
  }
  return *length;
}

FreePoseSampler::FreePoseSampler(const Floorplan& plan, double min_clearance)
    : plan_(&plan), min_clearance_(min_clearance), grid_(plan) {
  const Vec2 seed = plan.landmarks.empty()
                        ? (plan.bounds.min + plan.bounds.max) * 0.5
                        : plan.landmarks.front().position;
  reachable_ = grid_.reachable_from(seed);
}

Pose FreePoseSampler::sample(std::mt19937_64& rng) const {
  const Rect& b = plan_->bounds;
  std::uniform_real_distribution<double> ux(b.min.x, b.max.x);
  std::uniform_real_distribution<double> uy(b.min.y, b.max.y);
  std::uniform_int_distribution<int> uh(0, 23);
  for (int attempt = 0; attempt < 1'000'000; ++attempt) {
    const Vec2 p{ux(rng), uy(rng)};
    const int ix = static_cast<int>(std::lround((p.x - b.min.x) / grid_.resolution()));
    const int iy = static_cast<int>(std::lround((p.y - b.min.y) / grid_.resolution()));
    if (!grid_.free(ix, iy) || !reachable_[grid_.index(ix, iy)]) continue;
    if (!b.strictly_contains(p) || wall_clearance(*plan_, p) < min_clearance_) continue;
    return Pose{p, uh(rng) * kTurnStep};
  }
  throw GenerationError("could not sample a free pose in '" + plan_->id + "'");
}

}  // namespace vlncm::world
