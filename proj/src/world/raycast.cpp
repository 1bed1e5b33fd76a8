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

#include "vlncm/world/raycast.hpp"

#include <algorithm>
#include <string>

#include "vlncm/error.hpp"

namespace vlncm::world {

double raycast(const Floorplan& plan, Vec2 origin, double angle, double max_depth) {
  if (!plan.bounds.strictly_contains(origin)) {
    throw InvalidOriginError("ray origin (" + std::to_string(origin.x) + ", " +
                             std::to_string(origin.y) + ") is outside the bounds of '" +
                             plan.id + "'");
  }
  const Vec2 dir = heading_vector(angle);
  double best = max_depth;
  for (const Segment& w : plan.walls) {
    if (point_segment_distance(origin, w) < 1e-9) {
      throw InvalidOriginError("ray origin lies on a wall of '" + plan.id + "'");
    }
    best = std::min(best, ray_segment_distance(origin, dir, w));
  }
  return best;
}

DepthPanorama::DepthPanorama(int rays_per_view, std::vector<double> depths, double max_depth)
    : rays_per_view_(rays_per_view), depths_(std::move(depths)), max_depth_(max_depth) {
  if (rays_per_view_ < 1) throw InvalidInputError("rays_per_view must be at least 1");
  if (depths_.size() != static_cast<std::size_t>(kViewCount * rays_per_view_)) {
    throw InvalidInputError("panorama needs 12 * rays_per_view depths");
  }
  for (double d : depths_) {
    if (!(d > 0.0 && d <= max_depth_)) {
      throw InvalidInputError("panorama depth outside (0, max_depth]");
    }
  }
}

std::span<const double> DepthPanorama::view(int view_index) const {
  return std::span<const double>(depths_).subspan(
      static_cast<std::size_t>(view_index * rays_per_view_), rays_per_view_);
}

double DepthPanorama::ray_angle(int ray_index) const {
  const int view = ray_index / rays_per_view_;
  const int j = ray_index % rays_per_view_;
  return view * kViewSpan + (j + 0.5) * (kViewSpan / rays_per_view_);
}

DepthPanorama render_depth_panorama(const Floorplan& plan, const Pose& pose,
                                    int rays_per_view, double max_depth) {
  if (rays_per_view < 1) throw InvalidInputError("rays_per_view must be at least 1");
  std::vector<double> depths;
  depths.reserve(static_cast<std::size_t>(kViewCount * rays_per_view));
  const double step = kViewSpan / rays_per_view;
  for (int i = 0; i < kViewCount; ++i) {
    for (int j = 0; j < rays_per_view; ++j) {
      depths.push_back(raycast(plan, pose.position, i * kViewSpan + (j + 0.5) * step, max_depth));
    }
  }
  return DepthPanorama(rays_per_view, std::move(depths), max_depth);
}

}  // namespace vlncm::world
