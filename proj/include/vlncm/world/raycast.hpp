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

#include <span>
#include <vector>

#include "vlncm/world/floorplan.hpp"

namespace vlncm::world {

// Distance from `origin` to the nearest wall along compass `angle`, clamped
// to `max_depth`. Throws InvalidOriginError if the origin lies outside the
// bounds or on a wall.
double raycast(const Floorplan& plan, Vec2 origin, double angle,
               double max_depth = kMaxDepth);

// Twelve absolute-north-aligned views of `rays_per_view` horizontal depth
// rays each. View i spans headings [i*30, (i+1)*30); ray j of view i points
// at i*30 + (j + 0.5) * 30 / rays_per_view.
class DepthPanorama {
 public:
  DepthPanorama(int rays_per_view, std::vector<double> depths,
                double max_depth = kMaxDepth);

  int rays_per_view() const { return rays_per_view_; }
  int ray_count() const { return static_cast<int>(depths_.size()); }
  double max_depth() const { return max_depth_; }

  std::span<const double> view(int view_index) const;
  std::span<const double> depths() const { return depths_; }
  double depth(int ray_index) const { return depths_[ray_index]; }
  double ray_angle(int ray_index) const;

  bool operator==(const DepthPanorama&) const = default;

 private:
  int rays_per_view_;
  std::vector<double> depths_;
  double max_depth_;
};

DepthPanorama render_depth_panorama(const Floorplan& plan, const Pose& pose,
                                    int rays_per_view = kDefaultRaysPerView,
                                    double max_depth = kMaxDepth);

}  // namespace vlncm::world
