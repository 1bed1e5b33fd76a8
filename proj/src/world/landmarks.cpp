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

#include "vlncm/world/landmarks.hpp"

#include <algorithm>
#include <cmath>

namespace vlncm::world {

bool line_of_sight_blocked(const Floorplan& plan, Vec2 from, Vec2 to) {
  const Segment sight{from, to};
  for (const Segment& w : plan.walls) {
    if (segments_intersect(sight, w)) {
      // A landmark sitting exactly on a wall line (a doorway marker) is seen
      // from the side it faces; touching at the far endpoint is not a block.
      if (point_segment_distance(to, w) < 1e-9 && !segments_properly_cross(sight, w)) continue;
      return true;
    }
  }
  return false;
}

std::vector<VisibleLandmark> visible_landmarks(const Floorplan& plan, const Pose& pose,
                                               int view_index) {
  std::vector<VisibleLandmark> out;
  const double view_lo = view_index * kViewSpan;
  const double center = view_center(view_index);
  for (const Landmark& l : plan.landmarks) {
    const Vec2 delta = l.position - pose.position;
    const double dist = norm(delta);
    if (dist <= 0.0) continue;
    const double abs_bearing = bearing_of(delta);
    const double half_width =
        l.radius >= dist ? 180.0 : rad_to_deg(std::asin(l.radius / dist));
    // Overlap of [bearing - w, bearing + w] with [lo, lo + 30) on the circle.
    const double offset = abs_angle_diff(abs_bearing, center);
    const bool center_inside = normalize_heading(abs_bearing - view_lo) < kViewSpan;
    if (!center_inside && offset >= kViewSpan / 2.0 + half_width) continue;
    out.push_back(VisibleLandmark{
        l.label, signed_angle_diff(pose.heading, abs_bearing), abs_bearing, dist,
        line_of_sight_blocked(plan, pose.position, l.position)});
  }
  std::sort(out.begin(), out.end(), [](const VisibleLandmark& a, const VisibleLandmark& b) {
    if (a.distance != b.distance) return a.distance < b.distance;
    return a.label < b.label;
  });
  return out;
}

}  // namespace vlncm::world
