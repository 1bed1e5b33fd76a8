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

#include "vlncm/geometry.hpp"

#include <algorithm>
#include <limits>

namespace vlncm {
namespace {

constexpr double kEps = 1e-12;

int orientation(Vec2 a, Vec2 b, Vec2 c) {
  const double v = cross(b - a, c - a);
  if (v > kEps) return 1;
  if (v < -kEps) return -1;
  return 0;
}

bool on_segment(Vec2 p, const Segment& s) {
  return p.x >= std::min(s.a.x, s.b.x) - kEps && p.x <= std::max(s.a.x, s.b.x) + kEps &&
         p.y >= std::min(s.a.y, s.b.y) - kEps && p.y <= std::max(s.a.y, s.b.y) + kEps;
}

}  // namespace

double point_segment_distance(Vec2 p, const Segment& s) {
  const Vec2 d = s.b - s.a;
  const double len2 = dot(d, d);
  if (len2 == 0.0) return distance(p, s.a);
  const double t = std::clamp(dot(p - s.a, d) / len2, 0.0, 1.0);
  return distance(p, s.a + d * t);
}

bool segments_intersect(const Segment& s, const Segment& t) {
  const int o1 = orientation(s.a, s.b, t.a);
  const int o2 = orientation(s.a, s.b, t.b);
  const int o3 = orientation(t.a, t.b, s.a);
  const int o4 = orientation(t.a, t.b, s.b);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(t.a, s)) return true;
  if (o2 == 0 && on_segment(t.b, s)) return true;
  if (o3 == 0 && on_segment(s.a, t)) return true;
  if (o4 == 0 && on_segment(s.b, t)) return true;
  return false;
}

bool segments_properly_cross(const Segment& s, const Segment& t) {
  const int o1 = orientation(s.a, s.b, t.a);
  const int o2 = orientation(s.a, s.b, t.b);
  const int o3 = orientation(t.a, t.b, s.a);
  const int o4 = orientation(t.a, t.b, s.b);
  return o1 * o2 < 0 && o3 * o4 < 0;
}

double segment_segment_distance(const Segment& s, const Segment& t) {
  if (segments_intersect(s, t)) return 0.0;
  return std::min({point_segment_distance(s.a, t), point_segment_distance(s.b, t),
                   point_segment_distance(t.a, s), point_segment_distance(t.b, s)});
}

double ray_segment_distance(Vec2 origin, Vec2 dir, const Segment& s) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  const Vec2 e = s.b - s.a;
  const Vec2 w = s.a - origin;
  const double denom = cross(dir, e);
  if (std::abs(denom) < 1e-15) {
    // Parallel. Only a collinear segment can be hit, at its nearest endpoint.
    if (std::abs(cross(w, dir)) > 1e-12 * std::max(1.0, norm(w))) return kInf;
    const double ta = dot(s.a - origin, dir);
    const double tb = dot(s.b - origin, dir);
    if (ta < 0.0 && tb < 0.0) return kInf;
    if (ta < 0.0 || tb < 0.0) return 0.0;
    return std::min(ta, tb);
  }
  const double t = cross(w, e) / denom;
  const double u = cross(w, dir) / denom;
  if (t < 0.0 || u < -1e-12 || u > 1.0 + 1e-12) return kInf;
  return t;
}

}  // namespace vlncm
