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

namespace vlncm {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
  constexpr bool operator==(const Vec2&) const = default;
};

constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }
inline double distance(Vec2 a, Vec2 b) { return norm(a - b); }

struct Segment {
  Vec2 a;
  Vec2 b;
  constexpr bool operator==(const Segment&) const = default;
};

struct Rect {
  Vec2 min;
  Vec2 max;

  constexpr bool contains(Vec2 p) const {
    return p.x >= min.x && p.x <= max.x && p.y >= min.y && p.y <= max.y;
  }
  constexpr bool strictly_contains(Vec2 p) const {
    return p.x > min.x && p.x < max.x && p.y > min.y && p.y < max.y;
  }
  constexpr bool operator==(const Rect&) const = default;
};

// Headings are compass style: 0 deg points along +y and angles grow
// clockwise, so 90 deg points along +x.
inline double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }
inline double rad_to_deg(double rad) { return rad * 180.0 / std::numbers::pi; }

// Maps any finite angle to [0, 360).
inline double normalize_heading(double deg) {
  double h = std::fmod(deg, 360.0);
  if (h < 0.0) h += 360.0;
  if (h >= 360.0 || h == 0.0) h = 0.0;  // also folds -0.0
  return h;
}

// Signed smallest rotation taking `from` to `to`, in (-180, 180].
inline double signed_angle_diff(double from, double to) {
  double d = normalize_heading(to - from);
  return d > 180.0 ? d - 360.0 : d;
}

inline double abs_angle_diff(double a, double b) {
  return std::abs(signed_angle_diff(a, b));
}

inline Vec2 heading_vector(double heading_deg) {
  const double r = deg_to_rad(heading_deg);
  return {std::sin(r), std::cos(r)};
}

// Compass bearing of `v`, in [0, 360).
inline double bearing_of(Vec2 v) {
  return normalize_heading(rad_to_deg(std::atan2(v.x, v.y)));
}

double point_segment_distance(Vec2 p, const Segment& s);

// True when the closed segments share at least one point.
bool segments_intersect(const Segment& s, const Segment& t);

// True when the segments cross at a single point interior to both.
bool segments_properly_cross(const Segment& s, const Segment& t);

double segment_segment_distance(const Segment& s, const Segment& t);

// Distance along the ray origin + t * dir (dir unit length) to the first
// point of `s`, or +inf when the ray misses. A ray running along a collinear
// segment reports its nearest endpoint.
double ray_segment_distance(Vec2 origin, Vec2 dir, const Segment& s);

}  // namespace vlncm
