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

#include "vlncm/perception/occupancy.hpp"

#include <algorithm>
#include <cmath>
#include <span>

#include "vlncm/error.hpp"

namespace vlncm::perception {
namespace {

constexpr Vec2 kOrigin{0.0, 0.0};

bool point_in_polygon(Vec2 p, std::span<const Vec2> poly) {
  bool inside = false;
  for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
    const Vec2 a = poly[i];
    const Vec2 b = poly[j];
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < x) inside = !inside;
    }
  }
  return inside;
}

// True when `s` enters the polygon or passes closer than `margin` to it.
// With margin 0 a segment that only touches the boundary leaves the cell
// free.
bool blocks_cell(const Segment& s, std::span<const Vec2> poly, double margin) {
  if (point_in_polygon(s.a, poly) || point_in_polygon(s.b, poly)) return true;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Segment edge{poly[i], poly[(i + 1) % poly.size()]};
    if (segments_properly_cross(s, edge)) return true;
    if (margin > 0.0 && segment_segment_distance(s, edge) < margin) return true;
  }
  return false;
}

// Buckets segments (agent-relative) by the angle bins they can affect and
// sweeps each bin outwards until the first blocked cell.
OccupancyMask sweep_cells(std::span<const Segment> segments, double margin) {
  std::array<std::vector<int>, kAngleBins> candidates;
  std::vector<double> nearest(segments.size());
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const Segment& s = segments[i];
    const double dmin = point_segment_distance(kOrigin, s);
    nearest[i] = dmin;
    if (dmin > kMaskRange + margin + 1e-6) continue;
    double lo = 0.0;
    double span = 360.0;
    if (dmin > margin + 1e-9 && norm(s.a) > 0.0 && norm(s.b) > 0.0) {
      const double ba = bearing_of(s.a);
      const double diff = signed_angle_diff(ba, bearing_of(s.b));
      const double widen = margin > 0.0 ? rad_to_deg(std::asin(std::min(1.0, margin / dmin))) : 0.0;
      lo = (diff >= 0.0 ? ba : ba + diff) - widen - 1e-6;
      span = std::abs(diff) + 2.0 * widen + 2e-6;
    }
    if (span >= 360.0) {
      for (auto& c : candidates) c.push_back(static_cast<int>(i));
      continue;
    }
    const int first = static_cast<int>(std::floor(lo / kAngleBinWidth));
    const int last = static_cast<int>(std::floor((lo + span) / kAngleBinWidth));
    for (int b = first; b <= last; ++b) {
      candidates[((b % kAngleBins) + kAngleBins) % kAngleBins].push_back(static_cast<int>(i));
    }
  }

  OccupancyMask mask;
  for (int a = 0; a < kAngleBins; ++a) {
    int prefix = 0;
    for (int k = 1; k <= kDistanceBins; ++k) {
      const auto poly = cell_polygon(a, k);
      const double reach = k * kDistanceBinSize + margin;
      bool blocked = false;
      for (int idx : candidates[a]) {
        if (nearest[idx] > reach) continue;
        if (blocks_cell(segments[idx], poly, margin)) {
          blocked = true;
          break;
        }
      }
      if (blocked) break;
      prefix = k;
    }
    mask.set_free_prefix(a, prefix);
  }
  return mask;
}

constexpr double kMinSurfaceAngleDeg = 5.0;

bool collinear(Vec2 p, Vec2 q, Vec2 r) {
  const Vec2 along = r - q;
  const double len = norm(along);
  if (len < 1e-12) return false;
  return std::abs(cross(along, p - q)) / len <= 0.005 + 0.002 * norm(p);
}

// Angle test for a lone pair of hits: jump edges between two surfaces run
// nearly radially, real surfaces meet the ray at a clear angle.
bool meets_ray_at_angle(Vec2 p0, Vec2 p1) {
  const Vec2 along = p1 - p0;
  const double len = norm(along);
  const double r = std::max(norm(p0), norm(p1));
  if (len < 1e-12 || r < 1e-12) return false;
  const Vec2 far = norm(p0) > norm(p1) ? p0 : p1;
  const double sin_angle = std::abs(cross(along, far)) / (len * norm(far));
  return sin_angle >= std::sin(deg_to_rad(kMinSurfaceAngleDeg));
}

// Whether p0 -> p1 looks like a real surface rather than the jump edge
// between two surfaces at a depth discontinuity.
bool plausible_surface(Vec2 prev, Vec2 p0, Vec2 p1) {
  return collinear(prev, p0, p1) || meets_ray_at_angle(p0, p1);
}

// Point where the line through p0 -> p1, continued past p1, meets the ray
// from the agent along `dir`.
bool extend_to_ray(Vec2 prev, Vec2 p0, Vec2 p1, Vec2 dir, double limit, Vec2& out) {
  if (!plausible_surface(prev, p0, p1)) return false;
  const Vec2 along = p1 - p0;
  const double denom = cross(dir, along);
  if (std::abs(denom) < 1e-12 || norm(along) < 1e-12) return false;
  const double t = cross(p1, along) / denom;
  const double s = cross(p1, dir) / denom;
  if (!(t > 0.0) || t > limit || s < 0.0) return false;
  out = dir * t;
  return true;
}

}  // namespace

OccupancyMask OccupancyMask::all_free() {
  OccupancyMask m;
  m.free_prefix_.fill(kDistanceBins);
  return m;
}

OccupancyMask OccupancyMask::from_rows(const std::vector<std::string>& rows) {
  if (rows.size() != static_cast<std::size_t>(kAngleBins)) {
    throw InvalidInputError("occupancy mask needs 120 rows");
  }
  OccupancyMask m;
  for (int a = 0; a < kAngleBins; ++a) {
    const std::string& row = rows[a];
    if (row.size() != static_cast<std::size_t>(kDistanceBins)) {
      throw InvalidInputError("occupancy mask rows need 12 cells");
    }
    const auto first_occupied = row.find('0');
    const int prefix = first_occupied == std::string::npos ? kDistanceBins
                                                          : static_cast<int>(first_occupied);
    for (int k = 0; k < kDistanceBins; ++k) {
      const char c = row[k];
      if (c != '0' && c != '1') throw InvalidInputError("occupancy mask cells must be 0 or 1");
      if ((c == '1') != (k < prefix)) {
        throw InvalidInputError("occupancy mask row " + std::to_string(a) + " is not shadowed");
      }
    }
    m.free_prefix_[a] = static_cast<std::uint8_t>(prefix);
  }
  return m;
}

std::vector<std::string> OccupancyMask::rows() const {
  std::vector<std::string> out;
  out.reserve(kAngleBins);
  for (int a = 0; a < kAngleBins; ++a) {
    out.push_back(std::string(free_prefix_[a], '1') +
                  std::string(kDistanceBins - free_prefix_[a], '0'));
  }
  return out;
}

void OccupancyMask::set_free_prefix(int angle_bin, int count) {
  free_prefix_[angle_bin] = static_cast<std::uint8_t>(std::clamp(count, 0, kDistanceBins));
}

void OccupancyMask::occupy(int angle_bin, int distance_bin) {
  if (distance_bin < 1 || distance_bin > kDistanceBins) return;
  free_prefix_[angle_bin] =
      std::min<std::uint8_t>(free_prefix_[angle_bin], static_cast<std::uint8_t>(distance_bin - 1));
}

int OccupancyMask::free_cell_count() const {
  int n = 0;
  for (auto p : free_prefix_) n += p;
  return n;
}

std::array<Vec2, 6> cell_polygon(int angle_bin, int distance_bin) {
  const double lo = angle_bin * kAngleBinWidth;
  const double mid = lo + kAngleBinWidth / 2.0;
  const double hi = lo + kAngleBinWidth;
  const double r0 = (distance_bin - 1) * kDistanceBinSize;
  const double r1 = distance_bin * kDistanceBinSize;
  return {heading_vector(lo) * r0, heading_vector(lo) * r1,  heading_vector(mid) * r1,
          heading_vector(hi) * r1, heading_vector(hi) * r0, heading_vector(mid) * r0};
}

OccupancyMask depth_to_occupancy(const world::DepthPanorama& panorama, double margin) {
  const int n = panorama.ray_count();
  std::vector<Vec2> dirs(n);
  std::vector<Vec2> hits(n);
  for (int b = 0; b < n; ++b) {
    dirs[b] = heading_vector(panorama.ray_angle(b));
    hits[b] = dirs[b] * panorama.depth(b);
  }
  const double limit = 2.0 * panorama.max_depth();
  std::vector<Segment> surface;
  surface.reserve(3 * static_cast<std::size_t>(n));
  for (int b = 0; b < n; ++b) {
    const int next = (b + 1) % n;
    surface.push_back({hits[b], hits[next]});
    const bool jump = !collinear(hits[(b + n - 1) % n], hits[b], hits[next]) &&
                      !collinear(hits[(b + 2) % n], hits[next], hits[b]) &&
                      !meets_ray_at_angle(hits[b], hits[next]);
    if (jump) {
      // Anything hidden in this wedge lies beyond the nearer hit, so the far
      // ray from that depth outwards bounds it.
      const bool b_near = panorama.depth(b) < panorama.depth(next);
      const int far_ray = b_near ? next : b;
      const double near_depth = std::min(panorama.depth(b), panorama.depth(next));
      surface.push_back({dirs[far_ray] * near_depth, hits[far_ray]});
    }
    // Continue each side's surface into the wedge, which keeps convex
    // corners and wall ends that fall between two rays.
    Vec2 e;
    if (extend_to_ray(hits[(b + n - 2) % n], hits[(b + n - 1) % n], hits[b], dirs[next],
                      limit, e)) {
      surface.push_back({hits[b], e});
    }
    if (extend_to_ray(hits[(b + 3) % n], hits[(b + 2) % n], hits[next], dirs[b], limit, e)) {
      surface.push_back({e, hits[next]});
    }
  }
  return sweep_cells(surface, margin);
}

OccupancyMask oracle_occupancy(const world::Floorplan& plan, const world::Pose& pose,
                               double clearance) {
  std::vector<Segment> walls;
  walls.reserve(plan.walls.size());
  for (const Segment& w : plan.walls) {
    walls.push_back({w.a - pose.position, w.b - pose.position});
  }
  return sweep_cells(walls, clearance);
}

double max_free_distance(const OccupancyMask& mask, double heading) {
  return mask.free_prefix(angle_bin_of(heading)) * kDistanceBinSize;
}

}  // namespace vlncm::perception
