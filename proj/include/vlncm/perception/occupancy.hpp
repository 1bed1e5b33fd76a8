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

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "vlncm/world/floorplan.hpp"
#include "vlncm/world/raycast.hpp"

namespace vlncm::perception {

inline constexpr int kAngleBins = 120;
inline constexpr int kDistanceBins = 12;
inline constexpr double kAngleBinWidth = 3.0;
inline constexpr double kDistanceBinSize = 0.25;
inline constexpr double kMaskRange = kDistanceBins * kDistanceBinSize;

// Polar free-space grid around the agent, absolute-north aligned. Angle bin
// a covers headings [3a, 3a + 3); distance bin k in 1..12 covers
// ((k - 1) * 0.25, k * 0.25]. Each angle bin is stored as the length of its
// free prefix, so shadowing (no free cell beyond an occupied one) holds by
// construction.
class OccupancyMask {
 public:
  // All cells occupied.
  OccupancyMask() { free_prefix_.fill(0); }

  static OccupancyMask all_free();

  // Parses 120 strings of 12 '1'/'0' characters. Throws InvalidInputError on
  // a malformed or non-shadowed row.
  static OccupancyMask from_rows(const std::vector<std::string>& rows);
  std::vector<std::string> rows() const;

  bool is_free(int angle_bin, int distance_bin) const {
    return distance_bin >= 1 && distance_bin <= free_prefix_[angle_bin];
  }
  int free_prefix(int angle_bin) const { return free_prefix_[angle_bin]; }
  void set_free_prefix(int angle_bin, int count);

  // Marks cell (a, k) occupied, which also occupies every farther cell.
  void occupy(int angle_bin, int distance_bin);

  int free_cell_count() const;

  bool operator==(const OccupancyMask&) const = default;

 private:
  std::array<std::uint8_t, kAngleBins> free_prefix_;
};

inline int angle_bin_of(double heading) {
  const int a = static_cast<int>(normalize_heading(heading) / kAngleBinWidth);
  return a >= kAngleBins ? kAngleBins - 1 : a;
}

// Region covered by cell (a, k) relative to the agent: an annular sector
// approximated by a hexagon whose radial edges are exact.
std::array<Vec2, 6> cell_polygon(int angle_bin, int distance_bin);

// Geometric open-map estimate from depth alone. The visible surface is
// rebuilt from the ray hits (chords between neighbouring hits plus each
// surface extended one ray into its neighbour's wedge), and a cell is free
// when it lies inside that surface with at least `margin` clearance.
OccupancyMask depth_to_occupancy(const world::DepthPanorama& panorama, double margin = 0.0);

// Ground truth: a cell is free when its whole region keeps
// `clearance` from every wall and all nearer cells in the bin are free.
OccupancyMask oracle_occupancy(const world::Floorplan& plan, const world::Pose& pose,
                               double clearance = world::kAgentRadius);

// Largest run of free cells from the agent along `heading`, in metres.
double max_free_distance(const OccupancyMask& mask, double heading);

// Pluggable predictor so a learned model can replace the geometric one.
class OccupancyPredictor {
 public:
  virtual ~OccupancyPredictor() = default;
  virtual OccupancyMask predict(const world::DepthPanorama& panorama) const = 0;
};

class GeometricOccupancyPredictor final : public OccupancyPredictor {
 public:
  explicit GeometricOccupancyPredictor(double margin = world::kAgentRadius) : margin_(margin) {}
  OccupancyMask predict(const world::DepthPanorama& panorama) const override {
    return depth_to_occupancy(panorama, margin_);
  }

 private:
  double margin_;
};

}  // namespace vlncm::perception
