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
#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"
#include "vlncm/perception/occupancy.hpp"
#include "vlncm/world/floorplan.hpp"
#include "vlncm/world/raycast.hpp"

namespace vlncm::perception {

struct OmpSample {
  world::DepthPanorama panorama;
  OccupancyMask mask;
  world::Pose pose;
  std::string floorplan_id;
};

nlohmann::json to_json(const OmpSample& sample);
OmpSample omp_sample_from_json(const nlohmann::json& j);

// Draws `samples_per_world` free poses per floorplan and writes one JSON
// record per line pairing the rendered panorama with the oracle mask.
// Returns the number of records written.
std::size_t emit_omp_dataset(const std::vector<world::Floorplan>& floorplans,
                             int samples_per_world, std::uint64_t seed,
                             const std::filesystem::path& output,
                             int rays_per_view = world::kDefaultRaysPerView);

struct DatasetCheck {
  std::size_t records = 0;
  std::size_t mismatches = 0;
};

// Recomputes every record's oracle mask and counts disagreements.
DatasetCheck verify_omp_dataset(const std::vector<world::Floorplan>& floorplans,
                                const std::filesystem::path& path);

}  // namespace vlncm::perception
