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

#include "vlncm/perception/dataset.hpp"

#include <map>
#include <random>
#include <sstream>

#include "vlncm/error.hpp"
#include "vlncm/seed.hpp"
#include "vlncm/world/io.hpp"
#include "vlncm/world/shortest_path.hpp"

namespace vlncm::perception {

using nlohmann::json;

json to_json(const OmpSample& sample) {
  json depth = json::array();
  for (int v = 0; v < world::kViewCount; ++v) {
    const auto view = sample.panorama.view(v);
    depth.push_back(std::vector<double>(view.begin(), view.end()));
  }
  return {{"floorplan_id", sample.floorplan_id},
          {"pose", world::to_json(sample.pose)},
          {"depth", std::move(depth)},
          {"mask", sample.mask.rows()}};
}

OmpSample omp_sample_from_json(const json& j) {
  try {
    const auto& depth = j.at("depth");
    if (!depth.is_array() || depth.size() != static_cast<std::size_t>(world::kViewCount)) {
      throw InvalidInputError("OMP record needs 12 depth views");
    }
    const int rays = static_cast<int>(depth.at(0).size());
    std::vector<double> flat;
    for (const auto& view : depth) {
      if (view.size() != static_cast<std::size_t>(rays)) {
        throw InvalidInputError("OMP record views differ in ray count");
      }
      for (const auto& d : view) flat.push_back(d.get<double>());
    }
    return OmpSample{world::DepthPanorama(rays, std::move(flat)),
                     OccupancyMask::from_rows(j.at("mask").get<std::vector<std::string>>()),
                     world::pose_from_json(j.at("pose")),
                     j.at("floorplan_id").get<std::string>()};
  } catch (const json::exception& e) {
    throw InvalidInputError(std::string("malformed OMP record: ") + e.what());
  }
}

std::size_t emit_omp_dataset(const std::vector<world::Floorplan>& floorplans,
                             int samples_per_world, std::uint64_t seed,
                             const std::filesystem::path& output, int rays_per_view) {
  if (floorplans.empty()) throw InvalidInputError("OMP dataset needs at least one floorplan");
  if (samples_per_world < 1) throw InvalidInputError("samples_per_world must be at least 1");
  std::ostringstream out;
  std::size_t written = 0;
  for (std::size_t w = 0; w < floorplans.size(); ++w) {
    const world::Floorplan& plan = floorplans[w];
    const world::FreePoseSampler sampler(plan);
    std::mt19937_64 rng(derive_seed(seed, plan.id));
    for (int i = 0; i < samples_per_world; ++i) {
      const world::Pose pose = sampler.sample(rng);
      const OmpSample sample{world::render_depth_panorama(plan, pose, rays_per_view),
                             oracle_occupancy(plan, pose), pose, plan.id};
      out << to_json(sample).dump() << '\n';
      ++written;
    }
  }
  world::write_text_file(output, out.str());
  return written;
}

DatasetCheck verify_omp_dataset(const std::vector<world::Floorplan>& floorplans,
                                const std::filesystem::path& path) {
  std::map<std::string, const world::Floorplan*> by_id;
  for (const auto& plan : floorplans) by_id[plan.id] = &plan;
  std::istringstream in(world::read_text_file(path));
  DatasetCheck check;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw InvalidInputError("cannot parse OMP record: " + std::string(e.what()));
    }
    const OmpSample sample = omp_sample_from_json(j);
    ++check.records;
    const auto it = by_id.find(sample.floorplan_id);
    if (it == by_id.end() || !(oracle_occupancy(*it->second, sample.pose) == sample.mask)) {
      ++check.mismatches;
    }
  }
  return check;
}

}  // namespace vlncm::perception
