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

#include <filesystem>
#include <vector>

#include "json.hpp"
#include "vlncm/world/floorplan.hpp"

namespace vlncm::world {

nlohmann::json to_json(const Floorplan& plan);
Floorplan floorplan_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Episode& episode);
Episode episode_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Pose& pose);
Pose pose_from_json(const nlohmann::json& j);

void write_floorplan(const Floorplan& plan, const std::filesystem::path& path);
Floorplan read_floorplan(const std::filesystem::path& path);

void write_episodes(const std::vector<Episode>& episodes, const std::filesystem::path& path);
std::vector<Episode> read_episodes(const std::filesystem::path& path);

// Writes `content` via a sibling temporary file and rename, so readers never
// observe a partial file. Throws IoError with the path on failure.
void write_text_file(const std::filesystem::path& path, const std::string& content);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace vlncm::world
