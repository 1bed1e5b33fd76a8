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

#include "vlncm/world/io.hpp"

#include <atomic>
#include <cstdint>
#include <fstream>
#include <functional>
#include <sstream>
#include <system_error>
#include <thread>

#include "vlncm/error.hpp"

namespace vlncm::world {

using nlohmann::json;

json to_json(const Pose& pose) {
  return {{"x", pose.position.x}, {"y", pose.position.y}, {"heading", pose.heading}};
}

Pose pose_from_json(const json& j) {
  return make_pose(j.at("x").get<double>(), j.at("y").get<double>(),
                   j.at("heading").get<double>());
}

json to_json(const Floorplan& plan) {
  json walls = json::array();
  for (const Segment& w : plan.walls) walls.push_back({w.a.x, w.a.y, w.b.x, w.b.y});
  json landmarks = json::array();
  for (const Landmark& l : plan.landmarks) {
    landmarks.push_back(
        {{"label", l.label}, {"x", l.position.x}, {"y", l.position.y}, {"radius", l.radius}});
  }
  return {{"id", plan.id},
          {"bounds", {plan.bounds.min.x, plan.bounds.min.y, plan.bounds.max.x, plan.bounds.max.y}},
          {"walls", std::move(walls)},
          {"landmarks", std::move(landmarks)}};
}

Floorplan floorplan_from_json(const json& j) {
  try {
    Floorplan plan;
    plan.id = j.at("id").get<std::string>();
    const auto& b = j.at("bounds");
    plan.bounds = Rect{{b.at(0).get<double>(), b.at(1).get<double>()},
                       {b.at(2).get<double>(), b.at(3).get<double>()}};
    for (const auto& w : j.at("walls")) {
      plan.walls.push_back({{w.at(0).get<double>(), w.at(1).get<double>()},
                            {w.at(2).get<double>(), w.at(3).get<double>()}});
    }
    for (const auto& l : j.at("landmarks")) {
      plan.landmarks.push_back({l.at("label").get<std::string>(),
                                {l.at("x").get<double>(), l.at("y").get<double>()},
                                l.value("radius", 0.0)});
    }
    validate(plan);
    return plan;
  } catch (const json::exception& e) {
    throw InvalidInputError(std::string("malformed floorplan: ") + e.what());
  }
}

json to_json(const Episode& episode) {
  return {{"id", episode.id},
          {"floorplan_id", episode.floorplan_id},
          {"start", to_json(episode.start)},
          {"goal", {{"x", episode.goal.x}, {"y", episode.goal.y}}},
          {"instruction", episode.instruction},
          {"shortest_path_length", episode.shortest_path_length}};
}

Episode episode_from_json(const json& j) {
  try {
    return Episode{j.at("id").get<std::string>(),
                   j.at("floorplan_id").get<std::string>(),
                   pose_from_json(j.at("start")),
                   {j.at("goal").at("x").get<double>(), j.at("goal").at("y").get<double>()},
                   j.at("instruction").get<std::string>(),
                   j.at("shortest_path_length").get<double>()};
  } catch (const json::exception& e) {
    throw InvalidInputError(std::string("malformed episode: ") + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  static std::atomic<std::uint64_t> counter{0};
  const std::uint64_t tag =
      std::hash<std::thread::id>{}(std::this_thread::get_id()) ^ (counter.fetch_add(1) << 1);
  const std::filesystem::path tmp = path.string() + ".tmp" + std::to_string(tag % 1000000007ULL);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + tmp.string() + "' for writing");
    out << content;
    if (!out.flush()) throw IoError("failed writing '" + tmp.string() + "'");
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoError("cannot move output into place at '" + path.string() + "'");
  }
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_floorplan(const Floorplan& plan, const std::filesystem::path& path) {
  write_text_file(path, to_json(plan).dump(2) + "\n");
}

Floorplan read_floorplan(const std::filesystem::path& path) {
  try {
    return floorplan_from_json(json::parse(read_text_file(path)));
  } catch (const json::parse_error& e) {
    throw InvalidInputError("cannot parse '" + path.string() + "': " + e.what());
  }
}

void write_episodes(const std::vector<Episode>& episodes, const std::filesystem::path& path) {
  json arr = json::array();
  for (const Episode& e : episodes) arr.push_back(to_json(e));
  write_text_file(path, arr.dump(2) + "\n");
}

std::vector<Episode> read_episodes(const std::filesystem::path& path) {
  json arr;
  try {
    arr = json::parse(read_text_file(path));
  } catch (const json::parse_error& e) {
    throw InvalidInputError("cannot parse '" + path.string() + "': " + e.what());
  }
  if (!arr.is_array()) throw InvalidInputError("episode file must hold an array");
  std::vector<Episode> out;
  for (const auto& j : arr) out.push_back(episode_from_json(j));
  return out;
}

}  // namespace vlncm::world
