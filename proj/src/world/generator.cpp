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

#include "vlncm/world/generator.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>

#include "vlncm/error.hpp"
#include "vlncm/world/shortest_path.hpp"

namespace vlncm::world {
namespace {

constexpr double kGrid = 0.05;         // all generated coordinates snap to this
constexpr double kDoorInset = 1.0;     // doorway distance from room corners
constexpr double kBoundsMargin = 0.5;
constexpr double kLandmarkInset = 1.0;
constexpr double kStartInset = 0.5;
constexpr int kAttemptsPerEpisode = 200;

struct Room {
  double x0, y0, x1, y1;
};

class GridRng {
 public:
  explicit GridRng(std::uint64_t seed) : rng_(seed) {}

  // Uniform over multiples of kGrid in [lo, hi].
  double snapped(double lo, double hi) {
    const long a = static_cast<long>(std::ceil(lo / kGrid - 1e-9));
    const long b = static_cast<long>(std::floor(hi / kGrid + 1e-9));
    if (b < a) throw GenerationError("empty sampling interval");
    std::uniform_int_distribution<long> d(a, b);
    return static_cast<double>(d(rng_)) * kGrid;
  }
  int integer(int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    return d(rng_);
  }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

const std::set<std::string>& reserved_words() {
  static const std::set<std::string> words = {"the", "and", "then", "past", "to", "at"};
  return words;
}

void check_label(const std::string& label) {
  if (label.empty()) throw GenerationError("vocabulary contains an empty label");
  std::istringstream in(label);
  std::string word;
  while (in >> word) {
    if (reserved_words().count(word)) {
      throw GenerationError("vocabulary label '" + label + "' uses reserved word '" + word + "'");
    }
  }
  for (char c : label) {
    if (c == ',' || c == '.' || c == ';' || std::isupper(static_cast<unsigned char>(c))) {
      throw GenerationError("vocabulary label '" + label + "' must be lowercase words");
    }
  }
}

void check_params(const GenerationParams& p, std::size_t vocabulary_size) {
  if (p.room_count < 2 || p.room_count > 8) {
    throw GenerationError("room count must be in [2, 8]");
  }
  if (p.corridor_width < 1.0) throw GenerationError("corridor width must be at least 1.0 m");
  if (p.min_room_size > p.max_room_size) throw GenerationError("min room size exceeds max");
  if (p.min_room_size < p.corridor_width + 2 * kDoorInset) {
    throw GenerationError("rooms are too small for the corridor width");
  }
  if (p.min_room_size < 2 * kLandmarkInset + 0.5) throw GenerationError("rooms are too small");
  if (p.min_corridor_length <= 0.0 || p.min_corridor_length > p.max_corridor_length) {
    throw GenerationError("invalid corridor length range");
  }
  if (p.episodes < 0) throw GenerationError("episode count must be non-negative");
  if (p.max_route_rooms < 1) throw GenerationError("max_route_rooms must be at least 1");
  if (vocabulary_size < static_cast<std::size_t>(2 * p.room_count - 1)) {
    throw GenerationError("vocabulary too small for the number of landmarks");
  }
}

void add_vertical_wall(std::vector<Segment>& walls, double x, double y0, double y1,
                       const std::vector<std::pair<double, double>>& gaps) {
  double cursor = y0;
  for (const auto& [lo, hi] : gaps) {
    walls.push_back({{x, cursor}, {x, lo}});
    cursor = hi;
  }
  walls.push_back({{x, cursor}, {x, y1}});
}

}  // namespace

std::vector<std::string> default_vocabulary() {
  return {"yellow door",   "red chair",     "blue lamp",       "green table",
          "white sofa",    "black piano",   "orange plant",    "purple painting",
          "brown cabinet", "gray shelf",    "pink rug",        "silver clock",
          "golden mirror", "wooden bench",  "striped curtain", "tall bookcase"};
}

std::string instruction_from_route(const std::vector<std::string>& labels, int variant) {
  if (labels.empty()) throw InvalidInputError("route has no landmarks");
  std::string out;
  const std::size_t n = labels.size();
  switch (variant % 3) {
    case 0:
      if (n == 1) return "go to the " + labels[0] + " and stop";
      out = "walk past the " + labels[0];
      for (std::size_t i = 1; i + 1 < n; ++i) out += ", then past the " + labels[i];
      return out + ", then go to the " + labels[n - 1] + " and stop";
    case 1:
      if (n == 1) return "stop at the " + labels[0];
      out = "head past the " + labels[0];
      for (std::size_t i = 1; i + 1 < n; ++i) out += ", continue past the " + labels[i];
      return out + " and stop at the " + labels[n - 1];
    default:
      if (n == 1) return "walk to the " + labels[0] + " and wait there";
      out = "go past the " + labels[0];
      for (std::size_t i = 1; i + 1 < n; ++i) out += " then past the " + labels[i];
      return out + ", then walk to the " + labels[n - 1] + " and stop";
  }
}

GeneratedWorld generate_world(std::uint64_t seed, const GenerationParams& params) {
  std::vector<std::string> vocabulary =
      params.vocabulary.empty() ? default_vocabulary() : params.vocabulary;
  check_params(params, vocabulary.size());
  for (const auto& label : vocabulary) check_label(label);

  GridRng rng(seed);
  const double cw = params.corridor_width;
  const double need = cw + 2 * kDoorInset;
  const int n = params.room_count;

  std::vector<Room> rooms;
  std::vector<double> door_y;  // corridor floor between room i and i + 1
  for (int i = 0; i < n; ++i) {
    const double w = rng.snapped(params.min_room_size, params.max_room_size);
    const double h = rng.snapped(params.min_room_size, params.max_room_size);
    if (i == 0) {
      rooms.push_back({0.0, 0.0, w, h});
      continue;
    }
    const Room& prev = rooms.back();
    const double length = rng.snapped(params.min_corridor_length, params.max_corridor_length);
    const double y0 = rng.snapped(prev.y0 + need - h, prev.y1 - need);
    const Room room{prev.x1 + length, y0, prev.x1 + length + w, y0 + h};
    const double lo = std::max(prev.y0, room.y0) + kDoorInset;
    const double hi = std::min(prev.y1, room.y1) - kDoorInset - cw;
    door_y.push_back(rng.snapped(lo, hi));
    rooms.push_back(room);
  }

  Rect bounds{{rooms[0].x0, rooms[0].y0}, {rooms[0].x1, rooms[0].y1}};
  for (const Room& r : rooms) {
    bounds.min.y = std::min(bounds.min.y, r.y0);
    bounds.max.y = std::max(bounds.max.y, r.y1);
    bounds.max.x = std::max(bounds.max.x, r.x1);
  }
  bounds.min = bounds.min - Vec2{kBoundsMargin, kBoundsMargin};
  bounds.max = bounds.max + Vec2{kBoundsMargin, kBoundsMargin};
  if (bounds.max.x - bounds.min.x > params.max_extent ||
      bounds.max.y - bounds.min.y > params.max_extent) {
    throw GenerationError("rooms do not fit within the maximum extent of " +
                          std::to_string(params.max_extent) + " m");
  }

  Floorplan plan;
  plan.id = params.world_id;
  plan.bounds = bounds;
  for (int i = 0; i < n; ++i) {
    const Room& r = rooms[i];
    plan.walls.push_back({{r.x0, r.y0}, {r.x1, r.y0}});
    plan.walls.push_back({{r.x0, r.y1}, {r.x1, r.y1}});
    std::vector<std::pair<double, double>> west_gap;
    std::vector<std::pair<double, double>> east_gap;
    if (i > 0) west_gap.push_back({door_y[i - 1], door_y[i - 1] + cw});
    if (i + 1 < n) east_gap.push_back({door_y[i], door_y[i] + cw});
    add_vertical_wall(plan.walls, r.x0, r.y0, r.y1, west_gap);
    add_vertical_wall(plan.walls, r.x1, r.y0, r.y1, east_gap);
    if (i + 1 < n) {
      const Room& next = rooms[i + 1];
      plan.walls.push_back({{r.x1, door_y[i]}, {next.x0, door_y[i]}});
      plan.walls.push_back({{r.x1, door_y[i] + cw}, {next.x0, door_y[i] + cw}});
    }
  }

  std::shuffle(vocabulary.begin(), vocabulary.end(), rng.engine());
  // Interior landmarks first: landmark 0 seeds free-space reachability.
  std::vector<std::string> interior_label(n);
  std::vector<std::string> door_label(n - 1);
  std::size_t next_label = 0;
  for (int i = 0; i < n; ++i) {
    const Room& r = rooms[i];
    interior_label[i] = vocabulary[next_label++];
    plan.landmarks.push_back({interior_label[i],
                              {rng.snapped(r.x0 + kLandmarkInset, r.x1 - kLandmarkInset),
                               rng.snapped(r.y0 + kLandmarkInset, r.y1 - kLandmarkInset)},
                              params.landmark_radius});
  }
  for (int i = 0; i + 1 < n; ++i) {
    door_label[i] = vocabulary[next_label++];
    plan.landmarks.push_back(
        {door_label[i], {rooms[i].x1, door_y[i] + cw / 2.0}, params.landmark_radius});
  }
  validate(plan);

  GeneratedWorld world;
  const FreeSpaceGrid grid(plan);
  for (int e = 0; e < params.episodes; ++e) {
    bool placed = false;
    for (int attempt = 0; attempt < kAttemptsPerEpisode && !placed; ++attempt) {
      const int s = rng.integer(0, n - 2);
      const int span = rng.integer(1, std::min(params.max_route_rooms, n - 1 - s));
      const int g = s + span;
      const Room& r = rooms[s];
      const Pose start{{rng.snapped(r.x0 + kStartInset, r.x1 - kStartInset),
                        rng.snapped(r.y0 + kStartInset, r.y1 - kStartInset)},
                       rng.integer(0, 23) * kTurnStep};
      const int variant = rng.integer(0, 2);
      const Vec2 goal = plan.landmarks[g].position;
      const auto length = grid.path_length(start.position, goal);
      if (!length || *length < params.min_goal_distance) continue;

      std::vector<std::string> route;
      for (int j = s; j < g; ++j) route.push_back(door_label[j]);
      route.push_back(interior_label[g]);

      char id[32];
      std::snprintf(id, sizeof(id), "_ep%02d", e);
      world.episodes.push_back(Episode{plan.id + id, plan.id, start, goal,
                                       instruction_from_route(route, variant),
                                       std::max(*length, distance(start.position, goal))});
      world.routes.push_back(std::move(route));
      placed = true;
    }
    if (!placed) throw GenerationError("could not place episode " + std::to_string(e));
  }
  world.floorplan = std::move(plan);
  return world;
}

}  // namespace vlncm::world
