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

#include "vlncm/eval/report.hpp"

#include <cstdio>
#include <map>

#include "json.hpp"
#include "vlncm/error.hpp"
#include "vlncm/world/io.hpp"

namespace vlncm::eval {

using nlohmann::json;

namespace {

std::string fixed4(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

std::string row(const std::string& name, const std::vector<std::string>& cells) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%-22s", name.c_str());
  std::string out = buf;
  for (const auto& c : cells) {
    std::snprintf(buf, sizeof(buf), "%12s", c.c_str());
    out += buf;
  }
  return out + "\n";
}

bool is_baseline(const std::string& label) {
  return label == "random" || label == "handcrafted";
}

json episode_json(const EpisodeResult& r) {
  return {{"config", r.config_label},
          {"episode_id", r.episode_id},
          {"success", r.success},
          {"stopped", r.stopped},
          {"path_length", r.path_length},
          {"shortest_path_length", r.shortest_path_length},
          {"collisions", r.collisions},
          {"steps", r.steps},
          {"final_distance_to_goal", r.final_distance_to_goal},
          {"final_pose", world::to_json(r.final_pose)},
          {"spots", r.spots},
          {"failure_reason", r.failure_reason ? json(*r.failure_reason) : json(nullptr)}};
}

json trajectory_json(const EpisodeResult& r) {
  json steps = json::array();
  for (const StepRecord& s : r.trajectory) {
    json j = {{"step", s.step},
              {"action", s.action},
              {"x", s.pose.position.x},
              {"y", s.pose.position.y},
              {"heading", s.pose.heading},
              {"collided", s.collided}};
    if (s.view >= 0) j["view"] = s.view;
    if (!s.spot.empty()) j["spot"] = s.spot;
    if (!s.decision.empty()) {
      j["similarity"] = s.similarity;
      j["decision"] = s.decision;
    }
    steps.push_back(std::move(j));
  }
  return {{"config", r.config_label}, {"episode_id", r.episode_id}, {"steps", std::move(steps)}};
}

}  // namespace

std::string method_name(const std::string& config_label) {
  static const std::map<std::string, std::string> names = {
      {"full", "VLN-CM"},          {"no-omp", "-OMP"},
      {"no-asp", "-ASP"},          {"no-omp-asp", "-OMP & ASP"},
      {"random", "Random Agent"},  {"handcrafted", "Hand-Crafted Agent"}};
  auto it = names.find(config_label);
  return it == names.end() ? config_label : it->second;
}

std::string results_csv(const std::vector<MetricsSummary>& summaries) {
  std::string out = "config,sr,spl,collision_rate,n_episodes\n";
  for (const auto& s : summaries) {
    out += s.config_label + "," + fixed4(s.sr) + "," + fixed4(s.spl) + "," +
           fixed4(s.collision_rate) + "," + std::to_string(s.n_episodes) + "\n";
  }
  return out;
}

std::string report_text(const std::vector<MetricsSummary>& summaries) {
  std::string out;
  bool any_baseline = false;
  for (const auto& s : summaries) any_baseline = any_baseline || is_baseline(s.config_label);

  if (any_baseline) {
    out += "Table 1. Comparison with baselines\n";
    out += row("Method", {"SR", "SPL", "Episodes"});
    for (const auto& s : summaries) {
      if (!is_baseline(s.config_label) && s.config_label != "full") continue;
      out += row(method_name(s.config_label),
                 {fixed4(s.sr), fixed4(s.spl), std::to_string(s.n_episodes)});
    }
    out += "\n";
  }
  out += "Table 2. Ablation study\n";
  out += row("Method", {"SR", "SPL", "Collision", "Episodes"});
  for (const auto& s : summaries) {
    if (is_baseline(s.config_label)) continue;
    out += row(method_name(s.config_label), {fixed4(s.sr), fixed4(s.spl),
                                             fixed4(s.collision_rate),
                                             std::to_string(s.n_episodes)});
  }
  return out;
}

void write_report(const std::vector<MetricsSummary>& summaries,
                  const std::vector<EpisodeResult>& results, const std::filesystem::path& dir) {
  if (summaries.empty() || results.empty()) throw InvalidInputError("nothing to report");
  std::string episodes;
  std::string trajectories;
  for (const auto& r : results) {
    episodes += episode_json(r).dump() + "\n";
    trajectories += trajectory_json(r).dump() + "\n";
  }
  world::write_text_file(dir / "results.csv", results_csv(summaries));
  world::write_text_file(dir / "episodes.jsonl", episodes);
  world::write_text_file(dir / "trajectories.jsonl", trajectories);
  world::write_text_file(dir / "report.txt", report_text(summaries));
}

}  // namespace vlncm::eval
