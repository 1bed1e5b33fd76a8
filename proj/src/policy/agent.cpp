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

#include "vlncm/policy/agent.hpp"

#include <optional>

#include "vlncm/error.hpp"
#include "vlncm/policy/baselines.hpp"
#include "vlncm/policy/planning.hpp"
#include "vlncm/policy/view_selection.hpp"
#include "vlncm/world/motion.hpp"
#include "vlncm/world/raycast.hpp"

namespace vlncm::policy {

AgentConfig ablation_variant(bool use_omp, bool use_asp) {
  AgentConfig config;
  config.use_omp = use_omp;
  config.use_asp = use_asp;
  if (use_omp && use_asp) {
    config.label = "full";
  } else if (use_asp) {
    config.label = "no-omp";
  } else if (use_omp) {
    config.label = "no-asp";
  } else {
    config.label = "no-omp-asp";
  }
  return config;
}

AgentConfig random_baseline() {
  AgentConfig config;
  config.label = "random";
  config.kind = AgentKind::kRandom;
  return config;
}

AgentConfig handcrafted_baseline() {
  AgentConfig config;
  config.label = "handcrafted";
  config.kind = AgentKind::kHandcrafted;
  return config;
}

namespace {

class EpisodeRunner {
 public:
  EpisodeRunner(const world::Episode& episode, const world::Floorplan& plan,
                const AgentDeps& deps, const AgentConfig& config)
      : episode_(episode), plan_(plan), deps_(deps), config_(config), pose_(episode.start) {
    result_.episode_id = episode.id;
    result_.config_label = config.label;
    result_.shortest_path_length = episode.shortest_path_length;
  }

  eval::EpisodeResult run(std::uint64_t seed) {
    try {
      switch (config_.kind) {
        case AgentKind::kVlnCm: run_vlncm(); break;
        case AgentKind::kRandom: run_random(seed); break;
        case AgentKind::kHandcrafted: run_handcrafted(seed); break;
      }
    } catch (const Error& e) {
      result_.failure_reason = e.what();
      result_.path_length = 0.0;
    }
    result_.final_pose = pose_;
    result_.final_distance_to_goal = distance(pose_.position, episode_.goal);
    result_.success = !result_.failure_reason &&
                      eval::judge_success(pose_, episode_.goal, result_.stopped,
                                          config_.success_radius);
    return std::move(result_);
  }

 private:
  bool budget_left() const { return result_.steps < config_.step_budget; }

  // Executes one action and reports whether the position changed.
  bool execute(Action action, int view = -1, const std::string& spot = {}) {
    ++result_.steps;
    eval::StepRecord rec;
    rec.step = result_.steps;
    rec.action = std::string(to_string(action));
    rec.view = view;
    rec.spot = spot;
    bool moved = false;
    switch (action) {
      case Action::kForward: {
        const world::StepOutcome out = world::step_forward(plan_, pose_);
        if (out.collided) {
          ++result_.collisions;
          rec.collided = true;
        } else {
          result_.path_length += distance(pose_.position, out.pose.position);
          pose_ = out.pose;
          moved = true;
        }
        break;
      }
      case Action::kTurnLeft: pose_ = world::turn(pose_, world::TurnDirection::kLeft); break;
      case Action::kTurnRight: pose_ = world::turn(pose_, world::TurnDirection::kRight); break;
      case Action::kStop: result_.stopped = true; break;
    }
    rec.pose = pose_;
    result_.trajectory.push_back(std::move(rec));
    return moved;
  }

  void sense(const std::string& spot) {
    panorama_ = world::render_depth_panorama(plan_, pose_, config_.rays_per_view);
    observation_ = observe(plan_, pose_, *panorama_);
    scores_ = score_views(*deps_.scorer, observation_, spot);
  }

  void run_vlncm() {
    if (deps_.scorer == nullptr) throw InvalidInputError("no similarity scorer supplied");
    if (config_.use_omp && deps_.predictor == nullptr) {
      throw InvalidInputError("no occupancy predictor supplied");
    }
    ProgressState progress;
    if (config_.use_asp) {
      if (deps_.parser == nullptr) throw InvalidInputError("no instruction parser supplied");
      progress.spots = language::parse_instruction(*deps_.parser, episode_.instruction,
                                                   config_.max_spots, deps_.retry);
    } else {
      progress.spots = language::whole_instruction(episode_.instruction);
    }
    result_.spots = progress.spots.spots;

    sense(progress.current_spot());
    progress = update_progress(std::move(progress), max_score(scores_),
                               config_.progress_threshold).state;

    bool finished = false;
    while (budget_left() && !finished) {
      const int view = select_view(scores_, pose_.heading);
      const Waypoint wp = config_.use_omp
                              ? plan_waypoint(view, deps_.predictor->predict(*panorama_), scores_)
                              : plan_waypoint_blind(view);
      std::vector<Action> actions = decompose(wp, pose_.heading);
      if (actions.empty()) actions.push_back(Action::kTurnRight);

      const std::string spot = progress.current_spot();
      for (Action action : actions) {
        if (!budget_left()) break;
        if (!execute(action, view, spot)) continue;
        sense(progress.current_spot());
        ProgressUpdate update = update_progress(std::move(progress), max_score(scores_),
                                                config_.progress_threshold);
        progress = std::move(update.state);
        result_.trajectory.back().similarity = max_score(scores_);
        result_.trajectory.back().decision = std::string(to_string(update.decision));
        if (update.decision == ProgressDecision::kFinish) {
          finished = true;
          break;
        }
        if (update.decision == ProgressDecision::kAdvance) {
          sense(progress.current_spot());
          progress = update_progress(std::move(progress), max_score(scores_),
                                     config_.progress_threshold).state;
          break;
        }
      }
    }
    if (finished && budget_left()) execute(Action::kStop);
  }

  void run_random(std::uint64_t seed) {
    RandomAgent agent(seed);
    while (budget_left() && !result_.stopped) execute(agent.next());
  }

  void run_handcrafted(std::uint64_t seed) {
    for (Action action : handcrafted_actions(seed, episode_.start.heading)) {
      if (!budget_left()) break;
      execute(action);
    }
  }

  const world::Episode& episode_;
  const world::Floorplan& plan_;
  const AgentDeps& deps_;
  const AgentConfig& config_;
  world::Pose pose_;
  eval::EpisodeResult result_;
  std::optional<world::DepthPanorama> panorama_;
  Observation observation_;
  ViewScores scores_;
};

}  // namespace

eval::EpisodeResult run_agent(const world::Episode& episode, const world::Floorplan& plan,
                              const AgentDeps& deps, const AgentConfig& config,
                              std::uint64_t seed) {
  if (episode.floorplan_id != plan.id) {
    throw InvalidInputError("episode '" + episode.id + "' belongs to floorplan '" +
                            episode.floorplan_id + "', not '" + plan.id + "'");
  }
  return EpisodeRunner(episode, plan, deps, config).run(seed);
}

}  // namespace vlncm::policy
