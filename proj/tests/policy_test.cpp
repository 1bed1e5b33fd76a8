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

#include <gtest/gtest.h>

#include <array>
#include <atomic>
#include <random>

#include "fixtures.hpp"
#include "vlncm/error.hpp"
#include "vlncm/policy/agent.hpp"
#include "vlncm/policy/baselines.hpp"
#include "vlncm/policy/planning.hpp"
#include "vlncm/policy/progress.hpp"
#include "vlncm/policy/similarity.hpp"
#include "vlncm/policy/view_selection.hpp"
#include "vlncm/world/generator.hpp"
#include "vlncm/world/motion.hpp"
#include "vlncm/world/shortest_path.hpp"

namespace vlncm::policy {
namespace {

using world::make_pose;

ViewScores make_scores(const std::array<double, 12>& values) {
  ViewScores s;
  for (int i = 0; i < 12; ++i) s[i] = {values[i], i, "spot"};
  return s;
}

Vec2 polar(double heading, double r) { return heading_vector(heading) * r; }

ViewScores score_at(const world::Floorplan& plan, const world::Pose& pose, const std::string& spot) {
  MockScorer scorer;
  const auto pano = world::render_depth_panorama(plan, pose);
  return score_views(scorer, observe(plan, pose, pano), spot);
}

TEST(ScoreViews, CentredLandmarkWinsItsView) {
  world::Floorplan plan = testing::box_room(-6, -6, 6, 6);
  plan.landmarks.push_back({"red chair", polar(135, 2.0), 0.3});
  const ViewScores s = score_at(plan, make_pose(0, 0, 0), "red chair");
  for (int i = 0; i < 12; ++i) {
    if (i != 4) {
      EXPECT_LT(s[i].value, s[4].value);
    }
    EXPECT_EQ(s[i].view_index, i);
  }
  EXPECT_NEAR(s[4].value, 1.0 / 3.0, 1e-9);
}

TEST(ScoreViews, InvisibleLandmarkGivesFloor) {
  world::Floorplan plan = testing::box_room(-6, -6, 6, 6);
  plan.landmarks.push_back({"red chair", {4, 4}, 0.3});
  plan.walls.push_back({{2, 1}, {2, 5}});
  plan.walls.push_back({{1, 2}, {5, 2}});
  for (const auto& v : score_at(plan, make_pose(0, 0, 0), "red chair")) {
    EXPECT_DOUBLE_EQ(v.value, kScoreFloor);
  }
  for (const auto& v : score_at(plan, make_pose(0, 0, 0), "piano")) {
    EXPECT_DOUBLE_EQ(v.value, kScoreFloor);
  }
}

TEST(ScoreViews, StraddlingLandmarkPrefersSmallerOffset) {
  world::Floorplan plan = testing::box_room(-6, -6, 6, 6);
  plan.landmarks.push_back({"blue lamp", polar(59, 1.5), 0.3});
  const ViewScores s = score_at(plan, make_pose(0, 0, 0), "blue lamp");
  EXPECT_GT(s[1].value, kScoreFloor);
  EXPECT_GT(s[2].value, kScoreFloor);
  EXPECT_GT(s[1].value, s[2].value);
  EXPECT_EQ(select_view(s, 0), 1);
}

TEST(ScoreViews, OccludedLandmarkIgnored) {
  world::Floorplan plan = testing::box_room(-6, -6, 6, 6);
  plan.landmarks.push_back({"red chair", {0.2, 3}, 0.3});
  plan.walls.push_back({{-1, 1.5}, {1, 1.5}});
  EXPECT_DOUBLE_EQ(score_at(plan, make_pose(0, 0, 0), "red chair")[0].value, kScoreFloor);
}

TEST(ScoreViews, PartialPhraseOverlapScalesScore) {
  EXPECT_DOUBLE_EQ(phrase_overlap("red chair", "red chair"), 1.0);
  EXPECT_DOUBLE_EQ(phrase_overlap("red chair", "the red chair"), 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(phrase_overlap("blue lamp", "red chair"), 0.0);
  world::Floorplan plan = testing::box_room(-6, -6, 6, 6);
  plan.landmarks.push_back({"red chair", polar(135, 2.0), 0.3});
  const double full = score_at(plan, make_pose(0, 0, 0), "red chair")[4].value;
  const double part = score_at(plan, make_pose(0, 0, 0), "go to the red chair")[4].value;
  EXPECT_NEAR(part, full * 2.0 / 5.0, 1e-12);
}

class BrokenScorer : public SimilarityScorer {
 public:
  explicit BrokenScorer(double value) : value_(value) {}
  double score(const ViewEvidence&, std::string_view) override {
    if (value_ < 0) throw ScorerError("offline");
    return value_;
  }

 private:
  double value_;
};

TEST(ScoreViews, ScorerFailuresSurface) {
  const auto plan = testing::square_room();
  const auto pose = make_pose(0, 0, 0);
  const auto obs = observe(plan, pose, world::render_depth_panorama(plan, pose));
  BrokenScorer down(-1);
  EXPECT_THROW(score_views(down, obs, "x"), ScorerError);
  BrokenScorer out_of_range(1.5);
  EXPECT_THROW(score_views(out_of_range, obs, "x"), ScorerError);
}

TEST(SelectView, Examples) {
  std::array<double, 12> v;
  v.fill(0.1);
  v[6] = 0.9;
  EXPECT_EQ(select_view(make_scores(v), 0), 6);
  v.fill(0.5);
  EXPECT_EQ(select_view(make_scores(v), 10), 0);
  v.fill(0.1);
  v[2] = 0.8;
  v[10] = 0.8;
  EXPECT_EQ(select_view(make_scores(v), 350), 10);
  v.fill(0.3);
  EXPECT_EQ(select_view(make_scores(v), 0), 0);  // views 0 and 11 tie on turn
}

TEST(SelectView, InvariantUnderPositiveScaling) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> level(0, 4);
  std::uniform_real_distribution<double> scale(0.01, 1.0);
  for (int trial = 0; trial < 2000; ++trial) {
    std::array<double, 12> v;
    for (double& x : v) x = 0.2 * level(rng);
    const double c = scale(rng);
    std::array<double, 12> w;
    for (int i = 0; i < 12; ++i) w[i] = v[i] * c;
    const double heading = 15.0 * (trial % 24);
    EXPECT_EQ(select_view(make_scores(v), heading), select_view(make_scores(w), heading));
  }
}

ProgressState state_with(std::vector<double> history, int spots = 2) {
  ProgressState s;
  for (int i = 0; i < spots; ++i) s.spots.spots.push_back("spot " + std::to_string(i));
  for (std::size_t i = 0; i < history.size(); ++i) {
    s = update_progress(s, history[i], 100).state;
  }
  return s;
}

TEST(Progress, Examples) {
  auto u = update_progress(state_with({0.5, 0.4}), 0.3);
  EXPECT_EQ(u.decision, ProgressDecision::kAdvance);
  EXPECT_EQ(u.state.current_index, 1u);
  EXPECT_TRUE(u.state.history.empty());
  EXPECT_EQ(u.state.consecutive_decreases, 0);

  u = update_progress(state_with({0.5, 0.6}), 0.4);
  EXPECT_EQ(u.decision, ProgressDecision::kContinue);
  EXPECT_EQ(u.state.consecutive_decreases, 1);

  u = update_progress(state_with({0.5, 0.4}, 1), 0.3);
  EXPECT_EQ(u.decision, ProgressDecision::kFinish);
}

TEST(Progress, EqualSampleResetsRun) {
  auto u = update_progress(state_with({0.5, 0.4}), 0.4);
  EXPECT_EQ(u.decision, ProgressDecision::kContinue);
  EXPECT_EQ(u.state.consecutive_decreases, 0);
}

TEST(Planning, WaypointExamples) {
  std::array<double, 12> v;
  v.fill(0.1);
  v[0] = 0.9;
  v[5] = 0.5;
  const ViewScores scores = make_scores(v);
  const Waypoint free = plan_waypoint(0, perception::OccupancyMask::all_free(), scores);
  EXPECT_DOUBLE_EQ(free.heading, 15);
  EXPECT_DOUBLE_EQ(free.distance, 3.0);

  perception::OccupancyMask m = perception::OccupancyMask::all_free();
  m.occupy(perception::angle_bin_of(15), 2);
  const Waypoint second = plan_waypoint(0, m, scores);
  EXPECT_DOUBLE_EQ(second.heading, 15);
  EXPECT_DOUBLE_EQ(second.distance, 0.25);
  m.occupy(perception::angle_bin_of(15), 1);
  const Waypoint fallback = plan_waypoint(0, m, scores);
  EXPECT_DOUBLE_EQ(fallback.heading, 165);
  EXPECT_GT(fallback.distance, 0);

  const Waypoint blocked = plan_waypoint(0, perception::OccupancyMask(), scores);
  EXPECT_DOUBLE_EQ(blocked.heading, 15);
  EXPECT_DOUBLE_EQ(blocked.distance, 0.0);
}

TEST(Planning, NextBestTiesPreferNeighbours) {
  std::array<double, 12> v;
  v.fill(0.05);
  v[6] = 0.4;
  perception::OccupancyMask m = perception::OccupancyMask::all_free();
  m.occupy(perception::angle_bin_of(world::view_center(6)), 1);
  // Views 5 and 7 are equally close; the lower index wins.
  EXPECT_DOUBLE_EQ(plan_waypoint(6, m, make_scores(v)).heading, world::view_center(5));
  m.occupy(perception::angle_bin_of(world::view_center(5)), 1);
  EXPECT_DOUBLE_EQ(plan_waypoint(6, m, make_scores(v)).heading, world::view_center(7));
}

TEST(Planning, BlindWaypoint) {
  const Waypoint w = plan_waypoint_blind(3);
  EXPECT_DOUBLE_EQ(w.heading, 105);
  EXPECT_DOUBLE_EQ(w.distance, 3.0);
}

std::vector<Action> repeat(Action a, int n) { return std::vector<Action>(n, a); }

std::vector<Action> concat(std::vector<Action> a, const std::vector<Action>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

TEST(Decompose, Examples) {
  EXPECT_EQ(decompose({45, 1.0}, 0),
            concat(repeat(Action::kTurnRight, 3), repeat(Action::kForward, 4)));
  EXPECT_EQ(decompose({0, 0.5}, 0), repeat(Action::kForward, 2));
  EXPECT_EQ(decompose({352, 0.25}, 0), (std::vector<Action>{Action::kTurnLeft, Action::kForward}));
  EXPECT_EQ(decompose({180, 0}, 0), repeat(Action::kTurnRight, 12));
  EXPECT_EQ(decompose({15, 0}, 300), repeat(Action::kTurnRight, 5));
}

TEST(Baselines, RandomAgentReproducible) {
  RandomAgent a(99);
  RandomAgent b(99);
  for (int i = 0; i < 1000; ++i) EXPECT_EQ(a.next(), b.next());
}

TEST(Baselines, HandcraftedShape) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const double start = 15.0 * (seed % 24);
    const auto actions = handcrafted_actions(seed, start);
    EXPECT_EQ(std::count(actions.begin(), actions.end(), Action::kForward), kHandcraftedForwards);
    EXPECT_EQ(actions.back(), Action::kStop);
    EXPECT_LE(actions.size(), 37u + 12u + 1u);
  }
  // Some seed draws the start heading itself.
  bool zero_turn = false;
  for (std::uint64_t seed = 0; seed < 200 && !zero_turn; ++seed) {
    zero_turn = handcrafted_actions(seed, 0).front() == Action::kForward;
  }
  EXPECT_TRUE(zero_turn);
}

class CountingPredictor : public perception::OccupancyPredictor {
 public:
  perception::OccupancyMask predict(const world::DepthPanorama& p) const override {
    ++calls;
    return inner.predict(p);
  }
  perception::GeometricOccupancyPredictor inner;
  mutable std::atomic<int> calls{0};
};

class CountingParser : public language::InstructionParser {
 public:
  language::ParserResponse parse(const language::ParserRequest& r) override {
    ++calls;
    return inner.parse(r);
  }
  language::SpotSource source() const override { return language::SpotSource::kMock; }
  language::MockParser inner;
  std::atomic<int> calls{0};
};

struct Harness {
  CountingPredictor predictor;
  CountingParser parser;
  MockScorer scorer;
  AgentDeps deps() { return {&predictor, &parser, &scorer, {}}; }
};

world::Episode episode_in(const world::Floorplan& plan, world::Pose start, Vec2 goal,
                          std::string instruction) {
  return {"ep", plan.id, start, goal, std::move(instruction),
          world::shortest_path(plan, start.position, goal)};
}

TEST(Agent, SingleRoomReachesSpot) {
  world::Floorplan plan = testing::box_room(0, 0, 8, 8, "room");
  plan.landmarks.push_back({"green table", {6, 6}, 0.3});
  const auto ep = episode_in(plan, make_pose(1, 1, 0), {6, 6}, "go to the green table and stop");
  Harness h;
  const eval::EpisodeResult r = run_agent(ep, plan, h.deps(), ablation_variant(true, true), 1);
  EXPECT_TRUE(r.success) << r.final_distance_to_goal;
  EXPECT_TRUE(r.stopped);
  EXPECT_EQ(r.collisions, 0);
  EXPECT_EQ(r.spots, std::vector<std::string>{"green table"});
  EXPECT_GT(r.path_length, 0);
  EXPECT_EQ(r.trajectory.back().action, "stop");
  EXPECT_EQ(static_cast<int>(r.trajectory.size()), r.steps);
}

TEST(Agent, ZeroBudgetFails) {
  world::Floorplan plan = testing::box_room(0, 0, 8, 8, "room");
  plan.landmarks.push_back({"green table", {6, 6}, 0.3});
  const auto ep = episode_in(plan, make_pose(1, 1, 0), {6, 6}, "go to the green table and stop");
  Harness h;
  AgentConfig c = ablation_variant(true, true);
  c.step_budget = 0;
  const auto r = run_agent(ep, plan, h.deps(), c, 1);
  EXPECT_FALSE(r.success);
  EXPECT_EQ(r.collisions, 0);
  EXPECT_EQ(r.steps, 0);
}

world::Floorplan blocked_corridor() {
  world::Floorplan plan = testing::box_room(0, 0, 10, 1.2, "corridor");
  plan.landmarks.push_back({"red chair", {9.2, 0.6}, 0.3});
  return plan;
}

TEST(Agent, OccupancyMaskAvoidsCollisionsInCorridor) {
  const world::Floorplan plan = blocked_corridor();
  const auto ep = episode_in(plan, make_pose(0.6, 0.6, 90), {9.2, 0.6}, "go to the red chair and stop");
  Harness h;
  const auto full = run_agent(ep, plan, h.deps(), ablation_variant(true, true), 1);
  const auto blind = run_agent(ep, plan, h.deps(), ablation_variant(false, true), 1);
  EXPECT_LT(full.collisions, blind.collisions);
  EXPECT_EQ(full.collisions, 0);
  EXPECT_TRUE(full.success);
}

TEST(Agent, AblationsSkipTheirModules) {
  const world::Floorplan plan = blocked_corridor();
  const auto ep = episode_in(plan, make_pose(0.6, 0.6, 90), {9.2, 0.6}, "go to the red chair and stop");
  Harness h;
  const auto no_asp = run_agent(ep, plan, h.deps(), ablation_variant(true, false), 1);
  EXPECT_EQ(h.parser.calls, 0);
  EXPECT_EQ(no_asp.spots, std::vector<std::string>{"go to the red chair and stop"});
  EXPECT_GT(h.predictor.calls, 0);

  Harness h2;
  run_agent(ep, plan, h2.deps(), ablation_variant(false, true), 1);
  EXPECT_EQ(h2.predictor.calls, 0);
  EXPECT_EQ(h2.parser.calls, 1);
}

TEST(Agent, ScorerFailureMarksEpisodeFailed) {
  const world::Floorplan plan = blocked_corridor();
  const auto ep = episode_in(plan, make_pose(0.6, 0.6, 90), {9.2, 0.6}, "go to the red chair and stop");
  Harness h;
  BrokenScorer down(-1);
  AgentDeps deps = h.deps();
  deps.scorer = &down;
  const auto r = run_agent(ep, plan, deps, ablation_variant(true, true), 1);
  EXPECT_FALSE(r.success);
  ASSERT_TRUE(r.failure_reason.has_value());
  EXPECT_DOUBLE_EQ(r.path_length, 0.0);
}

TEST(Agent, EveryConfigTerminatesWithinBudget) {
  Harness h;
  const std::vector<AgentConfig> configs = {
      ablation_variant(true, true), ablation_variant(false, true), ablation_variant(true, false),
      ablation_variant(false, false), random_baseline(), handcrafted_baseline()};
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const auto g = world::generate_world(seed, {});
    for (const auto& e : g.episodes) {
      for (AgentConfig c : configs) {
        c.step_budget = 60;
        const auto r = run_agent(e, g.floorplan, h.deps(), c, seed);
        EXPECT_LE(r.steps, 60);
        EXPECT_FALSE(r.failure_reason.has_value());
        EXPECT_GE(world::wall_clearance(g.floorplan, r.final_pose.position),
                  world::kAgentRadius - 1e-9);
      }
    }
  }
}

TEST(Agent, RandomAgentStopsAtFirstStop) {
  Harness h;
  const auto g = world::generate_world(3, {});
  const auto r = run_agent(g.episodes[0], g.floorplan, h.deps(), random_baseline(), 12345);
  if (r.stopped) {
    EXPECT_EQ(r.trajectory.back().action, "stop");
    for (std::size_t i = 0; i + 1 < r.trajectory.size(); ++i) {
      EXPECT_NE(r.trajectory[i].action, "stop");
    }
  } else {
    EXPECT_EQ(r.steps, 200);
  }
}

TEST(Agent, HandcraftedCollisionsPinPosition) {
  world::Floorplan plan = testing::box_room(0, 0, 2, 2, "tiny");
  plan.landmarks.push_back({"lamp", {1, 1.5}, 0.1});
  const auto ep = episode_in(plan, make_pose(1, 1, 0), {1, 1.5}, "go to the lamp and stop");
  Harness h;
  const auto r = run_agent(ep, plan, h.deps(), handcrafted_baseline(), 8);
  EXPECT_GT(r.collisions, 20);
  EXPECT_TRUE(r.stopped);
  int forwards = 0;
  for (const auto& s : r.trajectory) forwards += s.action == "forward";
  EXPECT_EQ(forwards, 37);
}

}  // namespace
}  // namespace vlncm::policy
