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

// Acceptance run: prints one PASS/FAIL line per criterion and exits non-zero
// if any criterion fails. Usage: acceptance <path-to-vlncm> [work-dir]

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "vlncm/eval/metrics.hpp"
#include "vlncm/eval/suite.hpp"
#include "vlncm/language/parsers.hpp"
#include "vlncm/perception/occupancy.hpp"
#include "vlncm/policy/agent.hpp"
#include "vlncm/policy/baselines.hpp"
#include "vlncm/policy/planning.hpp"
#include "vlncm/policy/progress.hpp"
#include "vlncm/policy/similarity.hpp"
#include "vlncm/policy/view_selection.hpp"
#include "vlncm/seed.hpp"
#include "vlncm/world/generator.hpp"
#include "vlncm/world/motion.hpp"
#include "vlncm/world/raycast.hpp"
#include "vlncm/world/shortest_path.hpp"

using namespace vlncm;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void report(int id, const char* name, bool ok, const std::string& detail) {
  std::printf("%s criterion %d %s: %s\n", ok ? "PASS" : "FAIL", id, name, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* f, double a = 0, double b = 0, double c = 0, double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), f, a, b, c, d);
  return buf;
}

world::GeneratedWorld test_world(std::uint64_t seed, int index, int episodes) {
  world::GenerationParams p;
  p.world_id = "world_" + std::to_string(index);
  p.room_count = 2 + index % 7;
  p.episodes = episodes;
  return world::generate_world(derive_seed(seed, static_cast<std::uint64_t>(index)), p);
}

void occupancy_equivalence() {
  const auto t0 = std::chrono::steady_clock::now();
  long false_free = 0;
  long disagree = 0;
  long cells = 0;
  const int worlds = 100;
  const int per_world = 100;
  for (int w = 0; w < worlds; ++w) {
    const auto g = test_world(11, w, 0);
    const world::FreePoseSampler sampler(g.floorplan);
    std::mt19937_64 rng(derive_seed(12, static_cast<std::uint64_t>(w)));
    for (int i = 0; i < per_world; ++i) {
      const world::Pose pose = sampler.sample(rng);
      const auto est = perception::depth_to_occupancy(
          world::render_depth_panorama(g.floorplan, pose, 10), world::kAgentRadius);
      const auto ora = perception::oracle_occupancy(g.floorplan, pose);
      for (int a = 0; a < perception::kAngleBins; ++a) {
        const int pe = est.free_prefix(a);
        const int po = ora.free_prefix(a);
        if (pe > po) false_free += pe - po;
        disagree += std::abs(pe - po);
      }
      cells += perception::kAngleBins * perception::kDistanceBins;
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const double agreement = 1.0 - static_cast<double>(disagree) / static_cast<double>(cells);
  report(1, "occupancy oracle equivalence", false_free == 0 && agreement >= 0.99 && secs < 60,
         fmt("%.0f poses, %.0f false-free cells, agreement %.4f, %.1f s", worlds * per_world,
             static_cast<double>(false_free), agreement, secs));
}

void waypoint_safety() {
  int collisions = 0;
  int moved = 0;
  const int poses = 1000;
  std::uniform_real_distribution<double> score(policy::kScoreFloor, 1.0);
  for (int i = 0; i < poses; ++i) {
    const auto g = test_world(21, i % 50, 0);
    const world::FreePoseSampler sampler(g.floorplan);
    std::mt19937_64 rng(derive_seed(22, static_cast<std::uint64_t>(i)));
    world::Pose pose = sampler.sample(rng);
    pose.heading = world::kTurnStep * std::floor(pose.heading / world::kTurnStep);
    policy::ViewScores scores;
    for (int v = 0; v < world::kViewCount; ++v) scores[v] = {score(rng), v, "spot"};
    const int chosen = policy::select_view(scores, pose.heading);
    const auto mask = perception::oracle_occupancy(g.floorplan, pose);
    const policy::Waypoint wp = policy::plan_waypoint(chosen, mask, scores);
    for (policy::Action a : policy::decompose(wp, pose.heading)) {
      if (a == policy::Action::kTurnLeft) pose = world::turn(pose, world::TurnDirection::kLeft);
      if (a == policy::Action::kTurnRight) pose = world::turn(pose, world::TurnDirection::kRight);
      if (a == policy::Action::kForward) {
        const auto step = world::step_forward(g.floorplan, pose);
        collisions += step.collided;
        moved += !step.collided;
        pose = step.pose;
      }
    }
  }
  report(2, "waypoint safety", collisions == 0,
         fmt("%.0f poses, %.0f forward steps, %.0f collisions", poses, moved, collisions));
}

struct SuiteRun {
  eval::SuiteOutput out;
  const eval::MetricsSummary& get(const std::string& label) const {
    for (const auto& s : out.summaries) {
      if (s.config_label == label) return s;
    }
    std::abort();
  }
};

SuiteRun directional_suite() {
  std::vector<world::Floorplan> plans;
  std::vector<world::Episode> episodes;
  for (int w = 0; w < 12; ++w) {
    world::GenerationParams p;
    p.world_id = "world_" + std::to_string(w);
    p.episodes = 5;
    const auto g = world::generate_world(derive_seed(7, static_cast<std::uint64_t>(w)), p);
    plans.push_back(g.floorplan);
    episodes.insert(episodes.end(), g.episodes.begin(), g.episodes.end());
  }
  static perception::GeometricOccupancyPredictor predictor;
  static language::MockParser parser;
  static policy::MockScorer scorer;
  const std::vector<policy::AgentConfig> configs = {
      policy::ablation_variant(true, true),  policy::ablation_variant(false, true),
      policy::ablation_variant(true, false), policy::ablation_variant(false, false),
      policy::random_baseline(),             policy::handcrafted_baseline()};
  return {eval::run_suite(plans, episodes, configs, {&predictor, &parser, &scorer, {}}, 7, 1)};
}

void ablation_direction(const SuiteRun& run) {
  const auto& full = run.get("full");
  const auto& no_omp = run.get("no-omp");
  const auto& no_asp = run.get("no-asp");
  const auto& none = run.get("no-omp-asp");
  const bool ok = full.n_episodes >= 50 && full.collision_rate < no_omp.collision_rate &&
                  full.collision_rate < none.collision_rate && full.sr > no_asp.sr;
  report(3, "ablation direction", ok,
         fmt("N=%.0f collisions full %.2f / -OMP %.2f / -OMP&ASP %.2f", full.n_episodes,
             full.collision_rate, no_omp.collision_rate, none.collision_rate) +
             fmt(", SR full %.3f vs -ASP %.3f", full.sr, no_asp.sr));
}

void baseline_dominance(const SuiteRun& run) {
  const auto& full = run.get("full");
  const auto& random = run.get("random");
  const auto& hand = run.get("handcrafted");
  report(4, "baseline dominance", full.sr > random.sr && full.sr > hand.sr,
         fmt("SR full %.3f, random %.3f, hand-crafted %.3f", full.sr, random.sr, hand.sr));
}

void random_distribution() {
  std::array<int, 4> counts{};
  policy::RandomAgent agent(5);
  const int n = 100000;
  for (int i = 0; i < n; ++i) ++counts[static_cast<int>(agent.next())];
  const std::array<double, 4> expected = {0.68, 0.15, 0.15, 0.02};
  std::array<double, 4> f{};
  bool ok = true;
  for (int k = 0; k < 4; ++k) {
    f[k] = static_cast<double>(counts[k]) / n;
    ok = ok && std::abs(f[k] - expected[k]) <= 0.01;
  }
  report(5, "random agent distribution", ok,
         fmt("forward %.4f, left %.4f, right %.4f, stop %.4f", f[0], f[1], f[2], f[3]));
}

void handcrafted_shape(const SuiteRun& run) {
  int bad = 0;
  int sequences = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    for (int h = 0; h < 24; ++h) {
      const auto actions = policy::handcrafted_actions(seed, h * world::kTurnStep);
      ++sequences;
      const auto fwd = std::count(actions.begin(), actions.end(), policy::Action::kForward);
      bad += fwd != policy::kHandcraftedForwards || actions.back() != policy::Action::kStop;
    }
  }
  for (const auto& r : run.out.results) {
    if (r.config_label != "handcrafted") continue;
    ++sequences;
    int fwd = 0;
    for (const auto& s : r.trajectory) fwd += s.action == "forward";
    bad += fwd != 37 || r.trajectory.empty() || r.trajectory.back().action != "stop";
  }
  report(6, "hand-crafted agent shape", bad == 0,
         fmt("%.0f sequences, %.0f malformed", sequences, bad));
}

eval::EpisodeResult outcome(bool success, double shortest, double taken) {
  eval::EpisodeResult r;
  r.success = success;
  r.shortest_path_length = shortest;
  r.path_length = taken;
  return r;
}

void spl_checks(const SuiteRun& run) {
  const double a = eval::compute_spl({outcome(true, 10, 20)});
  const double b = eval::compute_spl({outcome(true, 10, 10)});
  const double c = eval::compute_spl({outcome(true, 10, 20), outcome(false, 10, 5)});
  bool ok = std::abs(a - 0.5) <= 1e-12 && std::abs(b - 1.0) <= 1e-12 && std::abs(c - 0.25) <= 1e-12;
  for (const auto& s : run.out.summaries) ok = ok && s.spl >= 0 && s.spl <= s.sr && s.sr <= 1;
  report(7, "SPL unit checks", ok,
         fmt("%.12f, %.12f, %.12f; SPL <= SR on %.0f summaries", a, b, c,
             static_cast<double>(run.out.summaries.size())));
}

// Reference model of the progress monitor for one stream. Returns the
// decision sequence.
std::vector<policy::ProgressDecision> reference_progress(const std::vector<double>& stream, int k,
                                                         int spots) {
  std::vector<policy::ProgressDecision> out;
  int index = 0;
  int run = 0;
  bool have_prev = false;
  double prev = 0;
  for (double s : stream) {
    run = have_prev && s < prev ? run + 1 : 0;
    have_prev = true;
    prev = s;
    if (run < k) {
      out.push_back(policy::ProgressDecision::kContinue);
    } else if (index + 1 >= spots) {
      out.push_back(policy::ProgressDecision::kFinish);
    } else {
      out.push_back(policy::ProgressDecision::kAdvance);
      ++index;
      run = 0;
      have_prev = false;
    }
  }
  return out;
}

void progress_properties() {
  const std::array<double, 5> alphabet = {0.1, 0.3, 0.5, 0.7, 0.9};
  long streams = 0;
  long violations = 0;
  for (int len = 1; len <= 6; ++len) {
    std::vector<int> digits(len, 0);
    while (true) {
      std::vector<double> stream;
      for (int d : digits) stream.push_back(alphabet[d]);
      ++streams;
      int previous_first = -1;
      for (int k = 1; k <= 6; ++k) {
        for (int spots : {1, 3, 8}) {
          policy::ProgressState state;
          for (int i = 0; i < spots; ++i) state.spots.spots.push_back("s" + std::to_string(i));
          const auto expected = reference_progress(stream, k, spots);
          for (std::size_t t = 0; t < stream.size(); ++t) {
            const std::size_t before = state.current_index;
            const auto u = policy::update_progress(state, stream[t], k);
            violations += u.decision != expected[t];
            if (u.decision == policy::ProgressDecision::kAdvance) {
              violations += u.state.current_index != before + 1 || !u.state.history.empty() ||
                            u.state.consecutive_decreases != 0;
            }
            state = u.state;
            if (u.decision == policy::ProgressDecision::kFinish) break;
          }
        }
        // The first advance can only move later as K grows.
        int first = static_cast<int>(stream.size());
        const auto d = reference_progress(stream, k, 8);
        for (std::size_t t = 0; t < d.size(); ++t) {
          if (d[t] != policy::ProgressDecision::kContinue) {
            first = static_cast<int>(t);
            break;
          }
        }
        violations += first < previous_first;
        previous_first = first;
      }
      int pos = len - 1;
      while (pos >= 0 && ++digits[pos] == static_cast<int>(alphabet.size())) digits[pos--] = 0;
      if (pos < 0) break;
    }
  }
  report(8, "progress monitor properties", violations == 0,
         fmt("%.0f streams x K in 1..6 x {1,3,8} spots, %.0f violations",
             static_cast<double>(streams), static_cast<double>(violations)));
}

void decomposition_fidelity() {
  const world::Floorplan open{"open", {{-100, -100}, {100, 100}}, {}, {}};
  int worst_cases = 0;
  double worst_heading = 0;
  double worst_distance = 0;
  for (double start : {0.0, 90.0, 7.0, 352.0}) {
    for (int h = 0; h < 24; ++h) {
      for (int d = 0; d <= 12; ++d) {
        const policy::Waypoint wp{h * world::kTurnStep, d * world::kForwardStep};
        world::Pose pose = world::make_pose(0, 0, start);
        double travelled = 0;
        for (policy::Action a : policy::decompose(wp, pose.heading)) {
          if (a == policy::Action::kTurnLeft) pose = world::turn(pose, world::TurnDirection::kLeft);
          if (a == policy::Action::kTurnRight) pose = world::turn(pose, world::TurnDirection::kRight);
          if (a == policy::Action::kForward) {
            const auto step = world::step_forward(open, pose);
            travelled += distance(pose.position, step.pose.position);
            pose = step.pose;
          }
        }
        const double he = abs_angle_diff(pose.heading, wp.heading);
        const double de = std::abs(travelled - wp.distance);
        worst_heading = std::max(worst_heading, he);
        worst_distance = std::max(worst_distance, de);
        worst_cases += he > 7.5 + 1e-9 || de > 1e-9;
      }
    }
  }
  report(9, "decomposition fidelity", worst_cases == 0,
         fmt("4 start headings x 24 headings x 13 distances, max heading error %.2f deg, max "
             "distance error %.2e m",
             worst_heading, worst_distance));
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void determinism(const std::string& exe, const fs::path& work) {
  fs::remove_all(work);
  fs::create_directories(work);
  const std::string q = "\"";
  const std::string base = q + exe + q;
  const std::string data = q + (work / "data").string() + q;
  const std::string quiet = " > " + q + (work / "log.txt").string() + q + " 2>&1";
  int rc = std::system((base + " generate --seed 7 --out " + data + quiet).c_str());
  for (int p : {1, 8}) {
    const std::string out = q + (work / ("p" + std::to_string(p))).string() + q;
    rc |= std::system((base + " eval --seed 7 --with-baselines --data " + data + " --out " + out +
                       " --parallelism " + std::to_string(p) + quiet)
                          .c_str());
  }
  const std::string csv1 = slurp(work / "p1/results.csv");
  const std::string csv8 = slurp(work / "p8/results.csv");
  const std::string txt1 = slurp(work / "p1/report.txt");
  const std::string txt8 = slurp(work / "p8/report.txt");
  const bool ok = rc == 0 && !csv1.empty() && !txt1.empty() && csv1 == csv8 && txt1 == txt8 &&
                  slurp(work / "p1/episodes.jsonl") == slurp(work / "p8/episodes.jsonl");
  report(10, "determinism", ok,
         std::string("eval --seed 7 at parallelism 1 and 8: ") +
             (ok ? "results.csv, report.txt and episodes.jsonl byte-identical"
                 : "outputs differ or a command failed"));
  if (ok) fs::remove_all(work);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: %s <path-to-vlncm> [work-dir]\n", argv[0]);
    return 2;
  }
  const fs::path work = argc > 2 ? fs::path(argv[2]) : fs::temp_directory_path() / "vlncm_acceptance";
  occupancy_equivalence();
  waypoint_safety();
  const SuiteRun run = directional_suite();
  ablation_direction(run);
  baseline_dominance(run);
  random_distribution();
  handcrafted_shape(run);
  spl_checks(run);
  progress_properties();
  decomposition_fidelity();
  determinism(argv[1], work);
  std::printf("%d of 10 criteria passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}
