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

#include "vlncm/cli/commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <limits>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "vlncm/error.hpp"
#include "vlncm/eval/report.hpp"
#include "vlncm/eval/suite.hpp"
#include "vlncm/language/cache.hpp"
#include "vlncm/language/parsers.hpp"
#include "vlncm/language/prompt_asset.hpp"
#include "vlncm/perception/dataset.hpp"
#include "vlncm/policy/agent.hpp"
#include "vlncm/seed.hpp"
#include "vlncm/world/generator.hpp"
#include "vlncm/world/io.hpp"

namespace vlncm::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// Missing credentials or an unusable output location.
class EnvironmentError : public Error {
 public:
  using Error::Error;
};

struct GenerateOptions {
  std::uint64_t seed = 7;
  int worlds = 3;
  int episodes_per_world = 5;
  int rooms = 3;
  double corridor_width = 2.0;
  int route_rooms = 2;
  std::string out = "data";
};

struct EvalOptions {
  std::uint64_t seed = 7;
  std::string data = "data";
  std::string out = "results";
  std::string scorer = "mock";
  std::string parser = "mock";
  std::vector<std::string> only;
  bool with_baselines = false;
  int k = policy::kDefaultProgressThreshold;
  double success_radius = eval::kDefaultSuccessRadius;
  int budget = 200;
  int parallelism = 1;
  int max_spots = language::kDefaultMaxSpots;
  int rays = world::kDefaultRaysPerView;
  std::string cache_dir;
};

struct OmpOptions {
  std::uint64_t seed = 7;
  std::string data = "data";
  std::string out = "data";
  int samples = 100;
  int rays = world::kDefaultRaysPerView;
  bool verify = false;
};

std::string world_file_name(int index) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "world_%03d", index);
  return buf;
}

void write_output(const fs::path& path, const std::string& content) {
  try {
    world::write_text_file(path, content);
  } catch (const IoError& e) {
    throw EnvironmentError(e.what());
  }
}

std::vector<world::Floorplan> load_worlds(const fs::path& data) {
  const fs::path dir = data / "worlds";
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    throw InvalidInputError("no world directory at '" + dir.string() + "'; run `generate` first");
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) throw InvalidInputError("no world files in '" + dir.string() + "'");
  std::vector<world::Floorplan> plans;
  for (const auto& f : files) {
    try {
      plans.push_back(world::read_floorplan(f));
    } catch (const IoError& e) {
      throw InvalidInputError(e.what());
    }
  }
  return plans;
}

std::vector<world::Episode> load_episodes(const fs::path& data) {
  try {
    return world::read_episodes(data / "episodes.json");
  } catch (const IoError& e) {
    throw InvalidInputError(e.what());
  }
}

int cmd_generate(const GenerateOptions& o, std::ostream& out) {
  const fs::path root(o.out);
  std::vector<world::Episode> episodes;
  json files = json::array();
  for (int w = 0; w < o.worlds; ++w) {
    world::GenerationParams params;
    params.world_id = world_file_name(w);
    params.room_count = o.rooms;
    params.corridor_width = o.corridor_width;
    params.episodes = o.episodes_per_world;
    params.max_route_rooms = o.route_rooms;
    const world::GeneratedWorld g =
        world::generate_world(derive_seed(o.seed, static_cast<std::uint64_t>(w)), params);
    const std::string rel = "worlds/" + params.world_id + ".json";
    write_output(root / rel, world::to_json(g.floorplan).dump(2) + "\n");
    files.push_back(rel);
    episodes.insert(episodes.end(), g.episodes.begin(), g.episodes.end());
  }
  json eps = json::array();
  for (const auto& e : episodes) eps.push_back(world::to_json(e));
  write_output(root / "episodes.json", eps.dump(2) + "\n");
  files.push_back("episodes.json");

  const json manifest = {{"command", "generate"},
                         {"seed", o.seed},
                         {"worlds", o.worlds},
                         {"episodes_per_world", o.episodes_per_world},
                         {"rooms", o.rooms},
                         {"corridor_width", o.corridor_width},
                         {"route_rooms", o.route_rooms},
                         {"files", files}};
  write_output(root / "manifest.json", manifest.dump(2) + "\n");
  for (const auto& f : files) out << (root / f.get<std::string>()).string() << "\n";
  out << (root / "manifest.json").string() << "\n";
  return kExitOk;
}

std::vector<policy::AgentConfig> select_configs(const EvalOptions& o) {
  std::vector<policy::AgentConfig> all = {
      policy::ablation_variant(true, true), policy::ablation_variant(false, true),
      policy::ablation_variant(true, false), policy::ablation_variant(false, false),
      policy::random_baseline(), policy::handcrafted_baseline()};
  std::vector<policy::AgentConfig> chosen;
  for (const auto& c : all) {
    const bool baseline = c.kind != policy::AgentKind::kVlnCm;
    const bool wanted = o.only.empty()
                            ? (!baseline || o.with_baselines)
                            : std::find(o.only.begin(), o.only.end(), c.label) != o.only.end();
    if (!wanted) continue;
    policy::AgentConfig config = c;
    config.step_budget = o.budget;
    config.progress_threshold = o.k;
    config.success_radius = o.success_radius;
    config.max_spots = o.max_spots;
    config.rays_per_view = o.rays;
    chosen.push_back(config);
  }
  return chosen;
}

std::string require_env(const char* name, const std::string& hint) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') {
    throw EnvironmentError(std::string(name) + " is not set; " + hint);
  }
  return v;
}

int cmd_eval(const EvalOptions& o, std::ostream& out) {
  const std::vector<policy::AgentConfig> configs = select_configs(o);
  if (configs.empty()) throw InvalidInputError("--only selected no known configuration");

  std::shared_ptr<language::InstructionParser> parser;
  if (o.parser == "remote") {
    const std::string hint = "export it or run with --parser mock";
    language::RemoteParserConfig rc;
    rc.url = require_env("VLNCM_LLM_URL", hint);
    rc.token = require_env("VLNCM_LLM_TOKEN", hint);
    const fs::path cache = o.cache_dir.empty() ? fs::path(o.out) / "parser_cache"
                                               : fs::path(o.cache_dir);
    try {
      parser = language::cached(std::make_shared<language::RemoteParser>(rc), cache,
                                std::string(language::kPromptVersion));
    } catch (const IoError& e) {
      throw EnvironmentError(e.what());
    }
  } else {
    parser = std::make_shared<language::MockParser>();
  }

  std::unique_ptr<policy::SimilarityScorer> scorer;
  if (o.scorer == "remote") {
    policy::RemoteScorerConfig sc;
    sc.url = require_env("VLNCM_SCORER_URL", "export it or run with --scorer mock");
    if (const char* token = std::getenv("VLNCM_LLM_TOKEN")) sc.token = token;
    scorer = std::make_unique<policy::RemoteScorer>(sc);
  } else {
    scorer = std::make_unique<policy::MockScorer>();
  }

  const std::vector<world::Floorplan> plans = load_worlds(o.data);
  const std::vector<world::Episode> episodes = load_episodes(o.data);

  const perception::GeometricOccupancyPredictor predictor;
  policy::AgentDeps deps;
  deps.predictor = &predictor;
  deps.parser = parser.get();
  deps.scorer = scorer.get();

  const eval::SuiteOutput suite =
      eval::run_suite(plans, episodes, configs, deps, o.seed, o.parallelism);
  try {
    eval::write_report(suite.summaries, suite.results, o.out);
  } catch (const IoError& e) {
    throw EnvironmentError(e.what());
  }

  json labels = json::array();
  for (const auto& c : configs) labels.push_back(c.label);
  const json manifest = {{"command", "eval"},
                         {"seed", o.seed},
                         {"data", o.data},
                         {"scorer", o.scorer},
                         {"parser", o.parser},
                         {"prompt_version", language::kPromptVersion},
                         {"configs", labels},
                         {"k", o.k},
                         {"success_radius", o.success_radius},
                         {"budget", o.budget},
                         {"parallelism", o.parallelism},
                         {"max_spots", o.max_spots},
                         {"rays_per_view", o.rays},
                         {"episodes", episodes.size()},
                         {"files", {"results.csv", "episodes.jsonl", "trajectories.jsonl",
                                    "report.txt"}}};
  write_output(fs::path(o.out) / "manifest.json", manifest.dump(2) + "\n");
  out << eval::report_text(suite.summaries);
  return kExitOk;
}

int cmd_gen_omp_data(const OmpOptions& o, std::ostream& out, std::ostream& err) {
  const std::vector<world::Floorplan> plans = load_worlds(o.data);
  const fs::path path = fs::path(o.out) / "omp_dataset.jsonl";
  std::size_t n = 0;
  try {
    n = perception::emit_omp_dataset(plans, o.samples, o.seed, path, o.rays);
  } catch (const IoError& e) {
    throw EnvironmentError(e.what());
  }
  out << n << " records\n";
  if (o.verify) {
    const perception::DatasetCheck check = perception::verify_omp_dataset(plans, path);
    out << "verified " << check.records << " records, " << check.mismatches << " mismatches\n";
    if (check.mismatches != 0 || check.records != n) {
      err << "error: dataset verification failed\n";
      return kExitFailure;
    }
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Synthetic vision-and-language navigation simulator and evaluation harness",
               "vlncm"};
  app.require_subcommand(1);
  app.set_config("--config", "",
                 "INI file; options go under [generate], [eval] or [gen-omp-data]");
  app.get_formatter()->column_width(36);
  const CLI::Range kCount(1, std::numeric_limits<int>::max(), "POSITIVE");

  GenerateOptions gen;
  CLI::App* g = app.add_subcommand("generate", "Generate floorplans and episodes");
  g->fallthrough();
  g->add_option("--seed", gen.seed, "Global seed")->capture_default_str();
  g->add_option("--worlds", gen.worlds, "Number of floorplans")
      ->check(kCount)->capture_default_str();
  g->add_option("--episodes-per-world", gen.episodes_per_world, "Episodes per floorplan")
      ->check(kCount)->capture_default_str();
  g->add_option("--rooms", gen.rooms, "Rooms per floorplan")
      ->check(CLI::Range(2, 8))->capture_default_str();
  g->add_option("--corridor-width", gen.corridor_width, "Corridor width in metres")
      ->check(CLI::Range(1.0, 10.0))->capture_default_str();
  g->add_option("--route-rooms", gen.route_rooms, "Maximum rooms crossed by a route")
      ->check(kCount)->capture_default_str();
  g->add_option("--out", gen.out, "Output directory")->capture_default_str();

  EvalOptions ev;
  CLI::App* e = app.add_subcommand("eval", "Run the agent suite and write the report");
  e->fallthrough();
  e->add_option("--seed", ev.seed, "Global seed")->capture_default_str();
  e->add_option("--data", ev.data, "Directory written by `generate`")->capture_default_str();
  e->add_option("--out", ev.out, "Report directory")->capture_default_str();
  e->add_option("--scorer", ev.scorer, "Similarity scorer")
      ->check(CLI::IsMember({"mock", "remote"}))->capture_default_str();
  e->add_option("--parser", ev.parser, "Instruction parser")
      ->check(CLI::IsMember({"mock", "remote"}))->capture_default_str();
  e->add_option("--only", ev.only,
                "Run only these configs: full, no-omp, no-asp, no-omp-asp, random, handcrafted")
      ->check(CLI::IsMember({"full", "no-omp", "no-asp", "no-omp-asp", "random", "handcrafted"}));
  e->add_flag("--with-baselines", ev.with_baselines, "Add the random and hand-crafted agents");
  e->add_option("--k", ev.k, "Consecutive decreases before a spot is passed")
      ->check(kCount)->capture_default_str();
  e->add_option("--success-radius", ev.success_radius, "Success radius in metres")
      ->check(CLI::PositiveNumber)->capture_default_str();
  e->add_option("--budget", ev.budget, "Low-level action budget per episode")
      ->check(kCount)->capture_default_str();
  e->add_option("--parallelism", ev.parallelism, "Worker threads")
      ->check(kCount)->capture_default_str();
  e->add_option("--max-spots", ev.max_spots, "Attention spots requested from the parser")
      ->check(kCount)->capture_default_str();
  e->add_option("--rays", ev.rays, "Depth rays per view")
      ->check(kCount)->capture_default_str();
  e->add_option("--cache-dir", ev.cache_dir, "Parser cache (default <out>/parser_cache)");

  OmpOptions omp;
  CLI::App* d = app.add_subcommand("gen-omp-data", "Emit depth/occupancy training pairs");
  d->fallthrough();
  d->add_option("--seed", omp.seed, "Global seed")->capture_default_str();
  d->add_option("--data", omp.data, "Directory written by `generate`")->capture_default_str();
  d->add_option("--out", omp.out, "Output directory")->capture_default_str();
  d->add_option("--samples", omp.samples, "Poses per floorplan")
      ->check(kCount)->capture_default_str();
  d->add_option("--rays", omp.rays, "Depth rays per view")
      ->check(kCount)->capture_default_str();
  d->add_flag("--verify", omp.verify, "Re-check every mask against the oracle");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (g->parsed()) return cmd_generate(gen, out);
    if (e->parsed()) return cmd_eval(ev, out);
    return cmd_gen_omp_data(omp, out, err);
  } catch (const EnvironmentError& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitEnvironment;
  } catch (const Error& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace vlncm::cli
