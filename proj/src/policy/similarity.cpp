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

#include "vlncm/policy/similarity.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <set>

#include "json.hpp"
#include "vlncm/error.hpp"
#include "vlncm/http.hpp"

namespace vlncm::policy {

using nlohmann::json;

namespace {

std::set<std::string> word_set(std::string_view text) {
  std::set<std::string> words;
  std::string w;
  for (char c : text) {
    const auto uc = static_cast<unsigned char>(c);
    if (std::isalnum(uc)) {
      w.push_back(static_cast<char>(std::tolower(uc)));
    } else if (!w.empty()) {
      words.insert(std::move(w));
      w.clear();
    }
  }
  if (!w.empty()) words.insert(std::move(w));
  return words;
}

}  // namespace

Observation observe(const world::Floorplan& plan, const world::Pose& pose,
                    const world::DepthPanorama& panorama) {
  Observation obs;
  for (int i = 0; i < world::kViewCount; ++i) {
    auto span = panorama.view(i);
    obs[i].view_index = i;
    obs[i].depths.assign(span.begin(), span.end());
    obs[i].landmarks = world::visible_landmarks(plan, pose, i);
  }
  return obs;
}

double phrase_overlap(std::string_view a, std::string_view b) {
  const auto wa = word_set(a);
  const auto wb = word_set(b);
  if (wa.empty() || wb.empty()) return 0.0;
  std::size_t common = 0;
  for (const auto& w : wa) common += wb.count(w);
  return static_cast<double>(common) / static_cast<double>(wa.size() + wb.size() - common);
}

double MockScorer::score(const ViewEvidence& view, std::string_view spot) {
  double best = kScoreFloor;
  const double centre = world::view_center(view.view_index);
  for (const auto& lm : view.landmarks) {
    if (lm.occluded) continue;
    const double overlap = phrase_overlap(spot, lm.label);
    if (overlap <= 0.0) continue;
    const double proximity = std::clamp(1.0 / (1.0 + lm.distance), kScoreFloor, 1.0);
    const double offset = abs_angle_diff(lm.absolute_bearing, centre);
    const double centring = 1.0 - offset / 15.0 * 0.25;
    best = std::max(best, proximity * centring * overlap);
  }
  return std::clamp(best, kScoreFloor, 1.0);
}

RemoteScorer::RemoteScorer(RemoteScorerConfig config) : config_(std::move(config)) {
  if (config_.url.empty()) throw InvalidInputError("remote scorer URL is empty");
}

RemoteScorerConfig RemoteScorer::config_from_env() {
  RemoteScorerConfig config;
  const char* url = std::getenv("VLNCM_SCORER_URL");
  if (url == nullptr || *url == '\0') throw InvalidInputError("VLNCM_SCORER_URL is not set");
  config.url = url;
  if (const char* token = std::getenv("VLNCM_LLM_TOKEN")) config.token = token;
  return config;
}

std::string view_descriptor(const ViewEvidence& view) {
  json lms = json::array();
  for (const auto& lm : view.landmarks) {
    lms.push_back({{"label", lm.label},
                   {"bearing", lm.bearing},
                   {"distance", lm.distance},
                   {"occluded", lm.occluded}});
  }
  return json{{"view", view.view_index}, {"depths", view.depths}, {"landmarks", lms}}.dump();
}

double RemoteScorer::score(const ViewEvidence& view, std::string_view spot) {
  const json body = {{"image", net::base64_encode(view_descriptor(view))},
                     {"text", std::string(spot)}};
  net::HttpResult result;
  try {
    result = net::post_json(config_.url, body.dump(), config_.token,
                            std::chrono::seconds(config_.timeout_seconds));
  } catch (const IoError& e) {
    throw ScorerError(e.what());
  }
  if (result.status != 200) {
    throw ScorerError("scorer endpoint returned HTTP " + std::to_string(result.status));
  }
  try {
    return json::parse(result.body).at("score").get<double>();
  } catch (const json::exception& e) {
    throw ScorerError(std::string("malformed scorer response: ") + e.what());
  }
}

ViewScores score_views(SimilarityScorer& scorer, const Observation& observation,
                       std::string_view spot) {
  ViewScores scores;
  for (int i = 0; i < world::kViewCount; ++i) {
    const double v = scorer.score(observation[i], spot);
    if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
      throw ScorerError("scorer returned " + std::to_string(v) + " for view " + std::to_string(i));
    }
    scores[i] = {v, i, std::string(spot)};
  }
  return scores;
}

double max_score(const ViewScores& scores) {
  double m = scores[0].value;
  for (const auto& s : scores) m = std::max(m, s.value);
  return m;
}

}  // namespace vlncm::policy
