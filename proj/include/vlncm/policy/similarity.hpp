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

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "vlncm/world/floorplan.hpp"
#include "vlncm/world/landmarks.hpp"
#include "vlncm/world/raycast.hpp"

namespace vlncm::policy {

inline constexpr double kScoreFloor = 0.05;

struct SimilarityScore {
  double value = kScoreFloor;
  int view_index = 0;
  std::string spot;
};

using ViewScores = std::array<SimilarityScore, world::kViewCount>;

// What a scorer gets to see of one view: its depth rays and the landmarks
// whose extent falls inside it.
struct ViewEvidence {
  int view_index = 0;
  std::vector<double> depths;
  std::vector<world::VisibleLandmark> landmarks;
};

using Observation = std::array<ViewEvidence, world::kViewCount>;

Observation observe(const world::Floorplan& plan, const world::Pose& pose,
                    const world::DepthPanorama& panorama);

// Implementations must be safe to call from several threads at once.
class SimilarityScorer {
 public:
  virtual ~SimilarityScorer() = default;
  // Score in [0, 1]. Throws ScorerError on failure.
  virtual double score(const ViewEvidence& view, std::string_view spot) = 0;
};

// Word-set Jaccard overlap of two phrases; 1 for identical word sets.
double phrase_overlap(std::string_view a, std::string_view b);

// Offline scorer. Each un-occluded landmark in the view contributes
// clamp(1 / (1 + d), 0.05, 1) * (1 - |offset| / 15 * 0.25) * overlap(spot, label),
// where offset is the landmark's angle from the view centre in degrees. The
// view scores the best contribution, never less than 0.05.
class MockScorer : public SimilarityScorer {
 public:
  double score(const ViewEvidence& view, std::string_view spot) override;
};

struct RemoteScorerConfig {
  std::string url;
  std::string token;
  int timeout_seconds = 30;
};

// Sends {image: base64 view descriptor, text: spot} and expects {score}.
class RemoteScorer : public SimilarityScorer {
 public:
  explicit RemoteScorer(RemoteScorerConfig config);
  // Reads VLNCM_SCORER_URL (required) and VLNCM_LLM_TOKEN.
  static RemoteScorerConfig config_from_env();
  double score(const ViewEvidence& view, std::string_view spot) override;

 private:
  RemoteScorerConfig config_;
};

// JSON descriptor of a view that stands in for its rendered image.
std::string view_descriptor(const ViewEvidence& view);

// One score per view in panorama order. Throws ScorerError if the scorer
// fails or returns a value outside [0, 1].
ViewScores score_views(SimilarityScorer& scorer, const Observation& observation,
                       std::string_view spot);

double max_score(const ViewScores& scores);

}  // namespace vlncm::policy
