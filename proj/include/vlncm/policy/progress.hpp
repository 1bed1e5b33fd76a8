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

#include <string_view>
#include <vector>

#include "vlncm/language/attention_spots.hpp"

namespace vlncm::policy {

inline constexpr int kDefaultProgressThreshold = 2;

struct ProgressState {
  language::AttentionSpotSequence spots;
  std::size_t current_index = 0;
  std::vector<double> history;  // per-sample maximum similarity for the current spot
  int consecutive_decreases = 0;

  const std::string& current_spot() const { return spots.spots.at(current_index); }
  bool on_last_spot() const { return current_index + 1 >= spots.spots.size(); }
};

enum class ProgressDecision { kContinue, kAdvance, kFinish };

std::string_view to_string(ProgressDecision decision);

struct ProgressUpdate {
  ProgressState state;
  ProgressDecision decision = ProgressDecision::kContinue;
};

// Records one similarity sample. After `threshold` consecutive strict
// decreases the monitor advances to the next spot (clearing the history) or,
// on the last spot, finishes.
ProgressUpdate update_progress(ProgressState state, double step_max_similarity,
                               int threshold = kDefaultProgressThreshold);

}  // namespace vlncm::policy
