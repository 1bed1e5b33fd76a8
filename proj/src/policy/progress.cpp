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

#include "vlncm/policy/progress.hpp"

namespace vlncm::policy {

std::string_view to_string(ProgressDecision decision) {
  switch (decision) {
    case ProgressDecision::kContinue: return "continue";
    case ProgressDecision::kAdvance: return "advance";
    case ProgressDecision::kFinish: return "finish";
  }
  return "unknown";
}

ProgressUpdate update_progress(ProgressState state, double step_max_similarity, int threshold) {
  if (!state.history.empty() && step_max_similarity < state.history.back()) {
    ++state.consecutive_decreases;
  } else {
    state.consecutive_decreases = 0;
  }
  state.history.push_back(step_max_similarity);
  if (state.consecutive_decreases < threshold) return {std::move(state), ProgressDecision::kContinue};
  if (state.on_last_spot()) return {std::move(state), ProgressDecision::kFinish};
  ++state.current_index;
  state.history.clear();
  state.consecutive_decreases = 0;
  return {std::move(state), ProgressDecision::kAdvance};
}

}  // namespace vlncm::policy
