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

#include "vlncm/policy/view_selection.hpp"

namespace vlncm::policy {

int select_view(const ViewScores& scores, double current_heading) {
  int best = 0;
  for (int i = 1; i < world::kViewCount; ++i) {
    if (scores[i].value > scores[best].value) {
      best = i;
    } else if (scores[i].value == scores[best].value &&
               abs_angle_diff(world::view_center(i), current_heading) <
                   abs_angle_diff(world::view_center(best), current_heading)) {
      best = i;
    }
  }
  return best;
}

}  // namespace vlncm::policy
