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

#include <filesystem>
#include <string>
#include <vector>

#include "vlncm/eval/metrics.hpp"

namespace vlncm::eval {

// Display name used in the text tables, e.g. "full" -> "VLN-CM".
std::string method_name(const std::string& config_label);

std::string results_csv(const std::vector<MetricsSummary>& summaries);
std::string report_text(const std::vector<MetricsSummary>& summaries);

// Writes results.csv, episodes.jsonl, trajectories.jsonl and report.txt
// under `dir`. Throws InvalidInputError (before writing anything) when
// there is nothing to report, IoError with the path on write failure.
void write_report(const std::vector<MetricsSummary>& summaries,
                  const std::vector<EpisodeResult>& results, const std::filesystem::path& dir);

}  // namespace vlncm::eval
