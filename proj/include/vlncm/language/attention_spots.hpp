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

#include <chrono>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace vlncm::language {

class InstructionParser;

enum class SpotSource { kRemote, kMock, kWholeInstruction };

std::string_view to_string(SpotSource source);

struct AttentionSpotSequence {
  std::vector<std::string> spots;
  SpotSource source = SpotSource::kWholeInstruction;
};

inline constexpr int kDefaultMaxSpots = 8;

// Trims, lowercases, collapses runs of whitespace and strips punctuation
// at either end of the phrase.
std::string normalize_phrase(std::string_view phrase);

// Normalizes every phrase, drops the empty ones and collapses adjacent
// duplicates. The result may be empty.
std::vector<std::string> normalize_spots(const std::vector<std::string>& phrases);

// Whitespace-only normalization of a full instruction: trim and collapse
// interior runs to one space.
std::string normalize_instruction(std::string_view instruction);

// Single spot holding the whole normalized instruction.
AttentionSpotSequence whole_instruction(std::string_view instruction);

// Inverts the generator's instruction templates by pulling the phrase after
// each "past the", "to the" and "at the" marker. Falls back to the whole
// instruction when no marker is present. Throws InvalidInputError on blank
// input.
AttentionSpotSequence mock_parse(std::string_view instruction);

struct RetryPolicy {
  int attempts = 3;
  std::chrono::milliseconds initial_backoff{1000};
  // Defaults to std::this_thread::sleep_for when empty.
  std::function<void(std::chrono::milliseconds)> sleep;
};

// Asks `client` for the spots of `instruction`, retrying failed calls with
// exponential backoff. Zero usable spots, or failure on every attempt,
// yields the whole-instruction sequence. Throws InvalidInputError on blank
// input or max_spots < 1.
AttentionSpotSequence parse_instruction(InstructionParser& client, std::string_view instruction,
                                        int max_spots = kDefaultMaxSpots,
                                        const RetryPolicy& retry = {});

}  // namespace vlncm::language
