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

#include "vlncm/language/attention_spots.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <thread>

#include "vlncm/language/prompt_asset.hpp"
#include "vlncm/error.hpp"
#include "vlncm/language/parsers.hpp"

namespace vlncm::language {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

bool is_edge_punct(char c) { return std::ispunct(static_cast<unsigned char>(c)) != 0; }

// Lowercased words and single-character punctuation tokens.
std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string word;
  auto flush = [&] {
    if (!word.empty()) tokens.push_back(std::move(word));
    word.clear();
  };
  for (char c : text) {
    const auto uc = static_cast<unsigned char>(c);
    if (std::isalnum(uc) || c == '-' || c == '\'') {
      word.push_back(static_cast<char>(std::tolower(uc)));
    } else {
      flush();
      if (std::ispunct(uc)) tokens.emplace_back(1, c);
    }
  }
  flush();
  return tokens;
}

const std::set<std::string>& phrase_stops() {
  static const std::set<std::string> stops = {"the", "and", "then", "past", "to", "at"};
  return stops;
}

}  // namespace

std::string_view to_string(SpotSource source) {
  switch (source) {
    case SpotSource::kRemote: return "remote";
    case SpotSource::kMock: return "mock";
    case SpotSource::kWholeInstruction: return "whole-instruction";
  }
  return "unknown";
}

std::string normalize_instruction(std::string_view instruction) {
  std::string out;
  bool pending_space = false;
  for (char c : instruction) {
    if (is_space(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(c);
  }
  return out;
}

std::string normalize_phrase(std::string_view phrase) {
  std::string out = normalize_instruction(phrase);
  std::size_t b = 0;
  std::size_t e = out.size();
  while (b < e && (is_edge_punct(out[b]) || is_space(out[b]))) ++b;
  while (e > b && (is_edge_punct(out[e - 1]) || is_space(out[e - 1]))) --e;
  out = out.substr(b, e - b);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::vector<std::string> normalize_spots(const std::vector<std::string>& phrases) {
  std::vector<std::string> out;
  for (const auto& p : phrases) {
    std::string n = normalize_phrase(p);
    if (n.empty()) continue;
    if (!out.empty() && out.back() == n) continue;
    out.push_back(std::move(n));
  }
  return out;
}

AttentionSpotSequence whole_instruction(std::string_view instruction) {
  std::string n = normalize_phrase(instruction);
  if (n.empty()) throw InvalidInputError("instruction is empty");
  return {{std::move(n)}, SpotSource::kWholeInstruction};
}

AttentionSpotSequence mock_parse(std::string_view instruction) {
  if (normalize_phrase(instruction).empty()) throw InvalidInputError("instruction is empty");
  const std::vector<std::string> tokens = tokenize(instruction);
  std::vector<std::string> phrases;
  for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
    const std::string& t = tokens[i];
    if ((t != "past" && t != "to" && t != "at") || tokens[i + 1] != "the") continue;
    std::string phrase;
    std::size_t j = i + 2;
    for (; j < tokens.size(); ++j) {
      const std::string& w = tokens[j];
      if (phrase_stops().count(w) || std::ispunct(static_cast<unsigned char>(w[0]))) break;
      if (!phrase.empty()) phrase.push_back(' ');
      phrase += w;
    }
    if (!phrase.empty()) phrases.push_back(std::move(phrase));
    i = j - 1;
  }
  std::vector<std::string> spots = normalize_spots(phrases);
  if (spots.empty()) return whole_instruction(instruction);
  return {std::move(spots), SpotSource::kMock};
}

AttentionSpotSequence parse_instruction(InstructionParser& client, std::string_view instruction,
                                        int max_spots, const RetryPolicy& retry) {
  if (max_spots < 1) throw InvalidInputError("max_spots must be at least 1");
  AttentionSpotSequence fallback = whole_instruction(instruction);

  ParserRequest request{std::string(kPromptText), std::string(instruction), max_spots};
  std::chrono::milliseconds backoff = retry.initial_backoff;
  const int attempts = std::max(1, retry.attempts);
  for (int attempt = 0; attempt < attempts; ++attempt) {
    if (attempt > 0) {
      if (retry.sleep) {
        retry.sleep(backoff);
      } else {
        std::this_thread::sleep_for(backoff);
      }
      backoff *= 2;
    }
    ParserResponse response;
    try {
      response = client.parse(request);
    } catch (const Error&) {
      continue;
    }
    std::vector<std::string> spots = normalize_spots(response.spots);
    if (spots.empty()) return fallback;
    if (spots.size() > static_cast<std::size_t>(max_spots)) spots.resize(max_spots);
    return {std::move(spots), client.source()};
  }
  return fallback;
}

}  // namespace vlncm::language
