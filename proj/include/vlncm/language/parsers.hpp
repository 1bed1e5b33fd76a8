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

#include <string>
#include <vector>

#include "vlncm/language/attention_spots.hpp"

namespace vlncm::language {

struct ParserRequest {
  std::string prompt;
  std::string instruction;
  int max_spots = kDefaultMaxSpots;
};

struct ParserResponse {
  std::vector<std::string> spots;
  std::string raw;
};

// Implementations must be safe to call from several threads at once.
class InstructionParser {
 public:
  virtual ~InstructionParser() = default;
  // Throws ParserError (or IoError) when the call fails.
  virtual ParserResponse parse(const ParserRequest& request) = 0;
  virtual SpotSource source() const = 0;
};

// Offline parser built on mock_parse.
class MockParser : public InstructionParser {
 public:
  ParserResponse parse(const ParserRequest& request) override;
  SpotSource source() const override { return SpotSource::kMock; }
};

struct RemoteParserConfig {
  std::string url;
  std::string token;
  std::string model = "gpt-3.5-turbo";
  int timeout_seconds = 30;
};

// Speaks the JSON protocol {model, prompt, instruction} -> {spots: [...]}.
class RemoteParser : public InstructionParser {
 public:
  explicit RemoteParser(RemoteParserConfig config);

  // Reads VLNCM_LLM_URL and VLNCM_LLM_TOKEN. Throws InvalidInputError when
  // the URL is unset.
  static RemoteParserConfig config_from_env();

  ParserResponse parse(const ParserRequest& request) override;
  SpotSource source() const override { return SpotSource::kRemote; }

 private:
  RemoteParserConfig config_;
};

// Parses a JSON response body of the form {"spots": [...]}.
ParserResponse parse_response_body(const std::string& body);

}  // namespace vlncm::language
