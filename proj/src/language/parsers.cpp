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

#include "vlncm/language/parsers.hpp"

#include <cstdlib>

#include "json.hpp"
#include "vlncm/error.hpp"
#include "vlncm/http.hpp"

namespace vlncm::language {

using nlohmann::json;

ParserResponse MockParser::parse(const ParserRequest& request) {
  AttentionSpotSequence seq = mock_parse(request.instruction);
  ParserResponse response;
  if (seq.source != SpotSource::kMock) return response;
  response.spots = std::move(seq.spots);
  if (response.spots.size() > static_cast<std::size_t>(request.max_spots)) {
    response.spots.resize(request.max_spots);
  }
  for (const auto& s : response.spots) response.raw += s + "\n";
  return response;
}

RemoteParser::RemoteParser(RemoteParserConfig config) : config_(std::move(config)) {
  if (config_.url.empty()) throw InvalidInputError("remote parser URL is empty");
}

RemoteParserConfig RemoteParser::config_from_env() {
  RemoteParserConfig config;
  const char* url = std::getenv("VLNCM_LLM_URL");
  if (url == nullptr || *url == '\0') throw InvalidInputError("VLNCM_LLM_URL is not set");
  config.url = url;
  if (const char* token = std::getenv("VLNCM_LLM_TOKEN")) config.token = token;
  return config;
}

ParserResponse parse_response_body(const std::string& body) {
  json j;
  try {
    j = json::parse(body);
  } catch (const json::parse_error& e) {
    throw ParserError(std::string("malformed parser response: ") + e.what());
  }
  if (!j.is_object() || !j.contains("spots") || !j["spots"].is_array()) {
    throw ParserError("parser response lacks a 'spots' array");
  }
  ParserResponse response;
  response.raw = body;
  for (const auto& s : j["spots"]) {
    if (!s.is_string()) throw ParserError("parser response has a non-text spot");
    response.spots.push_back(s.get<std::string>());
  }
  return response;
}

ParserResponse RemoteParser::parse(const ParserRequest& request) {
  const json body = {{"model", config_.model},
                     {"prompt", request.prompt},
                     {"instruction", request.instruction}};
  net::HttpResult result;
  try {
    result = net::post_json(config_.url, body.dump(), config_.token,
                            std::chrono::seconds(config_.timeout_seconds));
  } catch (const IoError& e) {
    throw ParserError(e.what());
  }
  if (result.status != 200) {
    throw ParserError("parser endpoint returned HTTP " + std::to_string(result.status));
  }
  ParserResponse response = parse_response_body(result.body);
  if (response.spots.size() > static_cast<std::size_t>(request.max_spots)) {
    response.spots.resize(request.max_spots);
  }
  return response;
}

}  // namespace vlncm::language
