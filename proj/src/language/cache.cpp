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

#include "vlncm/language/cache.hpp"

#include <cstdio>
#include <system_error>

#include "json.hpp"
#include "vlncm/error.hpp"
#include "vlncm/seed.hpp"
#include "vlncm/world/io.hpp"

namespace vlncm::language {

using nlohmann::json;

CachedParser::CachedParser(std::shared_ptr<InstructionParser> inner, std::filesystem::path dir,
                           std::string prompt_version)
    : inner_(std::move(inner)), dir_(std::move(dir)), prompt_version_(std::move(prompt_version)) {
  if (!inner_) throw InvalidInputError("cached parser needs an inner parser");
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec || !std::filesystem::is_directory(dir_)) {
    throw IoError("cache directory '" + dir_.string() + "' is not writable");
  }
}

std::string CachedParser::key_for(std::string_view instruction) const {
  return prompt_version_ + "\n" + normalize_instruction(instruction);
}

std::filesystem::path CachedParser::path_for(std::string_view instruction) const {
  char name[32];
  std::snprintf(name, sizeof(name), "%016llx.json",
                static_cast<unsigned long long>(fnv1a64(key_for(instruction))));
  return dir_ / name;
}

std::optional<std::vector<std::string>> CachedParser::load(
    const std::string& key, const std::filesystem::path& path) const {
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) return std::nullopt;
  try {
    const json j = json::parse(world::read_text_file(path));
    if (j.at("key").get<std::string>() != key) return std::nullopt;
    auto spots = j.at("spots").get<std::vector<std::string>>();
    if (spots.empty()) return std::nullopt;
    return spots;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

std::mutex& CachedParser::key_mutex(const std::string& key) {
  std::lock_guard<std::mutex> lock(table_mutex_);
  auto& slot = key_mutexes_[key];
  if (!slot) slot = std::make_unique<std::mutex>();
  return *slot;
}

ParserResponse CachedParser::parse(const ParserRequest& request) {
  const std::string key = key_for(request.instruction);
  const std::filesystem::path path = path_for(request.instruction);
  std::lock_guard<std::mutex> lock(key_mutex(key));
  if (auto spots = load(key, path)) {
    ++hits_;
    ParserResponse response;
    response.spots = std::move(*spots);
    return response;
  }
  ++misses_;
  ParserResponse response = inner_->parse(request);
  // Empty answers are not cached so a later call can still reach the client.
  if (!response.spots.empty()) {
    const json j = {{"key", key}, {"spots", response.spots}};
    world::write_text_file(path, j.dump(2) + "\n");
  }
  return response;
}

std::shared_ptr<CachedParser> cached(std::shared_ptr<InstructionParser> inner,
                                     std::filesystem::path dir, std::string prompt_version) {
  return std::make_shared<CachedParser>(std::move(inner), std::move(dir),
                                        std::move(prompt_version));
}

}  // namespace vlncm::language
