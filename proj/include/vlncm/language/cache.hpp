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

#include <atomic>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vlncm/language/parsers.hpp"

namespace vlncm::language {

// Wraps a parser with an on-disk cache, one file per key. The key combines
// the prompt version with the whitespace-normalized instruction.
class CachedParser : public InstructionParser {
 public:
  CachedParser(std::shared_ptr<InstructionParser> inner, std::filesystem::path dir,
               std::string prompt_version);

  ParserResponse parse(const ParserRequest& request) override;
  SpotSource source() const override { return inner_->source(); }

  std::string key_for(std::string_view instruction) const;
  std::filesystem::path path_for(std::string_view instruction) const;

  std::size_t hits() const { return hits_.load(); }
  std::size_t misses() const { return misses_.load(); }

 private:
  std::optional<std::vector<std::string>> load(const std::string& key,
                                               const std::filesystem::path& path) const;
  std::mutex& key_mutex(const std::string& key);

  std::shared_ptr<InstructionParser> inner_;
  std::filesystem::path dir_;
  std::string prompt_version_;
  std::mutex table_mutex_;
  std::map<std::string, std::unique_ptr<std::mutex>> key_mutexes_;
  std::atomic<std::size_t> hits_{0};
  std::atomic<std::size_t> misses_{0};
};

// Convenience factory matching the library's other wrappers.
std::shared_ptr<CachedParser> cached(std::shared_ptr<InstructionParser> inner,
                                     std::filesystem::path dir,
                                     std::string prompt_version);

}  // namespace vlncm::language
