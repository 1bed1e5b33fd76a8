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
#include <string>

namespace vlncm::net {

struct HttpResult {
  int status = 0;
  std::string body;
};

// POSTs a JSON body to `url` (http:// or https://host[:port]/path) with an
// optional bearer token. Transport failures throw IoError; HTTP error
// statuses are returned to the caller.
HttpResult post_json(const std::string& url, const std::string& body,
                     const std::string& bearer_token,
                     std::chrono::seconds timeout = std::chrono::seconds(30));

std::string base64_encode(const std::string& bytes);

}  // namespace vlncm::net
