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

#include "vlncm/http.hpp"

#include "httplib.h"
#include "vlncm/error.hpp"

namespace vlncm::net {

HttpResult post_json(const std::string& url, const std::string& body,
                     const std::string& bearer_token, std::chrono::seconds timeout) {
  const std::size_t scheme_end = url.find("://");
  if (scheme_end == std::string::npos) throw IoError("URL lacks a scheme: '" + url + "'");
  const std::size_t path_start = url.find('/', scheme_end + 3);
  const std::string origin = url.substr(0, path_start);
  const std::string path = path_start == std::string::npos ? "/" : url.substr(path_start);

  httplib::Client client(origin);
  if (!client.is_valid()) throw IoError("unsupported endpoint '" + url + "'");
  client.set_connection_timeout(timeout);
  client.set_read_timeout(timeout);
  client.set_write_timeout(timeout);
  httplib::Headers headers;
  if (!bearer_token.empty()) headers.emplace("Authorization", "Bearer " + bearer_token);

  auto res = client.Post(path, headers, body, "application/json");
  if (!res) {
    throw IoError("request to '" + url + "' failed: " + httplib::to_string(res.error()));
  }
  return {res->status, res->body};
}

std::string base64_encode(const std::string& bytes) { return httplib::detail::base64_encode(bytes); }

}  // namespace vlncm::net
