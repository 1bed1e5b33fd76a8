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

#include <ostream>

namespace vlncm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitEnvironment = 3;

// Entry point for the `vlncm` tool. Returns the process exit code:
// 0 success, 1 failed dataset verification, 2 usage or input error,
// 3 environment error (missing credentials, unwritable output).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace vlncm::cli
