// Copyright 2026 The metric-forge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace mforge::cli {

/// Exit codes of the command-line frontend.
inline constexpr int kOk = 0;
inline constexpr int kComputationError = 1;
inline constexpr int kUsageError = 2;

/// Runs one subcommand. `args` excludes the program name. JSON records and
/// tables go to `out`, usage messages to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Hex FNV-1a digest of the given files' bytes, in order.
std::string input_digest(const std::vector<std::string>& paths);

}  // namespace mforge::cli
