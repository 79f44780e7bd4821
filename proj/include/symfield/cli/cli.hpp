// Copyright 2026 The symfield Authors
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

#ifndef SYMFIELD_CLI_CLI_HPP_
#define SYMFIELD_CLI_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace symfield::cli {

// Exit statuses.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

// Environment variable holding the default field-size ceiling.
inline constexpr const char* kCeilingEnv = "SYMFIELD_CEILING";

// Runs one command line (args excludes the program name). Reports go to
// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symfield::cli

#endif  // SYMFIELD_CLI_CLI_HPP_
