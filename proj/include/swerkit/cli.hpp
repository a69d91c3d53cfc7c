// Copyright 2026 The swerkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SWERKIT_CLI_HPP
#define SWERKIT_CLI_HPP

#include <ostream>

namespace swerkit::cli {

// Exit codes: 0 success, 2 input/usage error, 1 internal error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitInput = 2;

// Entry point of the `swerkit` binary; `out` receives reports written to
// stdout, `err` warnings and `error: <code>: <detail>` lines.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace swerkit::cli

#endif  // SWERKIT_CLI_HPP
