/*
 * Copyright 2026 The frobound Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace frobound::cli {

enum ExitCode : int {
  kSuccess = 0,
  kPrecondition = 1,  // mathematical precondition violated (e.g. n < d+1)
  kUsage = 2,
  kVerificationFailed = 3,
};

/// Environment variables consulted for defaults.
inline constexpr const char* kPrimeEnv = "FROBOUND_PRIME";
inline constexpr const char* kWorkersEnv = "FROBOUND_WORKERS";

/// Runs the command line `args` (without the program name). Output goes to
/// `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "3..8,10,11" into {3,4,5,6,7,8,10,11}.
std::vector<int> parse_int_list(const std::string& text);

}  // namespace frobound::cli
