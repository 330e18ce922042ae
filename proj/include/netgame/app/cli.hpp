// Copyright 2026 The netgame Authors
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

#ifndef NETGAME_APP_CLI_HPP_
#define NETGAME_APP_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace netgame::app {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRefused = 1;     // enumeration budget exceeded
inline constexpr int kExitInputError = 2;  // unreadable or malformed input

// Entry point shared by the executable and the tests. `args` excludes the
// program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace netgame::app

#endif  // NETGAME_APP_CLI_HPP_
