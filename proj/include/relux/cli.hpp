// Copyright 2026 The relu-exact Authors
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

#ifndef RELUX_CLI_HPP
#define RELUX_CLI_HPP

#include <string>
#include <vector>

namespace relux {

// Full command-line entry point. Exit codes: 0 success, 1 input error,
// 2 enumeration budget exceeded.
int cli_main(int argc, const char* const* argv);

// Convenience overload for tests.
int cli_main(const std::vector<std::string>& args);

}  // namespace relux

#endif  // RELUX_CLI_HPP
