//
// Copyright (C) 2026 The xassoc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef XASSOC_CLI_HPP_
#define XASSOC_CLI_HPP_

#include <string>
#include <vector>

namespace xassoc {

inline constexpr const char* kVersion = "1.0.0";

/// Entry point of the `xassoc` tool. `args[0]` is the program name.
/// Returns 0 iff every requested artifact was written and re-read cleanly.
int run(const std::vector<std::string>& args);

}  // namespace xassoc

#endif  // XASSOC_CLI_HPP_
