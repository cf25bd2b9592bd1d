// Copyright 2026 The Redukt Authors.
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

#ifndef REDUKT_TOOLS_CLI_HPP_
#define REDUKT_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace redukt::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMalformed = 1;
inline constexpr int kExitNegative = 2;

// Runs one command line. args[0] is the program name. Results go to `out`;
// errors are written to `err` as JSON objects.
int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace redukt::cli

#endif  // REDUKT_TOOLS_CLI_HPP_
