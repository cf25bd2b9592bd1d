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

#ifndef REDUKT_IO_HPP_
#define REDUKT_IO_HPP_

#include <string>
#include <string_view>

#include <json.hpp>

#include "redukt/flips.hpp"
#include "redukt/pcgraph.hpp"
#include "redukt/redgraph.hpp"

namespace redukt {

// Graph schema:
//   {"vertices": [{"id": "I1", "label": 2}, ..., {"id": "s"}, {"id": "t"}],
//    "reality": [["s", "I1"], ...], "desire": [...], "merge": [...]}
// with "merge" optional. Throws ParseError on schema violations.
RawGraph RawGraphFromJson(const nlohmann::json& j);
nlohmann::json ToJson(const RawGraph& raw);

// Multigraph schema:
//   {"nodes": ["C1", ...], "edges": [{"label": 2, "ends": ["C1", "C2"]}]}
// Throws ParseError on schema violations or repeated edge labels.
PointerComponentGraph MultigraphFromJson(const nlohmann::json& j);
nlohmann::json ToJson(const PointerComponentGraph& m);

// Throws ParseError if the text is not JSON.
nlohmann::json ParseJson(std::string_view text);

// Reality edges drawn double, desire edges plain, merge edges dashed.
// Vertices and edges appear in sorted order.
std::string ToDot(const RawGraph& raw);

}  // namespace redukt

#endif  // REDUKT_IO_HPP_
