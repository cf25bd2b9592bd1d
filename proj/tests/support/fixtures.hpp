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

#ifndef REDUKT_TESTS_SUPPORT_FIXTURES_HPP_
#define REDUKT_TESTS_SUPPORT_FIXTURES_HPP_

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "redukt/io.hpp"
#include "redukt/redgraph.hpp"

#ifndef REDUKT_FIXTURE_DIR
#error "REDUKT_FIXTURE_DIR must name the fixture directory"
#endif

namespace redukt::fixtures {

inline std::string Path(const std::string& name) {
  return std::string(REDUKT_FIXTURE_DIR) + "/" + name;
}

inline std::string Text(const std::string& name) {
  std::ifstream in(Path(name));
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline RawGraph Load(const std::string& name) {
  return RawGraphFromJson(ParseJson(Text(name)));
}

// Two labels; the 2s form the s-t path and the 3s a separate square.
inline RawGraph ThetaEmpty() { return Load("theta_empty.json"); }
// Labels 2..9 over six components, with a disconnected component graph.
inline RawGraph EightLabels() { return Load("eight_labels.json"); }
// Two crossing pointers; the merge variants split or join the path.
inline RawGraph TwoPointer() { return Load("two_pointer.json"); }
inline RawGraph TwoPointerSplit() { return Load("two_pointer_split.json"); }
inline RawGraph TwoPointerLinked() { return Load("two_pointer_linked.json"); }

}  // namespace redukt::fixtures

#endif  // REDUKT_TESTS_SUPPORT_FIXTURES_HPP_
