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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "redukt/error.hpp"
#include "redukt/io.hpp"
#include "redukt/redgraph.hpp"
#include "redukt/strings.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"

namespace redukt {
namespace {

namespace o = oracle;
using nlohmann::json;

TEST(GraphJsonTest, SchemaOfBuiltGraph) {
  const json j = ToJson(ToRaw(BuildReductionGraph(ParseLegalString("2 -2"))));
  ASSERT_EQ(j.at("vertices").size(), 6u);
  EXPECT_EQ(j.at("vertices")[0], (json{{"id", "s"}}));
  EXPECT_EQ(j.at("vertices")[1], (json{{"id", "I1"}, {"label", 2}}));
  EXPECT_EQ(j.at("reality").size(), 3u);
  EXPECT_EQ(j.at("desire").size(), 2u);
  EXPECT_FALSE(j.contains("merge"));
}

TEST(GraphJsonTest, RoundTrip) {
  std::mt19937 rng(127);
  for (int i = 0; i < 100; ++i) {
    const auto u = o::FromWord(o::RandomWord(rng, 6));
    const RawGraph raw = ToRaw(BuildExtendedReductionGraph(u));
    const json j = ToJson(raw);
    const RawGraph back = RawGraphFromJson(ParseJson(j.dump()));
    EXPECT_EQ(ToJson(back), j);
    ASSERT_TRUE(back.merge);
    EXPECT_EQ(LegalizationRepresentative(ValidateExtendedArg(back)),
              CanonicalEquivRep(u));
  }
}

TEST(GraphJsonTest, RejectsMalformedDocuments) {
  for (const char* bad : {
           "[]",
           "{\"reality\":[],\"desire\":[]}",
           "{\"vertices\":{},\"reality\":[],\"desire\":[]}",
           "{\"vertices\":[{\"label\":2}],\"reality\":[],\"desire\":[]}",
           "{\"vertices\":[{\"id\":3}],\"reality\":[],\"desire\":[]}",
           "{\"vertices\":[{\"id\":\"a\",\"label\":\"2\"}],\"reality\":[],\"desire\":[]}",
           "{\"vertices\":[{\"id\":\"a\",\"label\":1}],\"reality\":[],\"desire\":[]}",
           "{\"vertices\":[{\"id\":\"a\",\"label\":99999999999}],\"reality\":[],\"desire\":[]}",
           "{\"vertices\":[],\"reality\":[[\"s\"]],\"desire\":[]}",
           "{\"vertices\":[],\"reality\":[],\"desire\":[[1,2]]}",
           "{\"vertices\":[],\"reality\":[],\"desire\":[],\"merge\":{}}",
       }) {
    EXPECT_THROW(RawGraphFromJson(ParseJson(bad)), ParseError) << bad;
  }
  EXPECT_THROW(ParseJson("{"), ParseError);
}

TEST(GraphJsonTest, LoadsFixtures) {
  const RawGraph raw = fixtures::EightLabels();
  EXPECT_EQ(raw.vertices.size(), 34u);
  EXPECT_EQ(raw.reality.size(), 17u);
  EXPECT_EQ(raw.desire.size(), 16u);
  EXPECT_TRUE(fixtures::TwoPointerLinked().merge.has_value());
}

TEST(MultigraphJsonTest, ParseAndRoundTrip) {
  const json j = ParseJson(
      R"({"nodes":["C1","C2"],"edges":[{"label":2,"ends":["C2","C1"]},)"
      R"({"label":3,"ends":["C1","C1"]}]})");
  const auto m = MultigraphFromJson(j);
  EXPECT_EQ(m.nodes(), (std::vector<std::string>{"C1", "C2"}));
  EXPECT_EQ(m.edges().at(2), (EdgeEnds{"C1", "C2"}));
  EXPECT_TRUE(m.edges().at(3).is_loop());
  EXPECT_EQ(MultigraphFromJson(ToJson(m)), m);
}

TEST(MultigraphJsonTest, RejectsMalformedDocuments) {
  for (const char* bad : {
           R"({"edges":[]})",
           R"({"nodes":["A"],"edges":[{"label":2,"ends":["A","A"]},{"label":2,"ends":["A","A"]}]})",
           R"({"nodes":["A"],"edges":[{"label":2,"ends":["A","B"]}]})",
           R"({"nodes":["A"],"edges":[{"label":2,"ends":["A"]}]})",
           R"({"nodes":["A"],"edges":[{"label":1,"ends":["A","A"]}]})",
           R"({"nodes":["A","A"],"edges":[]})",
           R"({"nodes":[1],"edges":[]})",
       }) {
    EXPECT_THROW(MultigraphFromJson(ParseJson(bad)), ParseError) << bad;
  }
}

TEST(DotTest, StylesAndOrder) {
  const RawGraph raw = ToRaw(BuildExtendedReductionGraph(ParseLegalString("2 2")));
  const std::string dot = ToDot(raw);
  EXPECT_EQ(dot.rfind("graph reduction {", 0), 0u);
  EXPECT_NE(dot.find("\"I1\" -- \"s\" [color=\"black:invis:black\"];"),
            std::string::npos);
  EXPECT_NE(dot.find("\"I1\" -- \"I2'\";"), std::string::npos);
  EXPECT_NE(dot.find("\"I1\" -- \"I1'\" [style=dashed];"), std::string::npos);
  EXPECT_NE(dot.find("\"s\" [label=\"s\"];"), std::string::npos);
  EXPECT_NE(dot.find("\"I2\" [label=\"2\"];"), std::string::npos);

  RawGraph shuffled = raw;
  std::mt19937 rng(131);
  std::shuffle(shuffled.vertices.begin(), shuffled.vertices.end(), rng);
  std::shuffle(shuffled.reality.begin(), shuffled.reality.end(), rng);
  for (auto& [a, b] : shuffled.desire) std::swap(a, b);
  EXPECT_EQ(ToDot(shuffled), dot);
}

}  // namespace
}  // namespace redukt
