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

#include <random>

#include "redukt/error.hpp"
#include "redukt/strings.hpp"
#include "support/oracle.hpp"

namespace redukt {
namespace {

namespace o = oracle;

const char* const kU = "2 -7 4 7 3 5 3 -4 2 6 5 6";

LegalString S(const char* text) { return ParseLegalString(text); }

TEST(ParseTest, ReadsExampleString) {
  const LegalString u = S(kU);
  ASSERT_EQ(u.size(), 12u);
  EXPECT_EQ(u[1], (Pointer{7, true}));
  EXPECT_EQ(u[2], (Pointer{4, false}));
  EXPECT_EQ(FormatLegalString(u), kU);
}

TEST(ParseTest, EmptyAndWhitespace) {
  EXPECT_TRUE(S("").empty());
  EXPECT_TRUE(S("   \t\n").empty());
  EXPECT_EQ(FormatLegalString(S("  2\t-2 ")), "2 -2");
}

TEST(ParseTest, RejectsIllegalStrings) {
  EXPECT_THROW(S("2 3 2"), LegalityError);
  EXPECT_THROW(S("2 2 2"), LegalityError);
  EXPECT_THROW(S("2 -2 -2 2"), LegalityError);
}

TEST(ParseTest, RejectsBadTokens) {
  for (const char* bad : {"1 1", "0 0", "x x", "2a 2a", "--2 2", "+2 2", "- 2 2",
                          "-1 1"}) {
    EXPECT_THROW(S(bad), ParseError) << bad;
  }
}

TEST(ParseTest, AcceptsLargeSymbols) {
  EXPECT_EQ(Domain(S("100 -100")), (SymbolSet{100}));
}

TEST(DomainTest, Examples) {
  EXPECT_EQ(Domain(S(kU)), (SymbolSet{2, 3, 4, 5, 6, 7}));
  EXPECT_TRUE(Domain(S("")).empty());
  EXPECT_EQ(Domain(S("2 -2")), (SymbolSet{2}));
}

TEST(PositivityTest, Examples) {
  const LegalString u = S(kU);
  EXPECT_TRUE(IsPositive(u, 7));
  EXPECT_FALSE(IsPositive(u, 2));
  EXPECT_TRUE(IsNegative(u, 2));
  EXPECT_TRUE(IsPositive(S("2 -2"), 2));
  EXPECT_FALSE(IsPositive(S("-2 -2"), 2));
  EXPECT_THROW(IsPositive(u, 9), PreconditionError);
}

TEST(PIntervalTest, Examples) {
  const LegalString u = S(kU);
  EXPECT_EQ(PIntervalOf(u, 2), (PInterval{1, 9}));
  EXPECT_EQ(PIntervalOf(S("2 -2"), 2), (PInterval{1, 2}));
  EXPECT_EQ(PIntervalOf(u, 5), (PInterval{6, 11}));
  EXPECT_THROW(PIntervalOf(u, 8), PreconditionError);
}

TEST(OverlapTest, Examples) {
  EXPECT_TRUE(Overlap(S("2 3 -2 -3"), 2, 3));
  EXPECT_FALSE(Overlap(S("2 2 3 3"), 2, 3));
  EXPECT_FALSE(Overlap(S(kU), 2, 6));
  EXPECT_FALSE(Overlap(S("2 3 3 2"), 2, 3));
}

TEST(OverlapTest, RejectsEqualOrMissingSymbols) {
  EXPECT_THROW(Overlap(S("2 3 2 3"), 2, 2), PreconditionError);
  EXPECT_THROW(Overlap(S("2 3 2 3"), 2, 4), PreconditionError);
}

TEST(InverseTest, Examples) {
  EXPECT_EQ(FormatLegalString(Inverse(LegalString::FromLetters(
                {{2, false}, {3, false}, {2, false}, {3, false}}))),
            "-3 -2 -3 -2");
  EXPECT_TRUE(Inverse(S("")).empty());
  EXPECT_EQ(FormatLegalString(Inverse(S("2 -3 2 3"))), "-3 -2 3 -2");
}

TEST(FromLettersTest, ValidatesLegality) {
  EXPECT_THROW(LegalString::FromLetters({{2, false}, {3, false}}),
               LegalityError);
  EXPECT_THROW(LegalString::FromLetters({{1, false}, {1, false}}),
               PreconditionError);
}

TEST(EquivalentTest, Examples) {
  EXPECT_TRUE(Equivalent(S("2 -2 3 3"), S("-2 2 3 3")));
  EXPECT_FALSE(Equivalent(S("2 -2 3 3"), S("2 -2 -3 3")));
  EXPECT_TRUE(Equivalent(S(kU), S(kU)));
  EXPECT_FALSE(Equivalent(S("2 2 3 3"), S("3 3 2 2")));
  EXPECT_FALSE(Equivalent(S("2 2"), S("3 3")));
}

TEST(CanonicalRepTest, Examples) {
  EXPECT_EQ(FormatLegalString(CanonicalEquivRep(S("-2 2 3 3"))), "2 -2 3 3");
  EXPECT_EQ(FormatLegalString(CanonicalEquivRep(S("2 -2 3 3"))), "2 -2 3 3");
  EXPECT_EQ(FormatLegalString(CanonicalEquivRep(S("-2 -2"))), "2 2");
  EXPECT_EQ(FormatLegalString(CanonicalEquivRep(S(kU))),
            "2 7 4 -7 3 5 3 -4 2 6 5 6");
}

// All legal strings over {2,3} and {2,3,4}, with every sign pattern.
std::vector<LegalString> AllSmallStrings() {
  std::vector<LegalString> out;
  for (const auto& w : o::CanonicalStringsUpTo({2, 3, 4})) {
    const std::size_t n = w.size();
    if (n > 4) {
      out.push_back(o::FromWord(w));
      continue;
    }
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      o::Word v = w;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask >> i & 1u) v[i] = -v[i];
      }
      out.push_back(o::FromWord(v));
    }
  }
  return out;
}

TEST(EquivalentTest, IsAnEquivalenceMatchingCanonicalRep) {
  const auto all = AllSmallStrings();
  std::vector<LegalString> small;
  for (const auto& u : all) {
    if (u.size() <= 4) small.push_back(u);
  }
  for (const auto& u : small) {
    EXPECT_TRUE(Equivalent(u, u));
    for (const auto& v : small) {
      const bool uv = Equivalent(u, v);
      EXPECT_EQ(uv, Equivalent(v, u));
      EXPECT_EQ(uv, CanonicalEquivRep(u) == CanonicalEquivRep(v));
      if (!uv) continue;
      for (const auto& w : small) {
        if (Equivalent(v, w)) EXPECT_TRUE(Equivalent(u, w));
      }
    }
  }
}

TEST(CanonicalRepTest, IdempotentAndEquivalent) {
  for (const auto& u : AllSmallStrings()) {
    const LegalString c = CanonicalEquivRep(u);
    EXPECT_TRUE(Equivalent(c, u));
    EXPECT_EQ(CanonicalEquivRep(c), c);
    EXPECT_EQ(o::ToWord(c), o::Canonical(o::ToWord(u)));
  }
}

TEST(StringPropertiesTest, RandomizedLaws) {
  std::mt19937 rng(7);
  for (int i = 0; i < 500; ++i) {
    const LegalString u = o::FromWord(o::RandomWord(rng, 6));
    EXPECT_EQ(Inverse(Inverse(u)), u);
    EXPECT_EQ(ParseLegalString(FormatLegalString(u)), u);
    const SymbolSet dom = Domain(u);
    for (Symbol p : dom) {
      EXPECT_EQ(IsPositive(u, p), o::Positive(o::ToWord(u), p));
      const PInterval iv = PIntervalOf(u, p);
      EXPECT_LT(iv.first, iv.last);
      EXPECT_EQ(u[iv.first - 1].symbol, p);
      EXPECT_EQ(u[iv.last - 1].symbol, p);
      for (Symbol q : dom) {
        if (q == p) continue;
        EXPECT_EQ(Overlap(u, p, q), Overlap(u, q, p));
        const PInterval jv = PIntervalOf(u, q);
        const bool interleaved = (iv.first < jv.first && jv.first < iv.last &&
                                  iv.last < jv.last) ||
                                 (jv.first < iv.first && iv.first < jv.last &&
                                  jv.last < iv.last);
        EXPECT_EQ(Overlap(u, p, q), interleaved);
      }
    }
  }
}

}  // namespace
}  // namespace redukt
