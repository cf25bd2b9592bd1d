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

#ifndef REDUKT_RULES_HPP_
#define REDUKT_RULES_HPP_

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "redukt/strings.hpp"

namespace redukt {

enum class RuleKind {
  kSnr,   // u1 p p u2 -> u1 u2
  kSpr,   // u1 p u2 -p u3 -> u1 inv(u2) u3
  kSdr,   // u1 p u2 q u3 p u4 q u5 -> u1 u4 u3 u2 u5
  kDspr,  // u1 p u2 p u3 -> u1 p inv(u2) p u3
  kDsdr,  // u1 p u2 q u3 -p u4 -q u5 -> u1 p u4 q u3 -p u2 -q u5
};

// A rule instance keyed by unbarred symbols. Which barred variant matches is
// read off the string. For the two-symbol kinds p < q is kept, and the symbol
// occurring first in the string plays the role of p in the rule pattern.
struct Rule {
  RuleKind kind = RuleKind::kSnr;
  Symbol p = 2;
  Symbol q = 0;  // only for kSdr and kDsdr

  bool is_dual() const {
    return kind == RuleKind::kDspr || kind == RuleKind::kDsdr;
  }
  bool is_double() const {
    return kind == RuleKind::kSdr || kind == RuleKind::kDsdr;
  }

  friend auto operator<=>(const Rule&, const Rule&) = default;
};

// Builds a rule, normalizing the symbol order of double rules. Throws
// PreconditionError for p == q in a double rule.
Rule MakeRule(RuleKind kind, Symbol p, Symbol q = 0);

using RuleSequence = std::vector<Rule>;

SymbolSet RuleDomain(const Rule& rule);
// Union of the rule domains.
SymbolSet SequenceDomain(const RuleSequence& seq);
// Symmetric difference of the rule domains.
SymbolSet Odom(const RuleSequence& seq);
// Rule domains pairwise disjoint.
bool IsReduced(const RuleSequence& seq);

// Each throws PreconditionError when the rule pattern does not match.
LegalString ApplySnr(const LegalString& u, Symbol p);
LegalString ApplySpr(const LegalString& u, Symbol p);
LegalString ApplySdr(const LegalString& u, Symbol p, Symbol q);
LegalString ApplyDspr(const LegalString& u, Symbol p);
LegalString ApplyDsdr(const LegalString& u, Symbol p, Symbol q);

bool IsApplicable(const Rule& rule, const LegalString& u);
LegalString Apply(const Rule& rule, const LegalString& u);
// Applies rules left to right.
LegalString Apply(const RuleSequence& seq, const LegalString& u);

// Applicable snr/spr/sdr instances, in the order snr, spr, sdr and by
// increasing symbols within each kind.
RuleSequence ApplicableStringRules(const LegalString& u);

// Depth-first search for a sequence of string pointer rules reducing u to the
// empty string. One always exists.
RuleSequence SuccessfulReductionSearch(const LegalString& u);

// dspr_p for every negative p, dsdr_{p,q} for every pair of positive
// overlapping p < q.
RuleSequence ApplicableDualRules(const LegalString& u);

// All ≈-canonical strings reachable from u by dual rules. Throws
// BudgetExceededError once more than max_size strings are found.
std::set<LegalString> Orbit(const LegalString& u, std::size_t max_size);

// Decided through reduction-graph isomorphism.
bool DualEquivalent(const LegalString& u, const LegalString& v);

// "snr(2) spr(3) dsdr(2,3)".
std::string FormatRule(const Rule& rule);
std::string FormatRuleSequence(const RuleSequence& seq);
// Throws ParseError.
RuleSequence ParseRuleSequence(std::string_view text);

}  // namespace redukt

#endif  // REDUKT_RULES_HPP_
