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

#include "redukt/rules.hpp"

#include <algorithm>
#include <deque>
#include <regex>

#include "redukt/error.hpp"
#include "redukt/redgraph.hpp"

namespace redukt {

namespace {

using Letters = std::vector<Pointer>;

void Append(Letters& out, std::span<const Pointer> part) {
  out.insert(out.end(), part.begin(), part.end());
}

// Half-open slice letters[from, to).
std::span<const Pointer> Slice(const LegalString& u, std::size_t from,
                               std::size_t to) {
  return u.letters().subspan(from, to - from);
}

bool Has(const LegalString& u, Symbol p) {
  return std::any_of(u.begin(), u.end(),
                     [p](const Pointer& x) { return x.symbol == p; });
}

[[noreturn]] void NotApplicable(const Rule& rule, const LegalString& u) {
  throw PreconditionError(FormatRule(rule) + " is not applicable to '" +
                          FormatLegalString(u) + "'");
}

// Positions a1 < b1 < a2 < b2 of two interleaved symbols, a being the one
// that occurs first.
struct Interleaving {
  std::size_t a1, b1, a2, b2;
};

std::optional<Interleaving> Interleave(const LegalString& u, Symbol p,
                                       Symbol q) {
  if (p == q || !Has(u, p) || !Has(u, q)) return std::nullopt;
  auto [p1, p2] = Occurrences(u, p);
  auto [q1, q2] = Occurrences(u, q);
  if (q1 < p1) {
    std::swap(p1, q1);
    std::swap(p2, q2);
  }
  if (!(p1 < q1 && q1 < p2 && p2 < q2)) return std::nullopt;
  return Interleaving{p1, q1, p2, q2};
}

}  // namespace

Rule MakeRule(RuleKind kind, Symbol p, Symbol q) {
  Rule rule{kind, p, 0};
  if (kind == RuleKind::kSdr || kind == RuleKind::kDsdr) {
    if (p == q) throw PreconditionError("double rule needs distinct symbols");
    rule.p = std::min(p, q);
    rule.q = std::max(p, q);
  }
  return rule;
}

SymbolSet RuleDomain(const Rule& rule) {
  if (rule.is_double()) return {rule.p, rule.q};
  return {rule.p};
}

SymbolSet SequenceDomain(const RuleSequence& seq) {
  SymbolSet out;
  for (const Rule& r : seq) {
    for (Symbol p : RuleDomain(r)) out.insert(p);
  }
  return out;
}

SymbolSet Odom(const RuleSequence& seq) {
  SymbolSet out;
  for (const Rule& r : seq) {
    for (Symbol p : RuleDomain(r)) {
      if (!out.erase(p)) out.insert(p);
    }
  }
  return out;
}

bool IsReduced(const RuleSequence& seq) {
  SymbolSet seen;
  for (const Rule& r : seq) {
    for (Symbol p : RuleDomain(r)) {
      if (!seen.insert(p).second) return false;
    }
  }
  return true;
}

LegalString ApplySnr(const LegalString& u, Symbol p) {
  const Rule rule = MakeRule(RuleKind::kSnr, p);
  if (!Has(u, p)) NotApplicable(rule, u);
  auto [i, j] = Occurrences(u, p);
  if (j != i + 1 || u[i] != u[j]) NotApplicable(rule, u);
  Letters out;
  Append(out, Slice(u, 0, i));
  Append(out, Slice(u, j + 1, u.size()));
  return LegalString::FromLetters(std::move(out));
}

LegalString ApplySpr(const LegalString& u, Symbol p) {
  const Rule rule = MakeRule(RuleKind::kSpr, p);
  if (!Has(u, p) || IsNegative(u, p)) NotApplicable(rule, u);
  auto [i, j] = Occurrences(u, p);
  Letters out;
  Append(out, Slice(u, 0, i));
  Append(out, InvertRange(Slice(u, i + 1, j)));
  Append(out, Slice(u, j + 1, u.size()));
  return LegalString::FromLetters(std::move(out));
}

LegalString ApplySdr(const LegalString& u, Symbol p, Symbol q) {
  const Rule rule = MakeRule(RuleKind::kSdr, p, q);
  auto il = Interleave(u, p, q);
  if (!il || IsPositive(u, p) || IsPositive(u, q)) NotApplicable(rule, u);
  Letters out;
  Append(out, Slice(u, 0, il->a1));
  Append(out, Slice(u, il->a2 + 1, il->b2));
  Append(out, Slice(u, il->b1 + 1, il->a2));
  Append(out, Slice(u, il->a1 + 1, il->b1));
  Append(out, Slice(u, il->b2 + 1, u.size()));
  return LegalString::FromLetters(std::move(out));
}

LegalString ApplyDspr(const LegalString& u, Symbol p) {
  const Rule rule = MakeRule(RuleKind::kDspr, p);
  if (!Has(u, p) || IsPositive(u, p)) NotApplicable(rule, u);
  auto [i, j] = Occurrences(u, p);
  Letters out;
  Append(out, Slice(u, 0, i + 1));
  Append(out, InvertRange(Slice(u, i + 1, j)));
  Append(out, Slice(u, j, u.size()));
  return LegalString::FromLetters(std::move(out));
}

LegalString ApplyDsdr(const LegalString& u, Symbol p, Symbol q) {
  const Rule rule = MakeRule(RuleKind::kDsdr, p, q);
  auto il = Interleave(u, p, q);
  if (!il || IsNegative(u, p) || IsNegative(u, q)) NotApplicable(rule, u);
  Letters out;
  Append(out, Slice(u, 0, il->a1 + 1));
  Append(out, Slice(u, il->a2 + 1, il->b2));
  out.push_back(u[il->b1]);
  Append(out, Slice(u, il->b1 + 1, il->a2));
  out.push_back(u[il->a2]);
  Append(out, Slice(u, il->a1 + 1, il->b1));
  Append(out, Slice(u, il->b2, u.size()));
  return LegalString::FromLetters(std::move(out));
}

bool IsApplicable(const Rule& rule, const LegalString& u) {
  const bool has_p = Has(u, rule.p);
  switch (rule.kind) {
    case RuleKind::kSnr: {
      if (!has_p) return false;
      auto [i, j] = Occurrences(u, rule.p);
      return j == i + 1 && u[i] == u[j];
    }
    case RuleKind::kSpr:
      return has_p && IsPositive(u, rule.p);
    case RuleKind::kDspr:
      return has_p && IsNegative(u, rule.p);
    case RuleKind::kSdr:
      return Interleave(u, rule.p, rule.q) && IsNegative(u, rule.p) &&
             IsNegative(u, rule.q);
    case RuleKind::kDsdr:
      return Interleave(u, rule.p, rule.q) && IsPositive(u, rule.p) &&
             IsPositive(u, rule.q);
  }
  return false;
}

LegalString Apply(const Rule& rule, const LegalString& u) {
  switch (rule.kind) {
    case RuleKind::kSnr:
      return ApplySnr(u, rule.p);
    case RuleKind::kSpr:
      return ApplySpr(u, rule.p);
    case RuleKind::kSdr:
      return ApplySdr(u, rule.p, rule.q);
    case RuleKind::kDspr:
      return ApplyDspr(u, rule.p);
    case RuleKind::kDsdr:
      return ApplyDsdr(u, rule.p, rule.q);
  }
  NotApplicable(rule, u);
}

LegalString Apply(const RuleSequence& seq, const LegalString& u) {
  LegalString cur = u;
  for (const Rule& r : seq) cur = Apply(r, cur);
  return cur;
}

RuleSequence ApplicableStringRules(const LegalString& u) {
  const SymbolSet dom = Domain(u);
  RuleSequence out;
  for (RuleKind kind : {RuleKind::kSnr, RuleKind::kSpr}) {
    for (Symbol p : dom) {
      const Rule r = MakeRule(kind, p);
      if (IsApplicable(r, u)) out.push_back(r);
    }
  }
  for (auto p = dom.begin(); p != dom.end(); ++p) {
    for (auto q = std::next(p); q != dom.end(); ++q) {
      const Rule r = MakeRule(RuleKind::kSdr, *p, *q);
      if (IsApplicable(r, u)) out.push_back(r);
    }
  }
  return out;
}

namespace {

bool ReduceDfs(const LegalString& u, RuleSequence& path,
               std::set<LegalString>& dead) {
  if (u.empty()) return true;
  if (dead.contains(u)) return false;
  for (const Rule& r : ApplicableStringRules(u)) {
    path.push_back(r);
    if (ReduceDfs(Apply(r, u), path, dead)) return true;
    path.pop_back();
  }
  dead.insert(u);
  return false;
}

}  // namespace

RuleSequence SuccessfulReductionSearch(const LegalString& u) {
  RuleSequence path;
  std::set<LegalString> dead;
  if (!ReduceDfs(u, path, dead)) {
    throw PreconditionError("no successful reduction found for '" +
                            FormatLegalString(u) + "'");
  }
  return path;
}

RuleSequence ApplicableDualRules(const LegalString& u) {
  const SymbolSet dom = Domain(u);
  RuleSequence out;
  for (Symbol p : dom) {
    if (IsNegative(u, p)) out.push_back(MakeRule(RuleKind::kDspr, p));
  }
  for (auto p = dom.begin(); p != dom.end(); ++p) {
    for (auto q = std::next(p); q != dom.end(); ++q) {
      const Rule r = MakeRule(RuleKind::kDsdr, *p, *q);
      if (IsApplicable(r, u)) out.push_back(r);
    }
  }
  return out;
}

std::set<LegalString> Orbit(const LegalString& u, std::size_t max_size) {
  std::set<LegalString> seen;
  std::deque<LegalString> frontier;
  auto visit = [&](LegalString v) {
    v = CanonicalEquivRep(v);
    if (!seen.insert(v).second) return;
    if (seen.size() > max_size) {
      throw BudgetExceededError("orbit exceeds " + std::to_string(max_size) +
                                " strings");
    }
    frontier.push_back(std::move(v));
  };
  visit(u);
  while (!frontier.empty()) {
    LegalString cur = std::move(frontier.front());
    frontier.pop_front();
    for (const Rule& r : ApplicableDualRules(cur)) visit(Apply(r, cur));
  }
  return seen;
}

bool DualEquivalent(const LegalString& u, const LegalString& v) {
  return AreIsomorphic(BuildReductionGraph(u), BuildReductionGraph(v));
}

std::string FormatRule(const Rule& rule) {
  const char* name = "";
  switch (rule.kind) {
    case RuleKind::kSnr: name = "snr"; break;
    case RuleKind::kSpr: name = "spr"; break;
    case RuleKind::kSdr: name = "sdr"; break;
    case RuleKind::kDspr: name = "dspr"; break;
    case RuleKind::kDsdr: name = "dsdr"; break;
  }
  std::string out = std::string(name) + "(" + std::to_string(rule.p);
  if (rule.is_double()) out += "," + std::to_string(rule.q);
  return out + ")";
}

std::string FormatRuleSequence(const RuleSequence& seq) {
  std::string out;
  for (const Rule& r : seq) {
    if (!out.empty()) out += ' ';
    out += FormatRule(r);
  }
  return out;
}

RuleSequence ParseRuleSequence(std::string_view text) {
  static const std::regex kToken(
      R"(\s*(dspr|dsdr|snr|spr|sdr)\(\s*(\d+)\s*(?:,\s*(\d+)\s*)?\)\s*)");
  RuleSequence out;
  std::string rest(text);
  std::smatch m;
  while (!rest.empty() &&
         rest.find_first_not_of(" \t\r\n") != std::string::npos) {
    if (!std::regex_search(rest, m, kToken,
                           std::regex_constants::match_continuous)) {
      throw ParseError("bad rule token near '" + rest + "'");
    }
    const std::string name = m[1];
    const Symbol p = std::stoi(m[2]);
    const bool has_q = m[3].matched;
    RuleKind kind;
    if (name == "snr") kind = RuleKind::kSnr;
    else if (name == "spr") kind = RuleKind::kSpr;
    else if (name == "sdr") kind = RuleKind::kSdr;
    else if (name == "dspr") kind = RuleKind::kDspr;
    else kind = RuleKind::kDsdr;
    const bool is_double = kind == RuleKind::kSdr || kind == RuleKind::kDsdr;
    if (is_double != has_q) {
      throw ParseError("wrong number of arguments in '" + m.str() + "'");
    }
    const Symbol q = has_q ? std::stoi(m[3]) : 0;
    if (p < 2 || (has_q && q < 2) || (has_q && p == q)) {
      throw ParseError("bad rule arguments in '" + m.str() + "'");
    }
    out.push_back(MakeRule(kind, p, q));
    rest = m.suffix();
  }
  return out;
}

}  // namespace redukt
