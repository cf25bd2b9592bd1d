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

#include "redukt/strings.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include "redukt/error.hpp"

namespace redukt {

LegalString LegalString::FromLetters(std::vector<Pointer> letters) {
  std::map<Symbol, int> counts;
  for (const Pointer& p : letters) {
    if (p.symbol < 2) {
      throw PreconditionError("pointer symbol " + std::to_string(p.symbol) +
                              " is smaller than 2");
    }
    ++counts[p.symbol];
  }
  for (const auto& [symbol, count] : counts) {
    if (count != 2) {
      throw LegalityError("symbol " + std::to_string(symbol) +
                          " must occur exactly twice, found " +
                          std::to_string(count));
    }
  }
  return LegalString(std::move(letters));
}

LegalString ParseLegalString(std::string_view text) {
  std::vector<Pointer> letters;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() &&
           (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' ||
            text[pos] == '\r')) {
      ++pos;
    }
    if (pos == text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && text[end] != ' ' && text[end] != '\t' &&
           text[end] != '\n' && text[end] != '\r') {
      ++end;
    }
    std::string_view token = text.substr(pos, end - pos);
    pos = end;

    Pointer p;
    std::string_view digits = token;
    if (!digits.empty() && digits.front() == '-') {
      p.barred = true;
      digits.remove_prefix(1);
    }
    int value = 0;
    auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (digits.empty() || ec != std::errc() ||
        ptr != digits.data() + digits.size()) {
      throw ParseError("bad pointer token '" + std::string(token) + "'");
    }
    if (value < 2) {
      throw ParseError("pointer token '" + std::string(token) +
                       "' has symbol smaller than 2");
    }
    p.symbol = value;
    letters.push_back(p);
  }
  return LegalString::FromLetters(std::move(letters));
}

std::string FormatPointer(const Pointer& p) {
  return (p.barred ? "-" : "") + std::to_string(p.symbol);
}

std::string FormatLegalString(const LegalString& u) {
  std::string out;
  for (const Pointer& p : u) {
    if (!out.empty()) out += ' ';
    out += FormatPointer(p);
  }
  return out;
}

SymbolSet Domain(const LegalString& u) {
  SymbolSet dom;
  for (const Pointer& p : u) dom.insert(p.symbol);
  return dom;
}

std::pair<std::size_t, std::size_t> Occurrences(const LegalString& u,
                                                Symbol p) {
  std::size_t found = 0;
  std::pair<std::size_t, std::size_t> result;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i].symbol != p) continue;
    (found == 0 ? result.first : result.second) = i;
    ++found;
  }
  if (found != 2) {
    throw PreconditionError("symbol " + std::to_string(p) +
                            " is not in the domain");
  }
  return result;
}

bool IsPositive(const LegalString& u, Symbol p) {
  auto [i, j] = Occurrences(u, p);
  return u[i].barred != u[j].barred;
}

PInterval PIntervalOf(const LegalString& u, Symbol p) {
  auto [i, j] = Occurrences(u, p);
  return {i + 1, j + 1};
}

bool Overlap(const LegalString& u, Symbol p, Symbol q) {
  if (p == q) {
    throw PreconditionError("overlap requires two distinct symbols");
  }
  auto [pi, pj] = Occurrences(u, p);
  auto [qi, qj] = Occurrences(u, q);
  // Exactly one occurrence of q strictly inside the p-interval.
  const bool first_inside = pi < qi && qi < pj;
  const bool second_inside = pi < qj && qj < pj;
  return first_inside != second_inside;
}

std::vector<Pointer> InvertRange(std::span<const Pointer> letters) {
  std::vector<Pointer> out;
  out.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    out.push_back(it->Bar());
  }
  return out;
}

LegalString Inverse(const LegalString& u) {
  return LegalString::FromLetters(InvertRange(u.letters()));
}

bool Equivalent(const LegalString& u, const LegalString& v) {
  if (u.size() != v.size()) return false;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i].symbol != v[i].symbol) return false;
  }
  for (Symbol p : Domain(u)) {
    if (IsPositive(u, p) != IsPositive(v, p)) return false;
  }
  return true;
}

LegalString CanonicalEquivRep(const LegalString& u) {
  std::map<Symbol, bool> first_barred;
  std::vector<Pointer> letters;
  letters.reserve(u.size());
  for (const Pointer& p : u) {
    auto [it, inserted] = first_barred.emplace(p.symbol, p.barred);
    letters.push_back({p.symbol, inserted ? false : p.barred != it->second});
  }
  return LegalString::FromLetters(std::move(letters));
}

}  // namespace redukt
