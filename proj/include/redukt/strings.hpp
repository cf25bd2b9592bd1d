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

#ifndef REDUKT_STRINGS_HPP_
#define REDUKT_STRINGS_HPP_

#include <compare>
#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace redukt {

// Unbarred pointer symbol; always >= 2.
using Symbol = int;
using SymbolSet = std::set<Symbol>;

// A pointer: a symbol together with a bar flag. Barring is an involution.
struct Pointer {
  Symbol symbol = 2;
  bool barred = false;

  Pointer Bar() const { return {symbol, !barred}; }

  friend auto operator<=>(const Pointer&, const Pointer&) = default;
};

// A sequence of pointers in which every occurring symbol has exactly two
// occurrences, counting barred and unbarred forms together. Instances are
// immutable; the only way to obtain one is through a validating factory.
class LegalString {
 public:
  // The empty string.
  LegalString() = default;

  // Throws LegalityError if some symbol does not occur exactly twice, and
  // PreconditionError if a symbol is smaller than 2.
  static LegalString FromLetters(std::vector<Pointer> letters);

  std::span<const Pointer> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Pointer& operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  friend auto operator<=>(const LegalString&, const LegalString&) = default;

 private:
  explicit LegalString(std::vector<Pointer> letters)
      : letters_(std::move(letters)) {}

  std::vector<Pointer> letters_;
};

// Inclusive 1-based positions of the two occurrences of a symbol.
struct PInterval {
  std::size_t first = 0;
  std::size_t last = 0;

  friend bool operator==(const PInterval&, const PInterval&) = default;
};

// Parses whitespace-separated tokens; a leading '-' bars the pointer.
// Throws ParseError on a bad token and LegalityError on an illegal sequence.
LegalString ParseLegalString(std::string_view text);

// Inverse of ParseLegalString: "2 -7 4 ...".
std::string FormatLegalString(const LegalString& u);
std::string FormatPointer(const Pointer& p);

SymbolSet Domain(const LegalString& u);

// 0-based indices of the two occurrences of `p`. Throws PreconditionError if
// p is not in the domain of u.
std::pair<std::size_t, std::size_t> Occurrences(const LegalString& u,
                                                Symbol p);

// True iff exactly one of the two occurrences of p is barred.
bool IsPositive(const LegalString& u, Symbol p);
inline bool IsNegative(const LegalString& u, Symbol p) {
  return !IsPositive(u, p);
}

PInterval PIntervalOf(const LegalString& u, Symbol p);

// True iff the occurrence pairs of p and q interleave. Requires p != q, both
// in the domain.
bool Overlap(const LegalString& u, Symbol p, Symbol q);

// Reversed sequence with every letter barred.
LegalString Inverse(const LegalString& u);

// u and v are equivalent iff their unbarred projections coincide and they
// have the same positive symbols.
bool Equivalent(const LegalString& u, const LegalString& v);

// The member of the equivalence class of u in which the first occurrence of
// every symbol is unbarred.
LegalString CanonicalEquivRep(const LegalString& u);

// Reversed copy of `letters` with every letter barred.
std::vector<Pointer> InvertRange(std::span<const Pointer> letters);

}  // namespace redukt

#endif  // REDUKT_STRINGS_HPP_
