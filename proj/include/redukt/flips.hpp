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

#ifndef REDUKT_FLIPS_HPP_
#define REDUKT_FLIPS_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "redukt/pcgraph.hpp"
#include "redukt/redgraph.hpp"
#include "redukt/strings.hpp"

namespace redukt {

// Desirable edge set disjoint from the desire edges of its host graph. The
// host is not stored; every operation takes it explicitly.
class MergeLegalSet {
 public:
  // Throws ValidationError if `edges` is not merge-legal for g.
  MergeLegalSet(const AbstractReductionGraph& g, EdgeSet edges);

  const EdgeSet& edges() const { return edges_; }

  friend auto operator<=>(const MergeLegalSet&, const MergeLegalSet&) = default;

 private:
  struct Unchecked {};
  MergeLegalSet(Unchecked, EdgeSet edges) : edges_(std::move(edges)) {}

  EdgeSet edges_;

  friend MergeLegalSet SomeMergeLegal(const AbstractReductionGraph& g);
  friend MergeLegalSet Flip(const AbstractReductionGraph& g,
                            const MergeLegalSet& e, Symbol p);
};

bool IsMergeLegal(const AbstractReductionGraph& g, const EdgeSet& edges);

// For every symbol, of the two non-desire matchings on its four vertices, the
// one containing the smallest non-desire pair.
MergeLegalSet SomeMergeLegal(const AbstractReductionGraph& g);

// True iff reality edges plus e connect every vertex.
bool IsTheta(const AbstractReductionGraph& g, const MergeLegalSet& e);

// Swaps the p-edges of e for the third perfect matching of the four
// p-labelled vertices. Throws PreconditionError if p is not in the domain.
MergeLegalSet Flip(const AbstractReductionGraph& g, const MergeLegalSet& e,
                   Symbol p);

// Flip for every symbol of d; order does not matter.
MergeLegalSet FlipSet(const AbstractReductionGraph& g, const MergeLegalSet& e,
                      const SymbolSet& d);

// A merge-legal set connecting the graph, or nullopt if none exists (exactly
// when the pointer-component graph is disconnected).
std::optional<MergeLegalSet> FindTheta(const AbstractReductionGraph& g);

struct RangeCheck {
  bool in_range = false;
  std::vector<std::string> reasons;
};

// A graph is isomorphic to a reduction graph iff it is an abstract reduction
// graph whose pointer-component graph is connected.
RangeCheck CheckRange(const RawGraph& raw);
bool IsReductionGraph(const RawGraph& raw);

// ≈-canonical u with R(u) isomorphic to the input. Throws NotInRangeError
// otherwise (ValidationError for malformed graphs through the raw overload).
LegalString RecoverLegalString(const AbstractReductionGraph& g);
LegalString RecoverLegalString(const RawGraph& raw);

// Legal string w whose pointer-component graph is isomorphic to m, with
// `linear_node` corresponding to the component holding s and t. Throws
// PreconditionError if m is disconnected or linear_node is unknown.
LegalString RealizePc(const PointerComponentGraph& m,
                      std::string_view linear_node);

}  // namespace redukt

#endif  // REDUKT_FLIPS_HPP_
