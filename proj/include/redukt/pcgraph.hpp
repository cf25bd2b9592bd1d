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

#ifndef REDUKT_PCGRAPH_HPP_
#define REDUKT_PCGRAPH_HPP_

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "redukt/redgraph.hpp"
#include "redukt/strings.hpp"

namespace redukt {

// Ends of a multigraph edge, stored with first <= second. A loop has
// first == second.
struct EdgeEnds {
  std::string first;
  std::string second;

  bool is_loop() const { return first == second; }
  friend auto operator<=>(const EdgeEnds&, const EdgeEnds&) = default;
};

// Multigraph whose edges are identified by distinct pointer symbols. Used
// both for pointer-component graphs and for the connected multigraphs handed
// to RealizePc.
class PointerComponentGraph {
 public:
  PointerComponentGraph() = default;

  // Throws ValidationError on duplicate node ids, unknown edge ends or a
  // symbol smaller than 2.
  PointerComponentGraph(std::vector<std::string> nodes,
                        std::map<Symbol, EdgeEnds> edges);

  const std::vector<std::string>& nodes() const { return nodes_; }
  const std::map<Symbol, EdgeEnds>& edges() const { return edges_; }
  std::size_t node_count() const { return nodes_.size(); }
  bool HasNode(std::string_view id) const;

  // 1-element set for a loop, 2-element set for a bridge.
  std::set<std::string> Endpoints(Symbol p) const;
  SymbolSet EdgeLabels() const;
  SymbolSet Bridges() const;
  SymbolSet Loops() const;

  friend bool operator==(const PointerComponentGraph&,
                         const PointerComponentGraph&) = default;

 private:
  std::vector<std::string> nodes_;  // sorted
  std::map<Symbol, EdgeEnds> edges_;
};

// Pointer-component graph together with the component of every vertex. The
// component holding s and t is named "R"; the others "C1", "C2", ... in order
// of their smallest vertex index.
struct PointerComponentMap {
  PointerComponentGraph graph;
  std::vector<std::string> component_of;  // per vertex
};

PointerComponentMap PointerComponentMapOf(const AbstractReductionGraph& g);
PointerComponentGraph PointerComponentGraphOf(const AbstractReductionGraph& g);

SymbolSet BridgeSet(const AbstractReductionGraph& g);

// Fuses the two ends of bridge p into one node; p stays as a loop. The fused
// node is named "m:" followed by the '+'-joined sorted list of the original
// (unfused) node names it absorbs, so merges commute exactly. Throws
// PreconditionError if p is not a bridge.
PointerComponentGraph MergeRule(const PointerComponentGraph& m, Symbol p);

// Loops do not matter; the empty multigraph is not connected.
bool IsConnected(const PointerComponentGraph& m);

// No label-disjoint bipartition of the vertices avoids every reality edge.
// Decided by joining reality edges and same-label vertices in a union-find.
bool IsWellColoured(const AbstractReductionGraph& g);

// Edge set of a spanning tree, chosen greedily in increasing symbol order.
// Throws PreconditionError if m is disconnected.
SymbolSet SpanningTreePointers(const PointerComponentGraph& m);

std::string ToDot(const PointerComponentGraph& m);

}  // namespace redukt

#endif  // REDUKT_PCGRAPH_HPP_
