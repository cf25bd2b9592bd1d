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

#ifndef REDUKT_REDGRAPH_HPP_
#define REDUKT_REDGRAPH_HPP_

#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "redukt/strings.hpp"

namespace redukt {

using VertexIndex = std::size_t;

// Undirected edge between two distinct vertices, stored with a < b.
struct Edge {
  VertexIndex a = 0;
  VertexIndex b = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Throws PreconditionError for x == y.
Edge MakeEdge(VertexIndex x, VertexIndex y);

using EdgeSet = std::set<Edge>;

struct Vertex {
  std::string id;
  std::optional<Symbol> label;  // empty exactly for s and t
};

// Vertices with string ids, two distinguished unlabelled terminals s and t,
// and a label on every other vertex.
class ColouredBase {
 public:
  // Throws ValidationError if ids repeat, s == t, a terminal is labelled or
  // some other vertex is not.
  ColouredBase(std::vector<Vertex> vertices, VertexIndex s, VertexIndex t);

  std::size_t size() const { return vertices_.size(); }
  const Vertex& vertex(VertexIndex v) const { return vertices_[v]; }
  const std::string& id(VertexIndex v) const { return vertices_[v].id; }
  const std::optional<Symbol>& label(VertexIndex v) const {
    return vertices_[v].label;
  }
  VertexIndex s() const { return s_; }
  VertexIndex t() const { return t_; }
  bool IsTerminal(VertexIndex v) const { return v == s_ || v == t_; }

  std::optional<VertexIndex> Find(std::string_view id) const;
  SymbolSet Domain() const;
  // Vertices carrying label p, in index order.
  std::vector<VertexIndex> LabelledBy(Symbol p) const;

 private:
  std::vector<Vertex> vertices_;
  VertexIndex s_;
  VertexIndex t_;
  std::map<std::string, VertexIndex, std::less<>> index_;
};

// Every edge joins two equally labelled vertices and every non-terminal vertex
// lies in exactly one edge.
bool IsDesirable(const ColouredBase& base, const EdgeSet& edges);

// Human-readable list of every violated abstract-reduction-graph condition;
// empty iff (reality, desire) is an abstract reduction graph over `base`.
std::vector<std::string> ArgViolations(const ColouredBase& base,
                                       const EdgeSet& reality,
                                       const EdgeSet& desire);

// A 2-edge coloured graph with reality edges forming a perfect matching,
// desire edges forming a desirable set and every label used four times.
class AbstractReductionGraph {
 public:
  // Throws ValidationError carrying all violations.
  static AbstractReductionGraph Create(
      std::shared_ptr<const ColouredBase> base, EdgeSet reality,
      EdgeSet desire);

  const ColouredBase& base() const { return *base_; }
  const std::shared_ptr<const ColouredBase>& shared_base() const {
    return base_;
  }
  const EdgeSet& reality() const { return reality_; }
  const EdgeSet& desire() const { return desire_; }
  std::size_t vertex_count() const { return base_->size(); }
  SymbolSet Domain() const { return base_->Domain(); }

  VertexIndex RealityMate(VertexIndex v) const { return reality_mate_[v]; }
  // Empty for s and t.
  std::optional<VertexIndex> DesireMate(VertexIndex v) const;

  // Same base and reality edges, with `desire` replaced. The new set must be
  // desirable; used to form B(E1, E) for a merge-legal E.
  AbstractReductionGraph WithDesire(EdgeSet desire) const;

 private:
  AbstractReductionGraph(std::shared_ptr<const ColouredBase> base,
                         EdgeSet reality, EdgeSet desire);

  std::shared_ptr<const ColouredBase> base_;
  EdgeSet reality_;
  EdgeSet desire_;
  std::vector<VertexIndex> reality_mate_;
  std::vector<VertexIndex> desire_mate_;  // self for terminals
};

using Arg = AbstractReductionGraph;

// Graph as it appears on the wire: vertex ids with optional labels and edge
// lists of id pairs. The terminals are the vertices with ids "s" and "t".
struct RawGraph {
  struct RawVertex {
    std::string id;
    std::optional<Symbol> label;
  };
  using RawEdge = std::pair<std::string, std::string>;

  std::vector<RawVertex> vertices;
  std::vector<RawEdge> reality;
  std::vector<RawEdge> desire;
  std::optional<std::vector<RawEdge>> merge;
};

struct ArgValidation {
  std::optional<AbstractReductionGraph> graph;
  std::vector<std::string> violations;

  bool ok() const { return graph.has_value(); }
};

// Checks every condition and returns either the typed graph or the full list
// of violations. The merge field, if present, is ignored.
ArgValidation ValidateArg(const RawGraph& raw);

RawGraph ToRaw(const AbstractReductionGraph& g);

// Reduction graph of u. Vertex ids are "s", "I1", "I1'", ..., "t" in that
// index order.
AbstractReductionGraph BuildReductionGraph(const LegalString& u);

// The two desire edges on the vertices labelled p, sorted.
std::array<Edge, 2> DesirePartition(const AbstractReductionGraph& g,
                                    Symbol p);

struct Components {
  std::vector<std::size_t> of;  // component number per vertex
  std::size_t count = 0;
};

// Connected components of (vertices, union of `sets`). Components are
// numbered in order of their smallest vertex.
Components ConnectedComponents(std::size_t vertex_count,
                               std::initializer_list<const EdgeSet*> sets);

// Components of reality + desire.
Components ConnectedComponents(const AbstractReductionGraph& g);

// Complete isomorphism invariant of an abstract reduction graph. The path
// word lists the labels met on the s-t component from s to t; each cycle is
// the lexicographically least label word over all start vertices, always
// leaving the start vertex along its reality edge.
struct CanonicalForm {
  std::vector<Symbol> path_word;
  std::vector<std::vector<Symbol>> cycle_words;  // sorted

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

CanonicalForm CanonicalFormOf(const AbstractReductionGraph& g);
bool AreIsomorphic(const AbstractReductionGraph& g,
                   const AbstractReductionGraph& h);
std::string FormatCanonicalForm(const CanonicalForm& form);

// Abstract reduction graph together with merge edges E such that reality and
// merge edges trace one alternating path s, v1, v1', ..., vn, vn', t through
// every vertex.
class ExtendedArg {
 public:
  // Throws ValidationError if `merge` is not merge-legal for `arg` or does
  // not connect the graph together with the reality edges.
  static ExtendedArg Create(AbstractReductionGraph arg, EdgeSet merge);

  const AbstractReductionGraph& arg() const { return arg_; }
  const EdgeSet& merge() const { return merge_; }
  // s, v1, v1', ..., vn, vn', t.
  const std::vector<VertexIndex>& path() const { return path_; }
  // Position of a vertex on path().
  std::size_t position(VertexIndex v) const { return position_[v]; }

 private:
  ExtendedArg(AbstractReductionGraph arg, EdgeSet merge,
              std::vector<VertexIndex> path);

  AbstractReductionGraph arg_;
  EdgeSet merge_;
  std::vector<VertexIndex> path_;
  std::vector<std::size_t> position_;
};

ExtendedArg BuildExtendedReductionGraph(const LegalString& u);

// Requires raw.merge; throws ValidationError otherwise or on any violation.
ExtendedArg ValidateExtendedArg(const RawGraph& raw);
RawGraph ToRaw(const ExtendedArg& e);

const std::vector<VertexIndex>& StPath(const ExtendedArg& e);

enum class Sign { kNegative, kPositive };

// p is negative iff its desire edges join an unprimed path vertex to a primed
// one, i.e. {v_i, v'_j} and {v'_i, v_j}.
Sign PointerSign(const ExtendedArg& e, Symbol p);

// Canonical member of the legalization: the path labels, with the second
// occurrence of p barred iff p is positive in e.
LegalString LegalizationRepresentative(const ExtendedArg& e);

// Complete invariant of extended graphs: since the reality/merge path is
// unique, an isomorphism must preserve path positions.
struct ExtendedCanonicalForm {
  std::vector<Symbol> path_labels;
  std::vector<std::pair<std::size_t, std::size_t>> desire_positions;

  friend auto operator<=>(const ExtendedCanonicalForm&,
                          const ExtendedCanonicalForm&) = default;
};

ExtendedCanonicalForm CanonicalFormOf(const ExtendedArg& e);
bool AreIsomorphic(const ExtendedArg& e, const ExtendedArg& f);

}  // namespace redukt

#endif  // REDUKT_REDGRAPH_HPP_
