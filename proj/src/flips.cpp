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

#include "redukt/flips.hpp"

#include <algorithm>
#include <array>

#include "redukt/error.hpp"

namespace redukt {

namespace {

using Matching = std::array<Edge, 2>;

// The three perfect matchings of four vertices.
std::array<Matching, 3> MatchingsOf(const std::vector<VertexIndex>& v) {
  return {{{MakeEdge(v[0], v[1]), MakeEdge(v[2], v[3])},
           {MakeEdge(v[0], v[2]), MakeEdge(v[1], v[3])},
           {MakeEdge(v[0], v[3]), MakeEdge(v[1], v[2])}}};
}

bool Contains(const EdgeSet& set, const Matching& m) {
  return set.contains(m[0]) && set.contains(m[1]);
}

std::vector<VertexIndex> FourVertices(const AbstractReductionGraph& g,
                                      Symbol p) {
  auto v = g.base().LabelledBy(p);
  if (v.size() != 4) {
    throw PreconditionError("symbol " + std::to_string(p) +
                            " is not in the domain of the graph");
  }
  return v;
}

}  // namespace

bool IsMergeLegal(const AbstractReductionGraph& g, const EdgeSet& edges) {
  if (!IsDesirable(g.base(), edges)) return false;
  return std::none_of(edges.begin(), edges.end(), [&](const Edge& e) {
    return g.desire().contains(e);
  });
}

MergeLegalSet::MergeLegalSet(const AbstractReductionGraph& g, EdgeSet edges)
    : edges_(std::move(edges)) {
  if (!IsMergeLegal(g, edges_)) {
    throw ValidationError("edge set is not merge-legal for the graph");
  }
}

MergeLegalSet SomeMergeLegal(const AbstractReductionGraph& g) {
  EdgeSet edges;
  for (Symbol p : g.Domain()) {
    const auto matchings = MatchingsOf(FourVertices(g, p));
    const Matching* best = nullptr;
    Edge best_pair{};
    for (const Matching& m : matchings) {
      if (Contains(g.desire(), m)) continue;
      const Edge smallest = std::min(m[0], m[1]);
      if (!best || smallest < best_pair) {
        best = &m;
        best_pair = smallest;
      }
    }
    edges.insert((*best)[0]);
    edges.insert((*best)[1]);
  }
  return MergeLegalSet(MergeLegalSet::Unchecked{}, std::move(edges));
}

bool IsTheta(const AbstractReductionGraph& g, const MergeLegalSet& e) {
  return ConnectedComponents(g.vertex_count(), {&g.reality(), &e.edges()})
             .count == 1;
}

MergeLegalSet Flip(const AbstractReductionGraph& g, const MergeLegalSet& e,
                   Symbol p) {
  const auto matchings = MatchingsOf(FourVertices(g, p));
  EdgeSet edges;
  for (const Edge& x : e.edges()) {
    if (g.base().label(x.a) != p) edges.insert(x);
  }
  for (const Matching& m : matchings) {
    if (Contains(g.desire(), m) || Contains(e.edges(), m)) continue;
    edges.insert(m[0]);
    edges.insert(m[1]);
  }
  return MergeLegalSet(MergeLegalSet::Unchecked{}, std::move(edges));
}

MergeLegalSet FlipSet(const AbstractReductionGraph& g, const MergeLegalSet& e,
                      const SymbolSet& d) {
  MergeLegalSet out = e;
  for (Symbol p : d) out = Flip(g, out, p);
  return out;
}

std::optional<MergeLegalSet> FindTheta(const AbstractReductionGraph& g) {
  if (!IsConnected(PointerComponentGraphOf(g))) return std::nullopt;
  MergeLegalSet e = SomeMergeLegal(g);
  const AbstractReductionGraph h = g.WithDesire(e.edges());
  const SymbolSet tree = SpanningTreePointers(PointerComponentGraphOf(h));
  return FlipSet(g, e, tree);
}

RangeCheck CheckRange(const RawGraph& raw) {
  RangeCheck check;
  ArgValidation v = ValidateArg(raw);
  if (!v.ok()) {
    check.reasons = std::move(v.violations);
    return check;
  }
  if (!IsConnected(PointerComponentGraphOf(*v.graph))) {
    check.reasons.push_back("pointer-component graph disconnected");
    return check;
  }
  check.in_range = true;
  return check;
}

bool IsReductionGraph(const RawGraph& raw) { return CheckRange(raw).in_range; }

LegalString RecoverLegalString(const AbstractReductionGraph& g) {
  auto theta = FindTheta(g);
  if (!theta) {
    throw NotInRangeError(
        "not isomorphic to a reduction graph: pointer-component graph "
        "disconnected");
  }
  return LegalizationRepresentative(ExtendedArg::Create(g, theta->edges()));
}

LegalString RecoverLegalString(const RawGraph& raw) {
  ArgValidation v = ValidateArg(raw);
  if (!v.ok()) {
    std::string msg = "not an abstract reduction graph:";
    for (const auto& s : v.violations) msg += "\n  " + s;
    throw ValidationError(msg);
  }
  return RecoverLegalString(*v.graph);
}

LegalString RealizePc(const PointerComponentGraph& m,
                      std::string_view linear_node) {
  if (!m.HasNode(linear_node)) {
    throw PreconditionError("linear node '" + std::string(linear_node) +
                            "' is not a node of the multigraph");
  }
  if (!IsConnected(m)) {
    throw PreconditionError("multigraph is not connected");
  }

  // One desire edge per incident edge end, two for a loop.
  std::map<std::string, std::vector<Symbol>> slots;
  for (const auto& [p, ends] : m.edges()) {
    slots[ends.first].push_back(p);
    slots[ends.second].push_back(p);
  }

  std::vector<Vertex> vertices{{"s", std::nullopt}, {"t", std::nullopt}};
  EdgeSet reality, desire;
  for (const std::string& node : m.nodes()) {
    std::vector<Symbol>& ps = slots[node];
    std::sort(ps.begin(), ps.end());
    // Desire edge k joins x_k = first + 2k and y_k = first + 2k + 1.
    const VertexIndex first = vertices.size();
    for (std::size_t k = 0; k < ps.size(); ++k) {
      vertices.push_back({"v" + std::to_string(first + 2 * k), ps[k]});
      vertices.push_back({"v" + std::to_string(first + 2 * k + 1), ps[k]});
      desire.insert(MakeEdge(first + 2 * k, first + 2 * k + 1));
    }
    for (std::size_t k = 0; k + 1 < ps.size(); ++k) {
      reality.insert(MakeEdge(first + 2 * k + 1, first + 2 * k + 2));
    }
    const VertexIndex last = first + 2 * ps.size() - 1;
    if (node == linear_node) {
      if (ps.empty()) {
        reality.insert(MakeEdge(0, 1));
      } else {
        reality.insert(MakeEdge(0, first));
        reality.insert(MakeEdge(last, 1));
      }
    } else {
      // A single desire edge closes into a 2-cycle with a parallel reality
      // edge.
      reality.insert(MakeEdge(last, first));
    }
  }

  auto base = std::make_shared<const ColouredBase>(std::move(vertices), 0, 1);
  return RecoverLegalString(AbstractReductionGraph::Create(
      std::move(base), std::move(reality), std::move(desire)));
}

}  // namespace redukt
