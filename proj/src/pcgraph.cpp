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

#include "redukt/pcgraph.hpp"

#include <algorithm>
#include <sstream>

#include "redukt/disjoint_sets.hpp"
#include "redukt/error.hpp"

namespace redukt {

PointerComponentGraph::PointerComponentGraph(std::vector<std::string> nodes,
                                             std::map<Symbol, EdgeEnds> edges)
    : nodes_(std::move(nodes)) {
  std::sort(nodes_.begin(), nodes_.end());
  if (std::adjacent_find(nodes_.begin(), nodes_.end()) != nodes_.end()) {
    throw ValidationError("duplicate multigraph node id");
  }
  for (auto& [p, ends] : edges) {
    if (p < 2) {
      throw ValidationError("edge symbol " + std::to_string(p) +
                            " is smaller than 2");
    }
    if (!HasNode(ends.first) || !HasNode(ends.second)) {
      throw ValidationError("edge " + std::to_string(p) +
                            " references an unknown node");
    }
    if (ends.second < ends.first) std::swap(ends.first, ends.second);
  }
  edges_ = std::move(edges);
}

bool PointerComponentGraph::HasNode(std::string_view id) const {
  return std::binary_search(nodes_.begin(), nodes_.end(), id);
}

std::set<std::string> PointerComponentGraph::Endpoints(Symbol p) const {
  auto it = edges_.find(p);
  if (it == edges_.end()) {
    throw PreconditionError("no edge labelled " + std::to_string(p));
  }
  return {it->second.first, it->second.second};
}

SymbolSet PointerComponentGraph::EdgeLabels() const {
  SymbolSet out;
  for (const auto& [p, ends] : edges_) out.insert(p);
  return out;
}

SymbolSet PointerComponentGraph::Bridges() const {
  SymbolSet out;
  for (const auto& [p, ends] : edges_) {
    if (!ends.is_loop()) out.insert(p);
  }
  return out;
}

SymbolSet PointerComponentGraph::Loops() const {
  SymbolSet out;
  for (const auto& [p, ends] : edges_) {
    if (ends.is_loop()) out.insert(p);
  }
  return out;
}

PointerComponentMap PointerComponentMapOf(const AbstractReductionGraph& g) {
  const ColouredBase& base = g.base();
  const Components comps = ConnectedComponents(g);

  std::vector<std::string> names(comps.count);
  const std::size_t linear = comps.of[base.s()];
  std::size_t next = 1;
  for (std::size_t c = 0; c < comps.count; ++c) {
    names[c] = c == linear ? "R" : "C" + std::to_string(next++);
  }

  std::map<Symbol, std::set<std::string>> touched;
  for (VertexIndex v = 0; v < base.size(); ++v) {
    if (const auto& l = base.label(v)) touched[*l].insert(names[comps.of[v]]);
  }
  std::map<Symbol, EdgeEnds> edges;
  for (const auto& [p, comps_of_p] : touched) {
    edges[p] = {*comps_of_p.begin(), *comps_of_p.rbegin()};
  }

  PointerComponentMap out;
  out.graph = PointerComponentGraph(names, std::move(edges));
  out.component_of.reserve(base.size());
  for (VertexIndex v = 0; v < base.size(); ++v) {
    out.component_of.push_back(names[comps.of[v]]);
  }
  return out;
}

PointerComponentGraph PointerComponentGraphOf(const AbstractReductionGraph& g) {
  return PointerComponentMapOf(g).graph;
}

SymbolSet BridgeSet(const AbstractReductionGraph& g) {
  return PointerComponentGraphOf(g).Bridges();
}

namespace {

// Original node names absorbed by a (possibly fused) node.
std::vector<std::string> Members(const std::string& node) {
  if (!node.starts_with("m:")) return {node};
  std::vector<std::string> out;
  std::string rest = node.substr(2);
  std::size_t pos = 0;
  while (true) {
    std::size_t plus = rest.find('+', pos);
    out.push_back(rest.substr(pos, plus - pos));
    if (plus == std::string::npos) break;
    pos = plus + 1;
  }
  return out;
}

}  // namespace

PointerComponentGraph MergeRule(const PointerComponentGraph& m, Symbol p) {
  auto it = m.edges().find(p);
  if (it == m.edges().end() || it->second.is_loop()) {
    throw PreconditionError("merge rule for " + std::to_string(p) +
                            " requires a bridge");
  }
  const std::string& a = it->second.first;
  const std::string& b = it->second.second;

  std::vector<std::string> members = Members(a);
  auto more = Members(b);
  members.insert(members.end(), more.begin(), more.end());
  std::sort(members.begin(), members.end());
  std::string fused = "m:";
  for (std::size_t i = 0; i < members.size(); ++i) {
    fused += (i ? "+" : "") + members[i];
  }

  auto rename = [&](const std::string& v) {
    return v == a || v == b ? fused : v;
  };
  std::vector<std::string> nodes;
  for (const auto& v : m.nodes()) {
    if (v != a && v != b) nodes.push_back(v);
  }
  nodes.push_back(fused);
  std::map<Symbol, EdgeEnds> edges;
  for (const auto& [q, ends] : m.edges()) {
    edges[q] = {rename(ends.first), rename(ends.second)};
  }
  return PointerComponentGraph(std::move(nodes), std::move(edges));
}

namespace {

std::size_t NodeIndex(const PointerComponentGraph& m, const std::string& id) {
  auto it = std::lower_bound(m.nodes().begin(), m.nodes().end(), id);
  return static_cast<std::size_t>(it - m.nodes().begin());
}

}  // namespace

bool IsConnected(const PointerComponentGraph& m) {
  if (m.node_count() == 0) return false;
  DisjointSets dsu(m.node_count());
  for (const auto& [p, ends] : m.edges()) {
    dsu.Unite(NodeIndex(m, ends.first), NodeIndex(m, ends.second));
  }
  return dsu.set_count() == 1;
}

bool IsWellColoured(const AbstractReductionGraph& g) {
  const ColouredBase& base = g.base();
  DisjointSets dsu(base.size());
  for (const Edge& e : g.reality()) dsu.Unite(e.a, e.b);
  std::map<Symbol, VertexIndex> first_with_label;
  for (VertexIndex v = 0; v < base.size(); ++v) {
    if (const auto& l = base.label(v)) {
      auto [it, inserted] = first_with_label.emplace(*l, v);
      if (!inserted) dsu.Unite(it->second, v);
    }
  }
  return dsu.set_count() == 1;
}

SymbolSet SpanningTreePointers(const PointerComponentGraph& m) {
  if (!IsConnected(m)) {
    throw PreconditionError("spanning tree requires a connected multigraph");
  }
  DisjointSets dsu(m.node_count());
  SymbolSet tree;
  for (const auto& [p, ends] : m.edges()) {
    if (dsu.Unite(NodeIndex(m, ends.first), NodeIndex(m, ends.second))) {
      tree.insert(p);
    }
  }
  return tree;
}

std::string ToDot(const PointerComponentGraph& m) {
  std::ostringstream out;
  out << "graph pc {\n";
  for (const auto& v : m.nodes()) out << "  \"" << v << "\";\n";
  for (const auto& [p, ends] : m.edges()) {
    out << "  \"" << ends.first << "\" -- \"" << ends.second
        << "\" [label=\"" << p << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace redukt
