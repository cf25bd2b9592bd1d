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

#include "redukt/redgraph.hpp"

#include <algorithm>
#include <sstream>

#include "redukt/disjoint_sets.hpp"
#include "redukt/error.hpp"

namespace redukt {

Edge MakeEdge(VertexIndex x, VertexIndex y) {
  if (x == y) throw PreconditionError("edge endpoints must be distinct");
  return x < y ? Edge{x, y} : Edge{y, x};
}

ColouredBase::ColouredBase(std::vector<Vertex> vertices, VertexIndex s,
                           VertexIndex t)
    : vertices_(std::move(vertices)), s_(s), t_(t) {
  if (s_ >= vertices_.size() || t_ >= vertices_.size()) {
    throw ValidationError("terminal index out of range");
  }
  if (s_ == t_) throw ValidationError("s and t must be distinct vertices");
  for (VertexIndex v = 0; v < vertices_.size(); ++v) {
    const Vertex& vx = vertices_[v];
    if (!index_.emplace(vx.id, v).second) {
      throw ValidationError("duplicate vertex id '" + vx.id + "'");
    }
    if (IsTerminal(v) && vx.label) {
      throw ValidationError("terminal '" + vx.id + "' must not be labelled");
    }
    if (!IsTerminal(v) && !vx.label) {
      throw ValidationError("vertex '" + vx.id + "' has no label");
    }
  }
}

std::optional<VertexIndex> ColouredBase::Find(std::string_view id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SymbolSet ColouredBase::Domain() const {
  SymbolSet dom;
  for (const Vertex& v : vertices_) {
    if (v.label) dom.insert(*v.label);
  }
  return dom;
}

std::vector<VertexIndex> ColouredBase::LabelledBy(Symbol p) const {
  std::vector<VertexIndex> out;
  for (VertexIndex v = 0; v < vertices_.size(); ++v) {
    if (vertices_[v].label == p) out.push_back(v);
  }
  return out;
}

bool IsDesirable(const ColouredBase& base, const EdgeSet& edges) {
  std::vector<int> cover(base.size(), 0);
  for (const Edge& e : edges) {
    if (e.a >= base.size() || e.b >= base.size() || e.a == e.b) return false;
    const auto& la = base.label(e.a);
    const auto& lb = base.label(e.b);
    if (!la || !lb || *la != *lb) return false;
    ++cover[e.a];
    ++cover[e.b];
  }
  for (VertexIndex v = 0; v < base.size(); ++v) {
    if (!base.IsTerminal(v) && cover[v] != 1) return false;
  }
  return true;
}

std::vector<std::string> ArgViolations(const ColouredBase& base,
                                       const EdgeSet& reality,
                                       const EdgeSet& desire) {
  std::vector<std::string> out;
  const std::size_t n = base.size();

  std::map<Symbol, int> label_count;
  for (VertexIndex v = 0; v < n; ++v) {
    if (const auto& l = base.label(v)) {
      if (*l < 2) {
        out.push_back("label " + std::to_string(*l) + " on vertex '" +
                      base.id(v) + "' is not a pointer symbol (>= 2)");
      }
      ++label_count[*l];
    }
  }
  for (const auto& [p, count] : label_count) {
    if (count != 4) {
      out.push_back("label multiplicity: symbol " + std::to_string(p) +
                    " labels " + std::to_string(count) +
                    " vertices, expected 4");
    }
  }

  auto check_endpoints = [&](const EdgeSet& set, const char* name) {
    for (const Edge& e : set) {
      if (e.a >= n || e.b >= n || e.a == e.b) {
        out.push_back(std::string(name) + " edge with invalid endpoints");
      }
    }
  };
  check_endpoints(reality, "reality");
  check_endpoints(desire, "desire");

  std::vector<int> reality_cover(n, 0);
  for (const Edge& e : reality) {
    if (e.a < n && e.b < n) {
      ++reality_cover[e.a];
      ++reality_cover[e.b];
    }
  }
  for (VertexIndex v = 0; v < n; ++v) {
    if (reality_cover[v] != 1) {
      out.push_back("reality matching: vertex '" + base.id(v) + "' lies in " +
                    std::to_string(reality_cover[v]) +
                    " reality edges, expected 1");
    }
  }

  std::vector<int> desire_cover(n, 0);
  for (const Edge& e : desire) {
    if (e.a >= n || e.b >= n) continue;
    ++desire_cover[e.a];
    ++desire_cover[e.b];
    const auto& la = base.label(e.a);
    const auto& lb = base.label(e.b);
    if (!la || !lb || *la != *lb) {
      out.push_back("desire edge {'" + base.id(e.a) + "', '" + base.id(e.b) +
                    "'} joins differently labelled vertices");
    }
  }
  for (VertexIndex v = 0; v < n; ++v) {
    const int expected = base.IsTerminal(v) ? 0 : 1;
    if (desire_cover[v] != expected) {
      out.push_back("desire cover: vertex '" + base.id(v) + "' lies in " +
                    std::to_string(desire_cover[v]) + " desire edges, expected " +
                    std::to_string(expected));
    }
  }
  return out;
}

AbstractReductionGraph::AbstractReductionGraph(
    std::shared_ptr<const ColouredBase> base, EdgeSet reality, EdgeSet desire)
    : base_(std::move(base)),
      reality_(std::move(reality)),
      desire_(std::move(desire)),
      reality_mate_(base_->size()),
      desire_mate_(base_->size()) {
  for (const Edge& e : reality_) {
    reality_mate_[e.a] = e.b;
    reality_mate_[e.b] = e.a;
  }
  for (VertexIndex v = 0; v < base_->size(); ++v) desire_mate_[v] = v;
  for (const Edge& e : desire_) {
    desire_mate_[e.a] = e.b;
    desire_mate_[e.b] = e.a;
  }
}

AbstractReductionGraph AbstractReductionGraph::Create(
    std::shared_ptr<const ColouredBase> base, EdgeSet reality,
    EdgeSet desire) {
  if (!base) throw ValidationError("missing coloured base");
  auto violations = ArgViolations(*base, reality, desire);
  if (!violations.empty()) {
    std::string msg = "not an abstract reduction graph:";
    for (const auto& v : violations) msg += "\n  " + v;
    throw ValidationError(msg);
  }
  return AbstractReductionGraph(std::move(base), std::move(reality),
                                std::move(desire));
}

std::optional<VertexIndex> AbstractReductionGraph::DesireMate(
    VertexIndex v) const {
  if (base_->IsTerminal(v)) return std::nullopt;
  return desire_mate_[v];
}

AbstractReductionGraph AbstractReductionGraph::WithDesire(
    EdgeSet desire) const {
  if (!IsDesirable(*base_, desire)) {
    throw ValidationError("replacement desire set is not desirable");
  }
  return AbstractReductionGraph(base_, reality_, std::move(desire));
}

ArgValidation ValidateArg(const RawGraph& raw) {
  ArgValidation result;
  auto& out = result.violations;

  std::vector<Vertex> vertices;
  std::optional<VertexIndex> s, t;
  std::map<std::string, VertexIndex, std::less<>> index;
  for (const auto& rv : raw.vertices) {
    if (!index.emplace(rv.id, vertices.size()).second) {
      out.push_back("duplicate vertex id '" + rv.id + "'");
      continue;
    }
    if (rv.id == "s") s = vertices.size();
    if (rv.id == "t") t = vertices.size();
    vertices.push_back({rv.id, rv.label});
  }
  if (!s) out.push_back("missing terminal vertex 's'");
  if (!t) out.push_back("missing terminal vertex 't'");
  for (const Vertex& v : vertices) {
    const bool terminal = v.id == "s" || v.id == "t";
    if (terminal && v.label) {
      out.push_back("terminal '" + v.id + "' must not be labelled");
    }
    if (!terminal && !v.label) {
      out.push_back("vertex '" + v.id + "' has no label");
    }
  }

  auto resolve = [&](const std::vector<RawGraph::RawEdge>& edges,
                     const char* name) {
    EdgeSet set;
    for (const auto& [x, y] : edges) {
      auto ix = index.find(x);
      auto iy = index.find(y);
      if (ix == index.end() || iy == index.end()) {
        out.push_back(std::string(name) + " edge {'" + x + "', '" + y +
                      "'} references an unknown vertex");
        continue;
      }
      if (ix->second == iy->second) {
        out.push_back(std::string(name) + " edge on '" + x + "' is a loop");
        continue;
      }
      if (!set.insert(MakeEdge(ix->second, iy->second)).second) {
        out.push_back(std::string(name) + " edge {'" + x + "', '" + y +
                      "'} listed twice");
      }
    }
    return set;
  };
  EdgeSet reality = resolve(raw.reality, "reality");
  EdgeSet desire = resolve(raw.desire, "desire");
  if (!out.empty()) return result;

  auto base = std::make_shared<const ColouredBase>(std::move(vertices), *s, *t);
  out = ArgViolations(*base, reality, desire);
  if (out.empty()) {
    result.graph = AbstractReductionGraph::Create(std::move(base),
                                                  std::move(reality),
                                                  std::move(desire));
  }
  return result;
}

namespace {

std::vector<RawGraph::RawEdge> ToRawEdges(const ColouredBase& base,
                                          const EdgeSet& set) {
  std::vector<RawGraph::RawEdge> out;
  for (const Edge& e : set) out.emplace_back(base.id(e.a), base.id(e.b));
  return out;
}

}  // namespace

RawGraph ToRaw(const AbstractReductionGraph& g) {
  RawGraph raw;
  const ColouredBase& base = g.base();
  for (VertexIndex v = 0; v < base.size(); ++v) {
    raw.vertices.push_back({base.id(v), base.label(v)});
  }
  raw.reality = ToRawEdges(base, g.reality());
  raw.desire = ToRawEdges(base, g.desire());
  return raw;
}

AbstractReductionGraph BuildReductionGraph(const LegalString& u) {
  const std::size_t n = u.size();
  // s = 0, I_i = 2i - 1, I'_i = 2i, t = 2n + 1 for 1 <= i <= n.
  auto left = [](std::size_t i) { return 2 * i - 1; };
  auto right = [](std::size_t i) { return 2 * i; };
  std::vector<Vertex> vertices;
  vertices.reserve(2 * n + 2);
  vertices.push_back({"s", std::nullopt});
  for (std::size_t i = 1; i <= n; ++i) {
    vertices.push_back({"I" + std::to_string(i), u[i - 1].symbol});
    vertices.push_back({"I" + std::to_string(i) + "'", u[i - 1].symbol});
  }
  const VertexIndex t = 2 * n + 1;
  vertices.push_back({"t", std::nullopt});

  EdgeSet reality;
  if (n == 0) {
    reality.insert(MakeEdge(0, t));
  } else {
    reality.insert(MakeEdge(0, left(1)));
    for (std::size_t i = 1; i < n; ++i) {
      reality.insert(MakeEdge(right(i), left(i + 1)));
    }
    reality.insert(MakeEdge(right(n), t));
  }

  EdgeSet desire;
  for (Symbol p : Domain(u)) {
    auto [a, b] = Occurrences(u, p);
    const std::size_t i = a + 1, j = b + 1;
    if (u[a] == u[b]) {
      desire.insert(MakeEdge(right(i), left(j)));
      desire.insert(MakeEdge(left(i), right(j)));
    } else {
      desire.insert(MakeEdge(left(i), left(j)));
      desire.insert(MakeEdge(right(i), right(j)));
    }
  }

  auto base = std::make_shared<const ColouredBase>(std::move(vertices), 0, t);
  return AbstractReductionGraph::Create(std::move(base), std::move(reality),
                                        std::move(desire));
}

std::array<Edge, 2> DesirePartition(const AbstractReductionGraph& g,
                                    Symbol p) {
  std::vector<Edge> found;
  for (const Edge& e : g.desire()) {
    if (g.base().label(e.a) == p) found.push_back(e);
  }
  if (found.size() != 2) {
    throw PreconditionError("symbol " + std::to_string(p) +
                            " is not in the domain of the graph");
  }
  return {found[0], found[1]};
}

Components ConnectedComponents(std::size_t vertex_count,
                               std::initializer_list<const EdgeSet*> sets) {
  DisjointSets dsu(vertex_count);
  for (const EdgeSet* set : sets) {
    for (const Edge& e : *set) dsu.Unite(e.a, e.b);
  }
  Components comps;
  comps.of.assign(vertex_count, 0);
  std::map<std::size_t, std::size_t> number;
  for (VertexIndex v = 0; v < vertex_count; ++v) {
    auto [it, inserted] = number.emplace(dsu.Find(v), number.size());
    comps.of[v] = it->second;
  }
  comps.count = number.size();
  return comps;
}

Components ConnectedComponents(const AbstractReductionGraph& g) {
  return ConnectedComponents(g.vertex_count(), {&g.reality(), &g.desire()});
}

CanonicalForm CanonicalFormOf(const AbstractReductionGraph& g) {
  const ColouredBase& base = g.base();
  CanonicalForm form;
  std::vector<bool> visited(base.size(), false);

  visited[base.s()] = true;
  visited[base.t()] = true;
  VertexIndex next = g.RealityMate(base.s());
  while (next != base.t()) {
    const VertexIndex w = *g.DesireMate(next);
    visited[next] = visited[w] = true;
    form.path_word.push_back(*base.label(next));
    form.path_word.push_back(*base.label(w));
    next = g.RealityMate(w);
  }

  for (VertexIndex start = 0; start < base.size(); ++start) {
    if (visited[start]) continue;
    std::vector<VertexIndex> cycle;
    VertexIndex cur = start;
    do {
      const VertexIndex x = g.RealityMate(cur);
      cycle.push_back(cur);
      cycle.push_back(x);
      visited[cur] = visited[x] = true;
      cur = *g.DesireMate(x);
    } while (cur != start);

    // Starting at any vertex and leaving along its reality edge fixes both
    // rotation and orientation.
    std::vector<Symbol> best;
    std::vector<Symbol> word(cycle.size());
    for (VertexIndex first : cycle) {
      VertexIndex v = first;
      for (std::size_t k = 0; k < cycle.size(); k += 2) {
        const VertexIndex x = g.RealityMate(v);
        word[k] = *base.label(v);
        word[k + 1] = *base.label(x);
        v = *g.DesireMate(x);
      }
      if (best.empty() || word < best) best = word;
    }
    form.cycle_words.push_back(std::move(best));
  }
  std::sort(form.cycle_words.begin(), form.cycle_words.end());
  return form;
}

bool AreIsomorphic(const AbstractReductionGraph& g,
                   const AbstractReductionGraph& h) {
  return g.vertex_count() == h.vertex_count() &&
         CanonicalFormOf(g) == CanonicalFormOf(h);
}

std::string FormatCanonicalForm(const CanonicalForm& form) {
  std::ostringstream out;
  auto word = [&out](const std::vector<Symbol>& w) {
    out << '[';
    for (std::size_t i = 0; i < w.size(); ++i) out << (i ? " " : "") << w[i];
    out << ']';
  };
  out << "path";
  word(form.path_word);
  for (const auto& c : form.cycle_words) {
    out << " cycle";
    word(c);
  }
  return out.str();
}

ExtendedArg::ExtendedArg(AbstractReductionGraph arg, EdgeSet merge,
                         std::vector<VertexIndex> path)
    : arg_(std::move(arg)),
      merge_(std::move(merge)),
      path_(std::move(path)),
      position_(path_.size()) {
  for (std::size_t k = 0; k < path_.size(); ++k) position_[path_[k]] = k;
}

ExtendedArg ExtendedArg::Create(AbstractReductionGraph arg, EdgeSet merge) {
  const ColouredBase& base = arg.base();
  if (!IsDesirable(base, merge)) {
    throw ValidationError("merge edges are not desirable");
  }
  for (const Edge& e : merge) {
    if (arg.desire().contains(e)) {
      throw ValidationError("merge edge {'" + base.id(e.a) + "', '" +
                            base.id(e.b) + "'} is also a desire edge");
    }
  }
  std::vector<VertexIndex> merge_mate(base.size());
  for (const Edge& e : merge) {
    merge_mate[e.a] = e.b;
    merge_mate[e.b] = e.a;
  }
  std::vector<VertexIndex> path{base.s()};
  VertexIndex next = arg.RealityMate(base.s());
  while (next != base.t()) {
    const VertexIndex w = merge_mate[next];
    path.push_back(next);
    path.push_back(w);
    next = arg.RealityMate(w);
  }
  path.push_back(base.t());
  if (path.size() != base.size()) {
    throw ValidationError(
        "reality and merge edges do not connect the graph (the s-t path "
        "visits " +
        std::to_string(path.size()) + " of " + std::to_string(base.size()) +
        " vertices)");
  }
  return ExtendedArg(std::move(arg), std::move(merge), std::move(path));
}

ExtendedArg BuildExtendedReductionGraph(const LegalString& u) {
  AbstractReductionGraph g = BuildReductionGraph(u);
  EdgeSet merge;
  for (std::size_t i = 1; i <= u.size(); ++i) {
    merge.insert(MakeEdge(2 * i - 1, 2 * i));
  }
  return ExtendedArg::Create(std::move(g), std::move(merge));
}

ExtendedArg ValidateExtendedArg(const RawGraph& raw) {
  if (!raw.merge) throw ValidationError("graph has no merge edges");
  ArgValidation v = ValidateArg(raw);
  if (!v.ok()) {
    std::string msg = "not an abstract reduction graph:";
    for (const auto& s : v.violations) msg += "\n  " + s;
    throw ValidationError(msg);
  }
  const ColouredBase& base = v.graph->base();
  EdgeSet merge;
  for (const auto& [x, y] : *raw.merge) {
    auto ix = base.Find(x);
    auto iy = base.Find(y);
    if (!ix || !iy) {
      throw ValidationError("merge edge {'" + x + "', '" + y +
                            "'} references an unknown vertex");
    }
    if (*ix == *iy) throw ValidationError("merge edge on '" + x + "' is a loop");
    merge.insert(MakeEdge(*ix, *iy));
  }
  if (merge.size() != raw.merge->size()) {
    throw ValidationError("merge edge listed twice");
  }
  return ExtendedArg::Create(std::move(*v.graph), std::move(merge));
}

RawGraph ToRaw(const ExtendedArg& e) {
  RawGraph raw = ToRaw(e.arg());
  raw.merge = ToRawEdges(e.arg().base(), e.merge());
  return raw;
}

const std::vector<VertexIndex>& StPath(const ExtendedArg& e) {
  return e.path();
}

Sign PointerSign(const ExtendedArg& e, Symbol p) {
  // Path position 2k - 1 holds v_k and 2k holds v'_k, so unprimed vertices
  // sit at odd positions.
  const auto partition = DesirePartition(e.arg(), p);
  const Edge& d = partition[0];
  const bool a_unprimed = e.position(d.a) % 2 == 1;
  const bool b_unprimed = e.position(d.b) % 2 == 1;
  return a_unprimed != b_unprimed ? Sign::kNegative : Sign::kPositive;
}

LegalString LegalizationRepresentative(const ExtendedArg& e) {
  const ColouredBase& base = e.arg().base();
  const auto& path = e.path();
  std::map<Symbol, bool> seen;
  std::vector<Pointer> letters;
  for (std::size_t k = 1; k + 1 < path.size(); k += 2) {
    const Symbol p = *base.label(path[k]);
    auto [it, first] = seen.emplace(p, false);
    letters.push_back(
        {p, !first && PointerSign(e, p) == Sign::kPositive});
  }
  return LegalString::FromLetters(std::move(letters));
}

ExtendedCanonicalForm CanonicalFormOf(const ExtendedArg& e) {
  const ColouredBase& base = e.arg().base();
  ExtendedCanonicalForm form;
  for (std::size_t k = 1; k + 1 < e.path().size(); ++k) {
    form.path_labels.push_back(*base.label(e.path()[k]));
  }
  for (const Edge& d : e.arg().desire()) {
    auto x = e.position(d.a), y = e.position(d.b);
    form.desire_positions.emplace_back(std::min(x, y), std::max(x, y));
  }
  std::sort(form.desire_positions.begin(), form.desire_positions.end());
  return form;
}

bool AreIsomorphic(const ExtendedArg& e, const ExtendedArg& f) {
  return CanonicalFormOf(e) == CanonicalFormOf(f);
}

}  // namespace redukt
