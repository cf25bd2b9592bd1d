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

#include "redukt/io.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "redukt/error.hpp"

namespace redukt {

using nlohmann::json;

namespace {

Symbol SymbolFromJson(const json& j, const std::string& what) {
  if (!j.is_number_integer()) throw ParseError(what + " must be an integer");
  const auto value = j.get<long long>();
  if (value < 2 || value > std::numeric_limits<Symbol>::max()) {
    throw ParseError(what + " must be a symbol >= 2");
  }
  return static_cast<Symbol>(value);
}

const json& Field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw ParseError(std::string("missing field '") + name + "'");
  }
  return j.at(name);
}

std::vector<RawGraph::RawEdge> EdgesFromJson(const json& j, const char* name) {
  if (!j.is_array()) throw ParseError(std::string("'") + name + "' must be an array");
  std::vector<RawGraph::RawEdge> out;
  for (const json& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() ||
        !e[1].is_string()) {
      throw ParseError(std::string("'") + name +
                       "' entries must be pairs of vertex ids");
    }
    out.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return out;
}

json EdgesToJson(const std::vector<RawGraph::RawEdge>& edges) {
  json out = json::array();
  for (const auto& [a, b] : edges) out.push_back({a, b});
  return out;
}

}  // namespace

RawGraph RawGraphFromJson(const json& j) {
  RawGraph raw;
  const json& vertices = Field(j, "vertices");
  if (!vertices.is_array()) throw ParseError("'vertices' must be an array");
  for (const json& v : vertices) {
    const json& id = Field(v, "id");
    if (!id.is_string()) throw ParseError("vertex id must be a string");
    RawGraph::RawVertex rv{id.get<std::string>(), std::nullopt};
    if (v.contains("label") && !v.at("label").is_null()) {
      rv.label = SymbolFromJson(v.at("label"), "label of '" + rv.id + "'");
    }
    raw.vertices.push_back(std::move(rv));
  }
  raw.reality = EdgesFromJson(Field(j, "reality"), "reality");
  raw.desire = EdgesFromJson(Field(j, "desire"), "desire");
  if (j.contains("merge")) raw.merge = EdgesFromJson(j.at("merge"), "merge");
  return raw;
}

json ToJson(const RawGraph& raw) {
  json out;
  out["vertices"] = json::array();
  for (const auto& v : raw.vertices) {
    json jv{{"id", v.id}};
    if (v.label) jv["label"] = *v.label;
    out["vertices"].push_back(std::move(jv));
  }
  out["reality"] = EdgesToJson(raw.reality);
  out["desire"] = EdgesToJson(raw.desire);
  if (raw.merge) out["merge"] = EdgesToJson(*raw.merge);
  return out;
}

PointerComponentGraph MultigraphFromJson(const json& j) {
  const json& nodes = Field(j, "nodes");
  if (!nodes.is_array()) throw ParseError("'nodes' must be an array");
  std::vector<std::string> ids;
  for (const json& n : nodes) {
    if (!n.is_string()) throw ParseError("node ids must be strings");
    ids.push_back(n.get<std::string>());
  }
  const json& edges = Field(j, "edges");
  if (!edges.is_array()) throw ParseError("'edges' must be an array");
  std::map<Symbol, EdgeEnds> ends;
  for (const json& e : edges) {
    const json& label = Field(e, "label");
    const json& pair = Field(e, "ends");
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() ||
        !pair[1].is_string()) {
      throw ParseError("edge ends must be a pair of node ids");
    }
    const Symbol p = SymbolFromJson(label, "edge label");
    if (!ends.emplace(p, EdgeEnds{pair[0], pair[1]}).second) {
      throw ParseError("duplicate edge label " + std::to_string(p));
    }
  }
  try {
    return PointerComponentGraph(std::move(ids), std::move(ends));
  } catch (const ValidationError& e) {
    throw ParseError(e.what());
  }
}

json ToJson(const PointerComponentGraph& m) {
  json out;
  out["nodes"] = m.nodes();
  out["edges"] = json::array();
  for (const auto& [p, ends] : m.edges()) {
    out["edges"].push_back({{"label", p}, {"ends", {ends.first, ends.second}}});
  }
  return out;
}

json ParseJson(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

namespace {

std::string Quote(const std::string& id) {
  std::string out = "\"";
  for (char c : id) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::vector<RawGraph::RawEdge> Sorted(std::vector<RawGraph::RawEdge> edges) {
  for (auto& [a, b] : edges) {
    if (b < a) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace

std::string ToDot(const RawGraph& raw) {
  std::ostringstream out;
  out << "graph reduction {\n";
  auto vertices = raw.vertices;
  std::sort(vertices.begin(), vertices.end(),
            [](const auto& x, const auto& y) { return x.id < y.id; });
  for (const auto& v : vertices) {
    out << "  " << Quote(v.id) << " [label="
        << (v.label ? Quote(std::to_string(*v.label)) : Quote(v.id)) << "];\n";
  }
  for (const auto& [a, b] : Sorted(raw.reality)) {
    out << "  " << Quote(a) << " -- " << Quote(b)
        << " [color=\"black:invis:black\"];\n";
  }
  for (const auto& [a, b] : Sorted(raw.desire)) {
    out << "  " << Quote(a) << " -- " << Quote(b) << ";\n";
  }
  if (raw.merge) {
    for (const auto& [a, b] : Sorted(*raw.merge)) {
      out << "  " << Quote(a) << " -- " << Quote(b) << " [style=dashed];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace redukt
