// Copyright 2026 The Tempo Authors
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

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tempo/decomp.hpp"
#include "tempo/structure.hpp"
#include "tempo/tgraph.hpp"

namespace tempo {

enum class Encoding { Lifetime, Degree, Vim, Tim };

inline const char* encoding_name(Encoding e) {
  switch (e) {
    case Encoding::Lifetime: return "lifetime";
    case Encoding::Degree: return "degree";
    case Encoding::Vim: return "vim";
    case Encoding::Tim: return "tim";
  }
  return "?";
}

inline Encoding parse_encoding(const std::string& s) {
  if (s == "lifetime") return Encoding::Lifetime;
  if (s == "degree") return Encoding::Degree;
  if (s == "vim") return Encoding::Vim;
  if (s == "tim") return Encoding::Tim;
  fail(ErrorCode::InvalidInput, "unknown encoding '" + s + "'");
}

// Element ids. Vertex names cannot contain the separators used here.
inline std::string vertex_id(const TemporalGraph& g, int v) { return g.name(v); }
inline std::string edge_id(const TemporalGraph& g, const TemporalEdge& e) {
  return g.name(e.u) + (g.directed() ? ">" : "~") + g.name(e.v) + "@" + std::to_string(e.t);
}
inline std::string time_id(int t) { return "@" + std::to_string(t); }
inline std::string vim_bag_id(int t) { return "#" + std::to_string(t); }
inline std::string tim_bag_id(int t, int k) { return "#" + std::to_string(t) + "." + std::to_string(k); }

inline std::uint64_t graph_hash(const TemporalGraph& g) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
    h ^= 0xff;
    h *= 1099511628211ull;
  };
  mix(g.directed() ? "d" : "u");
  mix(g.strict() ? "s" : "n");
  for (auto& v : g.vertices()) mix(v);
  for (auto& e : g.edges()) mix(edge_id(g, e));
  return h;
}

namespace detail {

inline void add_vertices_and_edges(const TemporalGraph& g, RelationalStructure& rs) {
  for (int v = 0; v < g.num_vertices(); ++v) rs.add_element(vertex_id(g, v), Sort::V);
  for (auto& e : g.edges()) rs.add_element(edge_id(g, e), Sort::TE);
}

inline void add_incidence(const TemporalGraph& g, RelationalStructure& rs) {
  const int base = g.num_vertices();
  if (g.directed()) {
    rs.declare("source", 2);
    rs.declare("target", 2);
  } else {
    rs.declare("inc", 2);
  }
  for (int i = 0; i < g.num_edges(); ++i) {
    auto& e = g.edges()[i];
    if (g.directed()) {
      rs.add_tuple("source", {base + i, e.u});
      rs.add_tuple("target", {base + i, e.v});
    } else {
      rs.add_tuple("inc", {base + i, e.u});
      rs.add_tuple("inc", {base + i, e.v});
    }
  }
}

}  // namespace detail

inline RelationalStructure encode_lifetime(const TemporalGraph& g) {
  RelationalStructure rs;
  rs.encoding = "lifetime";
  detail::add_vertices_and_edges(g, rs);
  const int tbase = rs.size();
  for (int t = 1; t <= g.lifetime(); ++t) rs.add_element(time_id(t), Sort::L);
  detail::add_incidence(g, rs);
  rs.declare("pres", 2);
  rs.declare("ltT", 2);
  for (int i = 0; i < g.num_edges(); ++i)
    rs.add_tuple("pres", {g.num_vertices() + i, tbase + g.edges()[i].t - 1});
  for (int a = 0; a < g.lifetime(); ++a)
    for (int b = a + 1; b < g.lifetime(); ++b) rs.add_tuple("ltT", {tbase + a, tbase + b});
  rs.normalize();
  return rs;
}

// Whether e2 may directly follow e1 on a temporal path of g.
inline bool possible_successor(const TemporalGraph& g, const TemporalEdge& a,
                               const TemporalEdge& b) {
  if (a == b) return false;
  bool shared = g.directed() ? a.v == b.u
                             : (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v);
  if (!shared) return false;
  return g.strict() ? a.t < b.t : a.t <= b.t;
}

inline RelationalStructure encode_degree(const TemporalGraph& g) {
  RelationalStructure rs;
  rs.encoding = "degree";
  detail::add_vertices_and_edges(g, rs);
  detail::add_incidence(g, rs);
  rs.declare("psuc", 2);
  const int base = g.num_vertices();
  for (int i = 0; i < g.num_edges(); ++i)
    for (int j = 0; j < g.num_edges(); ++j)
      if (possible_successor(g, g.edges()[i], g.edges()[j])) rs.add_tuple("psuc", {base + i, base + j});
  rs.normalize();
  return rs;
}

inline RelationalStructure encode_vim(const TemporalGraph& g) {
  RelationalStructure rs;
  rs.encoding = "vim";
  detail::add_vertices_and_edges(g, rs);
  const int bbase = rs.size();
  for (int t = 1; t <= g.lifetime(); ++t) rs.add_element(vim_bag_id(t), Sort::B);
  detail::add_incidence(g, rs);
  rs.declare("bag", 2);
  rs.declare("pres", 2);
  rs.declare("next", 2);
  auto vim = vim_decomposition(g);
  for (int t = 1; t <= g.lifetime(); ++t)
    for (int v : vim.bags[t - 1]) rs.add_tuple("bag", {v, bbase + t - 1});
  for (int i = 0; i < g.num_edges(); ++i)
    rs.add_tuple("pres", {g.num_vertices() + i, bbase + g.edges()[i].t - 1});
  for (int t = 1; t < g.lifetime(); ++t) rs.add_tuple("next", {bbase + t - 1, bbase + t});
  rs.normalize();
  return rs;
}

inline RelationalStructure encode_tim(const TemporalGraph& g, const TimDecomposition& d) {
  auto v = validate_tim(g, d);
  if (!v) fail(ErrorCode::InvalidInput, "TIM decomposition violates clause " + v.clause + ": " + v.detail);
  RelationalStructure rs;
  rs.encoding = "tim";
  detail::add_vertices_and_edges(g, rs);
  const int bbase = rs.size();
  std::map<int, int> per_time;
  for (int i = 0; i < d.size(); ++i) rs.add_element(tim_bag_id(d.tau[i], per_time[d.tau[i]]++), Sort::B);
  detail::add_incidence(g, rs);
  rs.declare("bag", 2);
  rs.declare("pres", 2);
  rs.declare("next", 2);
  for (int i = 0; i < d.size(); ++i)
    for (int x : d.bags[i]) rs.add_tuple("bag", {x, bbase + i});
  for (int k = 0; k < g.num_edges(); ++k) {
    auto& e = g.edges()[k];
    for (int i = 0; i < d.size(); ++i)
      if (d.tau[i] == e.t && std::binary_search(d.bags[i].begin(), d.bags[i].end(), e.u) &&
          std::binary_search(d.bags[i].begin(), d.bags[i].end(), e.v))
        rs.add_tuple("pres", {g.num_vertices() + k, bbase + i});
  }
  // Tree edges are stored (later, earlier); next runs forward in time.
  for (auto [later, earlier] : d.tree_edges) rs.add_tuple("next", {bbase + earlier, bbase + later});
  rs.normalize();
  return rs;
}

inline RelationalStructure encode_tim(const TemporalGraph& g) {
  return encode_tim(g, tim_decomposition(g));
}

inline RelationalStructure encode(const TemporalGraph& g, Encoding e) {
  switch (e) {
    case Encoding::Lifetime: return encode_lifetime(g);
    case Encoding::Degree: return encode_degree(g);
    case Encoding::Vim: return encode_vim(g);
    case Encoding::Tim: return encode_tim(g);
  }
  fail(ErrorCode::InvalidInput, "unknown encoding");
}

}  // namespace tempo
