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

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "tempo/error.hpp"

namespace tempo {

// Edge as given by the caller, endpoints by name.
struct EdgeSpec {
  std::string u;
  std::string v;
  int t = 1;
};

// Canonical temporal edge over vertex indices. Undirected edges keep u < v.
struct TemporalEdge {
  int u = 0;
  int v = 0;
  int t = 1;

  friend bool operator==(const TemporalEdge&, const TemporalEdge&) = default;
  friend auto operator<=>(const TemporalEdge& a, const TemporalEdge& b) {
    return std::tie(a.t, a.u, a.v) <=> std::tie(b.t, b.u, b.v);
  }
};

struct ActivityInterval {
  int tmin = 0;
  int tmax = 0;
  friend bool operator==(const ActivityInterval&, const ActivityInterval&) = default;
};

// Vertex names end up inside element ids, so the id separators are reserved.
inline bool valid_vertex_name(const std::string& name) {
  if (name.empty()) return false;
  for (char c : name) {
    if (c == '~' || c == '>' || c == '@' || c == '#' || c == ',' ||
        static_cast<unsigned char>(c) <= ' ')
      return false;
  }
  return true;
}

class StaticGraph {
 public:
  StaticGraph() = default;
  StaticGraph(std::vector<std::string> names, bool directed)
      : names_(std::move(names)), directed_(directed) {}

  void add_edge(int a, int b) {
    if (a == b) return;
    if (!directed_ && a > b) std::swap(a, b);
    edges_.insert({a, b});
  }

  const std::vector<std::string>& names() const { return names_; }
  int size() const { return static_cast<int>(names_.size()); }
  bool directed() const { return directed_; }
  const std::set<std::pair<int, int>>& edges() const { return edges_; }
  bool has_edge(int a, int b) const {
    if (!directed_ && a > b) std::swap(a, b);
    return edges_.count({a, b}) > 0;
  }

  // Undirected neighbourhoods regardless of orientation.
  std::vector<std::vector<int>> neighbours() const {
    std::vector<std::set<int>> s(names_.size());
    for (auto [a, b] : edges_) {
      s[a].insert(b);
      s[b].insert(a);
    }
    std::vector<std::vector<int>> out;
    out.reserve(s.size());
    for (auto& x : s) out.emplace_back(x.begin(), x.end());
    return out;
  }

  int max_degree() const {
    int best = 0;
    for (auto& n : neighbours()) best = std::max(best, static_cast<int>(n.size()));
    return best;
  }

  std::optional<int> index_of(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<int>(it - names_.begin());
  }

 private:
  std::vector<std::string> names_;
  bool directed_ = false;
  std::set<std::pair<int, int>> edges_;
};

class TemporalGraph {
 public:
  TemporalGraph() = default;

  // With an explicit vertex list every endpoint must be declared; without one
  // the vertex set is the set of endpoints.
  TemporalGraph(std::optional<std::vector<std::string>> vertices,
                const std::vector<EdgeSpec>& edges, bool directed, bool strict)
      : directed_(directed), strict_(strict) {
    std::set<std::string> names;
    if (vertices) {
      for (auto& v : *vertices) names.insert(v);
    } else {
      for (auto& e : edges) {
        names.insert(e.u);
        names.insert(e.v);
      }
    }
    for (auto& n : names)
      if (!valid_vertex_name(n)) fail(ErrorCode::InvalidName, "bad vertex name '" + n + "'");
    names_.assign(names.begin(), names.end());
    std::set<TemporalEdge> canon;
    for (auto& e : edges) {
      if (e.u == e.v) fail(ErrorCode::SelfLoop, "edge (" + e.u + "," + e.v + "," + std::to_string(e.t) + ")");
      auto a = index_of(e.u);
      auto b = index_of(e.v);
      if (!a) fail(ErrorCode::UnknownVertex, e.u);
      if (!b) fail(ErrorCode::UnknownVertex, e.v);
      if (e.t < 1) fail(ErrorCode::InvalidInput, "time label must be positive");
      TemporalEdge te{*a, *b, e.t};
      if (!directed_ && te.u > te.v) std::swap(te.u, te.v);
      canon.insert(te);
    }
    edges_.assign(canon.begin(), canon.end());
    for (auto& e : edges_) lifetime_ = std::max(lifetime_, e.t);
  }

  const std::vector<std::string>& vertices() const { return names_; }
  const std::vector<TemporalEdge>& edges() const { return edges_; }
  int num_vertices() const { return static_cast<int>(names_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  bool directed() const { return directed_; }
  bool strict() const { return strict_; }
  int lifetime() const { return lifetime_; }
  const std::string& name(int v) const { return names_.at(v); }

  std::optional<int> index_of(const std::string& name) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), name);
    if (it == names_.end() || *it != name) return std::nullopt;
    return static_cast<int>(it - names_.begin());
  }

  int require_vertex(const std::string& name) const {
    auto i = index_of(name);
    if (!i) fail(ErrorCode::UnknownVertex, name);
    return *i;
  }

  std::optional<int> edge_index(int u, int v, int t) const {
    if (!directed_ && u > v) std::swap(u, v);
    TemporalEdge key{u, v, t};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || !(*it == key)) return std::nullopt;
    return static_cast<int>(it - edges_.begin());
  }

  // Same graph with the reachability semantics switched.
  TemporalGraph with_strict(bool strict) const {
    TemporalGraph g = *this;
    g.strict_ = strict;
    return g;
  }

  std::vector<EdgeSpec> edge_specs() const {
    std::vector<EdgeSpec> out;
    for (auto& e : edges_) out.push_back({names_[e.u], names_[e.v], e.t});
    return out;
  }

  friend bool operator==(const TemporalGraph& a, const TemporalGraph& b) {
    return a.names_ == b.names_ && a.edges_ == b.edges_ && a.directed_ == b.directed_ &&
           a.strict_ == b.strict_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<TemporalEdge> edges_;
  bool directed_ = false;
  bool strict_ = true;
  int lifetime_ = 0;
};

inline TemporalGraph new_temporal_graph(const std::vector<std::string>& vertices,
                                        const std::vector<EdgeSpec>& edges, bool directed,
                                        bool strict) {
  if (vertices.empty()) return TemporalGraph(std::nullopt, edges, directed, strict);
  return TemporalGraph(vertices, edges, directed, strict);
}

inline StaticGraph footprint(const TemporalGraph& g) {
  StaticGraph s(g.vertices(), g.directed());
  for (auto& e : g.edges()) s.add_edge(e.u, e.v);
  return s;
}

inline StaticGraph snapshot(const TemporalGraph& g, int t) {
  if (t < 1 || t > g.lifetime())
    fail(ErrorCode::TimeOutOfRange, "t=" + std::to_string(t) + " outside [1," +
                                        std::to_string(g.lifetime()) + "]");
  StaticGraph s(g.vertices(), g.directed());
  for (auto& e : g.edges())
    if (e.t == t) s.add_edge(e.u, e.v);
  return s;
}

inline int lifetime(const TemporalGraph& g) { return g.lifetime(); }

inline int temporal_degree(const TemporalGraph& g, int v) {
  int d = 0;
  for (auto& e : g.edges())
    if (e.u == v || e.v == v) ++d;
  return d;
}

inline int temporal_degree(const TemporalGraph& g, const std::string& v) {
  return temporal_degree(g, g.require_vertex(v));
}

inline int max_temporal_degree(const TemporalGraph& g) {
  std::vector<int> d(g.num_vertices(), 0);
  for (auto& e : g.edges()) {
    ++d[e.u];
    ++d[e.v];
  }
  return d.empty() ? 0 : *std::max_element(d.begin(), d.end());
}

inline int static_degree(const TemporalGraph& g, int v) {
  std::set<int> n;
  for (auto& e : g.edges()) {
    if (e.u == v) n.insert(e.v);
    if (e.v == v) n.insert(e.u);
  }
  return static_cast<int>(n.size());
}

inline int max_static_degree(const TemporalGraph& g) { return footprint(g).max_degree(); }

inline std::optional<ActivityInterval> activity_interval(const TemporalGraph& g, int v) {
  std::optional<ActivityInterval> out;
  for (auto& e : g.edges()) {
    if (e.u != v && e.v != v) continue;
    if (!out) out = ActivityInterval{e.t, e.t};
    out->tmin = std::min(out->tmin, e.t);
    out->tmax = std::max(out->tmax, e.t);
  }
  return out;
}

inline std::optional<ActivityInterval> activity_interval(const TemporalGraph& g,
                                                         const std::string& v) {
  return activity_interval(g, g.require_vertex(v));
}

// Activity interval of the static edge {a,b} (ordered pair when directed).
inline std::optional<ActivityInterval> activity_interval(const TemporalGraph& g,
                                                         const std::string& a,
                                                         const std::string& b) {
  int x = g.require_vertex(a), y = g.require_vertex(b);
  if (!g.directed() && x > y) std::swap(x, y);
  std::optional<ActivityInterval> out;
  for (auto& e : g.edges()) {
    if (e.u != x || e.v != y) continue;
    if (!out) out = ActivityInterval{e.t, e.t};
    out->tmin = std::min(out->tmin, e.t);
    out->tmax = std::max(out->tmax, e.t);
  }
  return out;
}

struct ReachOptions {
  std::optional<std::vector<bool>> allowed_vertices;        // by vertex index
  std::optional<std::set<std::pair<int, int>>> allowed_static;  // canonical pairs
  std::optional<std::vector<bool>> allowed_edges;           // by temporal edge index
  std::optional<int> max_wait;
};

// Label-correcting search over (vertex, arrival time) states. The source may
// depart at any time; later hops honour strictness and the waiting bound.
inline std::vector<bool> reach_mask(const TemporalGraph& g, int source,
                                    const ReachOptions& opt = {}) {
  const int n = g.num_vertices();
  const int lam = g.lifetime();
  std::vector<std::vector<bool>> seen(n, std::vector<bool>(lam + 1, false));
  std::vector<bool> out(n, false);
  out[source] = true;
  std::deque<std::pair<int, int>> queue;
  seen[source][0] = true;
  queue.push_back({source, 0});
  const auto& edges = g.edges();
  while (!queue.empty()) {
    auto [x, a] = queue.front();
    queue.pop_front();
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
      const auto& e = edges[i];
      int y;
      if (e.u == x) y = e.v;
      else if (!g.directed() && e.v == x) y = e.u;
      else continue;
      if (a > 0) {
        if (g.strict() ? e.t <= a : e.t < a) continue;
        if (opt.max_wait && e.t - a > *opt.max_wait) continue;
      }
      if (opt.allowed_edges && !(*opt.allowed_edges)[i]) continue;
      if (opt.allowed_static && !opt.allowed_static->count({e.u, e.v})) continue;
      if (opt.allowed_vertices && !(*opt.allowed_vertices)[y]) continue;
      if (seen[y][e.t]) continue;
      seen[y][e.t] = true;
      out[y] = true;
      queue.push_back({y, e.t});
    }
  }
  return out;
}

inline std::set<std::string> reach_set(const TemporalGraph& g, const std::string& source,
                                       const ReachOptions& opt = {}) {
  auto mask = reach_mask(g, g.require_vertex(source), opt);
  std::set<std::string> out;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (mask[v]) out.insert(g.name(v));
  return out;
}

}  // namespace tempo
