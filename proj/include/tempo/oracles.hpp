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

// Brute-force reference solvers. Everything here works on TemporalGraph
// directly and never goes through encodings or the formula evaluator.

#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tempo/error.hpp"
#include "tempo/tgraph.hpp"

namespace tempo {

struct OracleCeiling {
  int n = 6;
  int lifetime = 5;
  int edges = 12;
  int colours = 3;
};

// TEMPO_ORACLE_CEILING="n=7,lifetime=6,edges=14,colours=4" overrides fields.
inline OracleCeiling oracle_ceiling() {
  OracleCeiling c;
  const char* env = std::getenv("TEMPO_ORACLE_CEILING");
  if (!env) return c;
  std::stringstream ss(env);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) continue;
    auto key = item.substr(0, eq);
    int val = std::atoi(item.c_str() + eq + 1);
    if (val <= 0) continue;
    if (key == "n") c.n = val;
    else if (key == "lifetime") c.lifetime = val;
    else if (key == "edges") c.edges = val;
    else if (key == "colours") c.colours = val;
  }
  return c;
}

inline void check_ceiling(const TemporalGraph& g) {
  auto c = oracle_ceiling();
  if (g.num_vertices() > c.n || g.lifetime() > c.lifetime || g.num_edges() > c.edges)
    fail(ErrorCode::TooLarge, "instance exceeds oracle ceiling (n=" + std::to_string(c.n) +
                                  ", lifetime=" + std::to_string(c.lifetime) +
                                  ", edges=" + std::to_string(c.edges) + ")");
}

struct OracleReport {
  bool verdict = false;
  std::optional<long long> value;
  std::vector<std::vector<std::string>> witness;
  std::uint64_t explored = 0;
};

// Text label of a temporal edge, "u~v@t" or "u>v@t".
inline std::string edge_label(const TemporalGraph& g, const TemporalEdge& e) {
  return g.name(e.u) + (g.directed() ? ">" : "~") + g.name(e.v) + "@" + std::to_string(e.t);
}

inline std::optional<int> find_edge_label(const TemporalGraph& g, const std::string& label) {
  for (int i = 0; i < g.num_edges(); ++i)
    if (edge_label(g, g.edges()[i]) == label) return i;
  return std::nullopt;
}

// Static edge key; unordered for undirected graphs.
inline std::pair<int, int> static_key(const TemporalGraph& g, const TemporalEdge& e) {
  if (!g.directed() && e.u > e.v) return {e.v, e.u};
  return {e.u, e.v};
}

inline bool follows(const TemporalGraph& g, int t1, int t2) {
  return g.strict() ? t1 < t2 : t1 <= t2;
}

// Whether b may directly follow a on a temporal path.
inline bool oracle_successor(const TemporalGraph& g, int a, int b) {
  if (a == b) return false;
  auto& x = g.edges()[a];
  auto& y = g.edges()[b];
  bool shared = g.directed() ? x.v == y.u : (x.u == y.u || x.u == y.v || x.v == y.u || x.v == y.v);
  return shared && follows(g, x.t, y.t);
}

struct PathRestriction {
  std::optional<std::vector<bool>> vertices;
  std::optional<std::vector<bool>> edges;
  std::optional<int> max_wait;
};

// Every vertex-simple temporal path from u to v, as edge index sequences.
// u == v yields nothing.
inline std::vector<std::vector<int>> temporal_paths(const TemporalGraph& g, int u, int v,
                                                    const PathRestriction& r = {},
                                                    bool stop_at_first = false) {
  std::vector<std::vector<int>> out;
  if (u == v) return out;
  auto vertex_ok = [&](int x) { return !r.vertices || (*r.vertices)[x]; };
  if (!vertex_ok(u) || !vertex_ok(v)) return out;
  std::vector<bool> visited(g.num_vertices(), false);
  std::vector<int> stack;
  visited[u] = true;
  auto dfs = [&](auto&& self, int x, int last) -> bool {
    for (int i = 0; i < g.num_edges(); ++i) {
      auto& e = g.edges()[i];
      int y;
      if (e.u == x) y = e.v;
      else if (!g.directed() && e.v == x) y = e.u;
      else continue;
      if (visited[y] || !vertex_ok(y)) continue;
      if (r.edges && !(*r.edges)[i]) continue;
      if (last >= 0) {
        int lt = g.edges()[last].t;
        if (!follows(g, lt, e.t)) continue;
        if (r.max_wait && e.t - lt > *r.max_wait) continue;
      }
      stack.push_back(i);
      if (y == v) {
        out.push_back(stack);
        if (stop_at_first) return true;
      } else {
        visited[y] = true;
        if (self(self, y, i)) return true;
        visited[y] = false;
      }
      stack.pop_back();
    }
    return false;
  };
  dfs(dfs, u, -1);
  return out;
}

inline bool oracle_reachable(const TemporalGraph& g, int u, int v, const PathRestriction& r = {}) {
  return !temporal_paths(g, u, v, r, true).empty();
}

inline bool oracle_reachable(const TemporalGraph& g, const std::string& u, const std::string& v,
                             const PathRestriction& r = {}) {
  return oracle_reachable(g, g.require_vertex(u), g.require_vertex(v), r);
}

inline std::vector<bool> vertex_mask(const TemporalGraph& g, const std::vector<int>& xs) {
  std::vector<bool> m(g.num_vertices(), false);
  for (int x : xs) m[x] = true;
  return m;
}

inline std::vector<bool> edge_mask(const TemporalGraph& g, const std::vector<int>& es) {
  std::vector<bool> m(g.num_edges(), false);
  for (int e : es) m[e] = true;
  return m;
}

// Temporal edges whose static edge carries no edge of xs.
inline std::vector<bool> edges_off_static(const TemporalGraph& g, const std::vector<int>& xs) {
  std::set<std::pair<int, int>> banned;
  for (int e : xs) banned.insert(static_key(g, g.edges()[e]));
  std::vector<bool> m(g.num_edges(), true);
  for (int i = 0; i < g.num_edges(); ++i)
    if (banned.count(static_key(g, g.edges()[i]))) m[i] = false;
  return m;
}

// Temporal edges whose static edge carries some edge of xs.
inline std::vector<bool> edges_on_static(const TemporalGraph& g, const std::vector<int>& xs) {
  auto off = edges_off_static(g, xs);
  std::vector<bool> m(g.num_edges());
  for (int i = 0; i < g.num_edges(); ++i) m[i] = !off[i];
  return m;
}

// ---------------------------------------------------------------------------
// Disjoint paths

enum class DisjointVariant { Edge, Vertex, VertexInterior };

inline bool oracle_disjoint_paths(const TemporalGraph& g, int u, int v, DisjointVariant variant) {
  check_ceiling(g);
  if (u == v) return false;
  // Both vertex sets of the literal vertex variant contain u.
  if (variant == DisjointVariant::Vertex) return false;
  auto paths = temporal_paths(g, u, v);
  for (std::size_t i = 0; i < paths.size(); ++i)
    for (std::size_t j = i; j < paths.size(); ++j) {
      auto& p = paths[i];
      auto& q = paths[j];
      if (variant == DisjointVariant::Edge) {
        if (i == j) continue;
        bool clash = false;
        for (int e : p)
          if (std::find(q.begin(), q.end(), e) != q.end()) clash = true;
        if (!clash) return true;
      } else {
        auto interior = [&](const std::vector<int>& path) {
          std::set<int> s;
          for (int e : path) {
            s.insert(g.edges()[e].u);
            s.insert(g.edges()[e].v);
          }
          s.erase(u);
          s.erase(v);
          return s;
        };
        auto a = interior(p);
        auto b = interior(q);
        bool clash = false;
        for (int x : a)
          if (b.count(x)) clash = true;
        if (!clash) return true;
      }
    }
  return false;
}

// ---------------------------------------------------------------------------
// Components

enum class ComponentVariant { Open, Closed, UnilateralOpen, UnilateralClosed };

namespace detail {

inline std::vector<std::vector<bool>> reach_matrix(const TemporalGraph& g, const PathRestriction& r) {
  int n = g.num_vertices();
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b) m[a][b] = oracle_reachable(g, a, b, r);
  return m;
}

inline std::vector<int> members_of(std::uint32_t mask, int n) {
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if ((mask >> i) & 1u) out.push_back(i);
  return out;
}

inline std::uint32_t mask_of(const std::vector<int>& xs) {
  std::uint32_t m = 0;
  for (int x : xs) m |= 1u << x;
  return m;
}

}  // namespace detail

inline bool oracle_is_component(const TemporalGraph& g, const std::vector<int>& xs,
                                ComponentVariant variant) {
  check_ceiling(g);
  const int n = g.num_vertices();
  const bool closed = variant == ComponentVariant::Closed || variant == ComponentVariant::UnilateralClosed;
  const bool unilateral =
      variant == ComponentVariant::UnilateralOpen || variant == ComponentVariant::UnilateralClosed;
  auto pair_ok = [&](const std::vector<std::vector<bool>>& m, int a, int b) {
    return unilateral ? (m[a][b] || m[b][a]) : (m[a][b] && m[b][a]);
  };
  auto connected = [&](const std::vector<int>& set, const std::vector<std::vector<bool>>& m) {
    for (int a : set)
      for (int b : set)
        if (a != b && !pair_ok(m, a, b)) return false;
    return true;
  };
  if (!closed) {
    auto m = detail::reach_matrix(g, {});
    if (!connected(xs, m)) return false;
    auto in = vertex_mask(g, xs);
    for (int y = 0; y < n; ++y) {
      if (in[y]) continue;
      bool all = true;
      for (int a : xs)
        if (!pair_ok(m, a, y)) all = false;
      if (all) return false;
    }
    return true;
  }
  auto restricted = [&](const std::vector<int>& set) {
    PathRestriction r;
    r.vertices = vertex_mask(g, set);
    return detail::reach_matrix(g, r);
  };
  if (!connected(xs, restricted(xs))) return false;
  const std::uint32_t x = detail::mask_of(xs);
  for (std::uint32_t y = 0; y < (1u << n); ++y) {
    if ((y & x) != x || y == x) continue;
    auto ys = detail::members_of(y, n);
    if (connected(ys, restricted(ys))) return false;
  }
  return true;
}

inline std::vector<std::vector<int>> oracle_components(const TemporalGraph& g, ComponentVariant variant) {
  check_ceiling(g);
  std::vector<std::vector<int>> out;
  const int n = g.num_vertices();
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    auto xs = detail::members_of(m, n);
    if (oracle_is_component(g, xs, variant)) out.push_back(xs);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Separators and spanners

enum class SeparatorVariant { Vertex, StaticEdge, TemporalEdge };

// xs are vertex indices for Vertex, temporal edge indices otherwise.
inline bool oracle_separator(const TemporalGraph& g, int s, int z, SeparatorVariant variant,
                             const std::vector<int>& xs) {
  PathRestriction r;
  switch (variant) {
    case SeparatorVariant::Vertex: {
      if (std::find(xs.begin(), xs.end(), s) != xs.end()) return false;
      if (std::find(xs.begin(), xs.end(), z) != xs.end()) return false;
      std::vector<bool> keep(g.num_vertices(), true);
      for (int x : xs) keep[x] = false;
      r.vertices = keep;
      break;
    }
    case SeparatorVariant::StaticEdge: r.edges = edges_off_static(g, xs); break;
    case SeparatorVariant::TemporalEdge: {
      std::vector<bool> keep(g.num_edges(), true);
      for (int e : xs) keep[e] = false;
      r.edges = keep;
      break;
    }
  }
  return !oracle_reachable(g, s, z, r);
}

// Smallest separator by subset enumeration in increasing size.
inline OracleReport oracle_min_separator(const TemporalGraph& g, int s, int z, SeparatorVariant variant) {
  check_ceiling(g);
  OracleReport rep;
  const int m = variant == SeparatorVariant::Vertex ? g.num_vertices() : g.num_edges();
  for (int size = 0; size <= m; ++size) {
    std::vector<int> pick;
    bool found = false;
    auto rec = [&](auto&& self, int start) -> void {
      if (found) return;
      if (static_cast<int>(pick.size()) == size) {
        ++rep.explored;
        if (oracle_separator(g, s, z, variant, pick)) {
          found = true;
          std::vector<std::string> ids;
          for (int x : pick)
            ids.push_back(variant == SeparatorVariant::Vertex ? g.name(x) : edge_label(g, g.edges()[x]));
          std::sort(ids.begin(), ids.end());
          rep.witness = {ids};
        }
        return;
      }
      for (int i = start; i < m; ++i) {
        pick.push_back(i);
        self(self, i + 1);
        pick.pop_back();
      }
    };
    rec(rec, 0);
    if (found) {
      rep.verdict = true;
      rep.value = size;
      return rep;
    }
  }
  return rep;
}

inline bool oracle_spanner(const TemporalGraph& g, const std::vector<int>& xs) {
  check_ceiling(g);
  PathRestriction r;
  r.vertices = vertex_mask(g, xs);
  for (int a = 0; a < g.num_vertices(); ++a)
    for (int b = 0; b < g.num_vertices(); ++b)
      if (a != b && oracle_reachable(g, a, b) && !oracle_reachable(g, a, b, r)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Exploration: one move or wait per time step, starting anywhere.

enum class ExplorationVariant { Vertex, Edge };

inline bool oracle_exploration(const TemporalGraph& g, ExplorationVariant variant) {
  check_ceiling(g);
  const int n = g.num_vertices();
  std::map<std::pair<int, int>, int> statics;
  for (auto& e : g.edges()) statics.emplace(static_key(g, e), static_cast<int>(statics.size()));
  const std::uint32_t goal = variant == ExplorationVariant::Vertex
                                 ? (n >= 32 ? ~0u : (1u << n) - 1)
                                 : (statics.size() >= 32 ? ~0u : (1u << statics.size()) - 1);
  std::set<std::pair<int, std::uint32_t>> states;
  for (int v = 0; v < n; ++v)
    states.insert({v, variant == ExplorationVariant::Vertex ? (1u << v) : 0u});
  for (int t = 1; t <= g.lifetime(); ++t) {
    std::set<std::pair<int, std::uint32_t>> next;
    for (auto [x, seen] : states) {
      next.insert({x, seen});
      for (auto& e : g.edges()) {
        if (e.t != t) continue;
        int y;
        if (e.u == x) y = e.v;
        else if (!g.directed() && e.v == x) y = e.u;
        else continue;
        std::uint32_t s2 = seen;
        if (variant == ExplorationVariant::Vertex) {
          s2 |= 1u << y;
        } else {
          TemporalEdge step{x, y, t};
          s2 |= 1u << statics.at(static_key(g, step));
        }
        next.insert({y, s2});
      }
    }
    states = std::move(next);
  }
  for (auto& [x, seen] : states)
    if (seen == goal) return true;
  return false;
}

// ---------------------------------------------------------------------------
// Clique and independent set over windows [t, t + delta - 1] clipped at the lifetime.

enum class CliqueVariant { Clique, IndependentSet };

inline bool oracle_clique_is(const TemporalGraph& g, const std::vector<int>& xs, int delta,
                             CliqueVariant variant) {
  check_ceiling(g);
  const int lam = g.lifetime();
  auto edge_at = [&](int a, int b, int t) {
    for (auto& e : g.edges())
      if (e.t == t && ((e.u == a && e.v == b) || (e.u == b && e.v == a))) return true;
    return false;
  };
  for (int a : xs)
    for (int b : xs) {
      if (a == b) continue;
      for (int t = 1; t <= lam; ++t) {
        bool hit = false;
        for (int t2 = t; t2 <= std::min(lam, t + delta - 1); ++t2)
          if (edge_at(a, b, t2)) hit = true;
        if (variant == CliqueVariant::Clique && !hit) return false;
        if (variant == CliqueVariant::IndependentSet && hit) return false;
      }
    }
  return true;
}

// ---------------------------------------------------------------------------
// Feedback sets. A temporal cycle is a temporal path v..w (w != v) closed by
// an edge back to v that may follow its last edge; undirected cycles need at
// least three vertices.

enum class FeedbackVariant { TemporalEdge, Connection };

inline bool has_temporal_cycle(const TemporalGraph& g, const std::vector<bool>& allowed) {
  PathRestriction r;
  r.edges = allowed;
  for (int v = 0; v < g.num_vertices(); ++v)
    for (int w = 0; w < g.num_vertices(); ++w) {
      if (w == v) continue;
      for (auto& p : temporal_paths(g, v, w, r)) {
        if (!g.directed() && p.size() < 2) continue;
        for (int c = 0; c < g.num_edges(); ++c) {
          if (!allowed[c] || std::find(p.begin(), p.end(), c) != p.end()) continue;
          auto& e = g.edges()[c];
          bool closes = g.directed() ? (e.u == w && e.v == v)
                                     : ((e.u == w && e.v == v) || (e.u == v && e.v == w));
          if (closes && oracle_successor(g, p.back(), c)) return true;
        }
      }
    }
  return false;
}

inline bool oracle_feedback(const TemporalGraph& g, const std::vector<int>& xs, FeedbackVariant variant) {
  check_ceiling(g);
  std::vector<bool> allowed;
  if (variant == FeedbackVariant::TemporalEdge) {
    allowed.assign(g.num_edges(), true);
    for (int e : xs) allowed[e] = false;
  } else {
    allowed = edges_off_static(g, xs);
  }
  return !has_temporal_cycle(g, allowed);
}

// ---------------------------------------------------------------------------
// Colouring: every snapshot is properly k-colourable.

inline bool oracle_colouring(const TemporalGraph& g, int k) {
  check_ceiling(g);
  if (k > oracle_ceiling().colours) fail(ErrorCode::TooLarge, "colour count exceeds oracle ceiling");
  if (k < 1) fail(ErrorCode::InvalidInput, "k must be positive");
  const int n = g.num_vertices();
  for (int t = 1; t <= g.lifetime(); ++t) {
    std::vector<std::vector<int>> adj(n);
    for (auto& e : g.edges())
      if (e.t == t) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
      }
    std::vector<int> colour(n, -1);
    auto rec = [&](auto&& self, int v) -> bool {
      if (v == n) return true;
      for (int c = 0; c < k; ++c) {
        bool ok = true;
        for (int w : adj[v])
          if (colour[w] == c) ok = false;
        if (!ok) continue;
        colour[v] = c;
        if (self(self, v + 1)) return true;
        colour[v] = -1;
      }
      return false;
    };
    if (!rec(rec, 0)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Matchings

enum class MatchingVariant { Delta, Temporal };

inline bool oracle_matching(const TemporalGraph& g, const std::vector<int>& ms, MatchingVariant variant,
                            int delta = 1) {
  for (int a : ms)
    for (int b : ms) {
      if (a == b) continue;
      auto& x = g.edges()[a];
      auto& y = g.edges()[b];
      if (variant == MatchingVariant::Delta) {
        bool share = x.u == y.u || x.u == y.v || x.v == y.u || x.v == y.v;
        if (share && std::abs(x.t - y.t) < delta) return false;
      } else if (oracle_successor(g, a, b)) {
        return false;
      }
    }
  return true;
}

// Maximum or minimum |S| over subsets S of {0..m-1} accepted by check.
inline OracleReport oracle_optimize_subset(int m, bool maximize,
                                           const std::function<bool(const std::vector<int>&)>& check,
                                           const std::function<std::string(int)>& label) {
  OracleReport rep;
  if (m > 24) fail(ErrorCode::TooLarge, "subset enumeration over more than 24 elements");
  std::optional<std::vector<std::string>> best_ids;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    auto xs = detail::members_of(mask, m);
    ++rep.explored;
    if (!check(xs)) continue;
    long long size = static_cast<long long>(xs.size());
    std::vector<std::string> ids;
    for (int x : xs) ids.push_back(label(x));
    std::sort(ids.begin(), ids.end());
    bool better = !rep.value || (maximize ? size > *rep.value : size < *rep.value) ||
                  (size == *rep.value && ids < *best_ids);
    if (better) {
      rep.value = size;
      best_ids = ids;
    }
  }
  rep.verdict = rep.value.has_value();
  if (best_ids) rep.witness = {*best_ids};
  return rep;
}

inline OracleReport oracle_max_matching(const TemporalGraph& g, MatchingVariant variant, int delta = 1) {
  check_ceiling(g);
  return oracle_optimize_subset(
      g.num_edges(), true, [&](const std::vector<int>& ms) { return oracle_matching(g, ms, variant, delta); },
      [&](int i) { return edge_label(g, g.edges()[i]); });
}

// ---------------------------------------------------------------------------
// Covers and dominating sets

enum class CoverVariant {
  TPCover,        // closed; params k
  Multistage,     // family X_1..X_L; param l
  TimelineVC,     // family X_1..X_S; params k, l
  TVC,            // family X_1..X_L
  DeltaTVC,       // family X_1..X_L; param delta
  EdgeCover,      // temporal edge set
  SnapshotDS,     // family X_1..X_L
  TimelineDS,     // family X_1..X_S; params k, l
  OvertimeDS,     // vertex set
  PermanentDS,    // vertex set
  ReachDS,        // vertex set
};

struct CoverParams {
  int k = 1;
  int l = 1;
  int delta = 1;
};

// Windows [s, s + len - 1] clipped at the lifetime, s = 1..max(1, L - len + 1).
inline std::vector<std::pair<int, int>> sliding_windows(int lifetime, int len) {
  std::vector<std::pair<int, int>> out;
  int count = std::max(1, lifetime - len + 1);
  for (int s = 1; s <= count; ++s) out.push_back({s, std::min(lifetime, s + len - 1)});
  return out;
}

inline int family_size(CoverVariant v, int lifetime, const CoverParams& p) {
  switch (v) {
    case CoverVariant::Multistage:
    case CoverVariant::TVC:
    case CoverVariant::DeltaTVC:
    case CoverVariant::SnapshotDS: return lifetime;
    case CoverVariant::TimelineVC:
    case CoverVariant::TimelineDS: return static_cast<int>(sliding_windows(lifetime, p.l).size());
    default: return 1;
  }
}

namespace detail {

inline bool incident(const TemporalEdge& e, int v) { return e.u == v || e.v == v; }

inline bool is_temporal_path_set(const TemporalGraph& g, const std::vector<int>& es) {
  if (es.empty()) return false;
  for (int u = 0; u < g.num_vertices(); ++u)
    for (int v = 0; v < g.num_vertices(); ++v)
      for (auto& p : temporal_paths(g, u, v)) {
        if (p.size() != es.size()) continue;
        auto q = p;
        std::sort(q.begin(), q.end());
        if (q == es) return true;
      }
  return false;
}

}  // namespace detail

// Partition of all temporal edges into exactly k temporal paths.
inline bool oracle_tpcover(const TemporalGraph& g, int k) {
  check_ceiling(g);
  const int m = g.num_edges();
  if (k < 1) fail(ErrorCode::InvalidInput, "k must be positive");
  if (m < k) return false;
  std::vector<int> label(m, 0);
  // Canonical labelling: class i first appears before class i + 1.
  auto rec = [&](auto&& self, int i, int used) -> bool {
    if (i == m) {
      if (used != k) return false;
      for (int c = 0; c < k; ++c) {
        std::vector<int> es;
        for (int j = 0; j < m; ++j)
          if (label[j] == c) es.push_back(j);
        if (!detail::is_temporal_path_set(g, es)) return false;
      }
      return true;
    }
    for (int c = 0; c < std::min(k, used + 1); ++c) {
      label[i] = c;
      if (self(self, i + 1, std::max(used, c + 1))) return true;
    }
    return false;
  };
  return rec(rec, 0, 0);
}

// family: vertex sets (or one temporal edge set for EdgeCover).
inline bool oracle_cover(const TemporalGraph& g, CoverVariant variant, const CoverParams& p,
                         const std::vector<std::vector<int>>& family) {
  check_ceiling(g);
  const int lam = g.lifetime();
  const int n = g.num_vertices();
  auto need = [&](std::size_t k) {
    if (family.size() != k)
      fail(ErrorCode::InvalidInput, "cover expects " + std::to_string(k) + " sets, got " +
                                        std::to_string(family.size()));
  };
  auto in = [](const std::vector<int>& s, int x) { return std::find(s.begin(), s.end(), x) != s.end(); };
  auto dominated_at = [&](const std::vector<int>& s, int v, int t) {
    if (in(s, v)) return true;
    for (auto& e : g.edges())
      if (e.t == t && detail::incident(e, v)) {
        int u = e.u == v ? e.v : e.u;
        if (in(s, u)) return true;
      }
    return false;
  };
  switch (variant) {
    case CoverVariant::TPCover: return oracle_tpcover(g, p.k);
    case CoverVariant::Multistage: {
      need(static_cast<std::size_t>(lam));
      for (auto& e : g.edges())
        if (!in(family[e.t - 1], e.u) && !in(family[e.t - 1], e.v)) return false;
      for (int t = 0; t + 1 < lam; ++t) {
        int diff = 0;
        for (int v = 0; v < n; ++v)
          if (in(family[t], v) != in(family[t + 1], v)) ++diff;
        if (diff > p.l) return false;
      }
      return true;
    }
    case CoverVariant::TimelineVC: {
      auto w = sliding_windows(lam, p.l);
      need(w.size());
      for (auto& e : g.edges()) {
        bool ok = false;
        for (std::size_t s = 0; s < w.size(); ++s)
          if (w[s].first <= e.t && e.t <= w[s].second && (in(family[s], e.u) || in(family[s], e.v)))
            ok = true;
        if (!ok) return false;
      }
      for (int v = 0; v < n; ++v) {
        int c = 0;
        for (auto& s : family)
          if (in(s, v)) ++c;
        if (c > p.k) return false;
      }
      return true;
    }
    case CoverVariant::TVC: {
      need(static_cast<std::size_t>(lam));
      std::map<std::pair<int, int>, bool> covered;
      for (auto& e : g.edges()) {
        auto& c = covered[static_key(g, e)];
        if (in(family[e.t - 1], e.u) || in(family[e.t - 1], e.v)) c = true;
      }
      for (auto& [k, c] : covered)
        if (!c) return false;
      return true;
    }
    case CoverVariant::DeltaTVC: {
      need(static_cast<std::size_t>(lam));
      for (auto [a, b] : sliding_windows(lam, p.delta)) {
        std::map<std::pair<int, int>, bool> covered;
        for (auto& e : g.edges()) {
          if (e.t < a || e.t > b) continue;
          auto& c = covered[static_key(g, e)];
          if (in(family[e.t - 1], e.u) || in(family[e.t - 1], e.v)) c = true;
        }
        for (auto& [k, c] : covered)
          if (!c) return false;
      }
      return true;
    }
    case CoverVariant::EdgeCover: {
      need(1);
      for (auto& e : g.edges())
        for (int v : {e.u, e.v}) {
          bool ok = false;
          for (int x : family[0]) {
            auto& f = g.edges()[x];
            if (f.t == e.t && detail::incident(f, v)) ok = true;
          }
          if (!ok) return false;
        }
      return true;
    }
    case CoverVariant::SnapshotDS: {
      need(static_cast<std::size_t>(lam));
      for (int t = 1; t <= lam; ++t)
        for (int v = 0; v < n; ++v)
          if (!dominated_at(family[t - 1], v, t)) return false;
      return true;
    }
    case CoverVariant::TimelineDS: {
      auto w = sliding_windows(lam, p.l);
      need(w.size());
      for (int v = 0; v < n; ++v) {
        int c = 0;
        for (auto& s : family)
          if (in(s, v)) ++c;
        if (c > p.k) return false;
        for (int t = 1; t <= lam; ++t) {
          bool ok = false;
          for (std::size_t s = 0; s < w.size(); ++s)
            if (w[s].first <= t && t <= w[s].second && dominated_at(family[s], v, t)) ok = true;
          if (!ok) return false;
        }
      }
      return true;
    }
    case CoverVariant::OvertimeDS: {
      need(1);
      for (int v = 0; v < n; ++v) {
        bool ok = in(family[0], v);
        for (int t = 1; t <= lam && !ok; ++t) ok = dominated_at(family[0], v, t);
        if (!ok) return false;
      }
      return true;
    }
    case CoverVariant::PermanentDS: {
      need(1);
      for (int t = 1; t <= lam; ++t)
        for (int v = 0; v < n; ++v)
          if (!dominated_at(family[0], v, t)) return false;
      return true;
    }
    case CoverVariant::ReachDS: {
      need(1);
      for (int v = 0; v < n; ++v) {
        bool ok = in(family[0], v);
        for (int u : family[0])
          if (!ok && oracle_reachable(g, u, v)) ok = true;
        if (!ok) return false;
      }
      return true;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Random instances: counter-based splitmix64, identical on every platform.

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Deterministic stream: the i-th draw depends only on (seed, i).
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}
  std::uint64_t next() { return splitmix64(seed_ ^ splitmix64(counter_++)); }
  double uniform() { return static_cast<double>(next() >> 11) * (1.0 / 9007199254740992.0); }
  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

struct RandomConfig {
  int n = 4;
  int lifetime = 3;
  double p = 0.5;
  bool directed = false;
  bool strict = true;
  std::uint64_t seed = 0;
};

inline std::string random_vertex_name(int i) { return "v" + std::to_string(i); }

inline TemporalGraph random_instance(const RandomConfig& c) {
  if (c.n < 0 || c.lifetime < 0 || c.p < 0 || c.p > 1)
    fail(ErrorCode::InvalidInput, "random instance needs n, lifetime >= 0 and p in [0,1]");
  CounterRng rng(c.seed);
  std::vector<std::string> names;
  for (int i = 0; i < c.n; ++i) names.push_back(random_vertex_name(i));
  std::vector<EdgeSpec> edges;
  for (int t = 1; t <= c.lifetime; ++t)
    for (int a = 0; a < c.n; ++a)
      for (int b = 0; b < c.n; ++b) {
        if (a == b || (!c.directed && b < a)) continue;
        if (rng.uniform() < c.p) edges.push_back({names[a], names[b], t});
      }
  return TemporalGraph(names, edges, c.directed, c.strict);
}

}  // namespace tempo
