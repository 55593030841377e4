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
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tempo/error.hpp"
#include "tempo/tgraph.hpp"

namespace tempo {

struct Verdict {
  bool ok = true;
  std::string clause;  // empty when ok
  std::string detail;

  static Verdict accept() { return {}; }
  static Verdict reject(std::string clause, std::string detail) {
    return {false, std::move(clause), std::move(detail)};
  }
  explicit operator bool() const { return ok; }
};

struct VimDecomposition {
  std::vector<std::vector<int>> bags;  // bags[t-1], sorted vertex indices

  int width() const {
    int w = 0;
    for (auto& b : bags) w = std::max(w, static_cast<int>(b.size()));
    return w;
  }
  friend bool operator==(const VimDecomposition&, const VimDecomposition&) = default;
};

struct TimDecomposition {
  std::vector<std::vector<int>> bags;          // node -> sorted vertex indices
  std::vector<int> tau;                        // node -> time label
  std::vector<std::pair<int, int>> tree_edges; // (later node, earlier node)

  int size() const { return static_cast<int>(bags.size()); }
  int width() const {
    int w = 0;
    for (auto& b : bags) w = std::max(w, static_cast<int>(b.size()));
    return w;
  }
  // Number of connected components of the tree-edge graph.
  int components() const;
};

// Bags index into the vertex list of the decomposed graph.
struct TreeDecomposition {
  std::vector<std::vector<int>> bags;
  std::vector<std::pair<int, int>> tree;

  int size() const { return static_cast<int>(bags.size()); }
  int width() const {
    int w = 0;
    for (auto& b : bags) w = std::max(w, static_cast<int>(b.size()));
    return w - 1;
  }
  bool is_path() const {
    if (static_cast<int>(tree.size()) + 1 != size() && size() > 0) return false;
    for (auto [a, b] : tree)
      if (std::abs(a - b) != 1) return false;
    return true;
  }
};

using PathDecomposition = TreeDecomposition;

namespace detail {

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

inline bool sorted_intersect(const std::vector<int>& a, const std::vector<int>& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) ++i;
    else ++j;
  }
  return false;
}

inline int count_components(int n, const std::vector<std::pair<int, int>>& edges) {
  UnionFind uf(n);
  for (auto [a, b] : edges) uf.unite(a, b);
  int c = 0;
  for (int i = 0; i < n; ++i)
    if (uf.find(i) == i) ++c;
  return c;
}

// Some cycle of an undirected simple graph as a node list, or empty.
inline std::vector<int> find_cycle(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> parent(n, -1), state(n, 0);
  for (int s = 0; s < n; ++s) {
    if (state[s]) continue;
    std::vector<std::pair<int, std::size_t>> stack{{s, 0}};
    state[s] = 1;
    while (!stack.empty()) {
      auto& [x, i] = stack.back();
      if (i == adj[x].size()) {
        state[x] = 2;
        stack.pop_back();
        continue;
      }
      int y = adj[x][i++];
      if (y == parent[x]) continue;
      if (state[y] == 1) {
        std::vector<int> cyc{y};
        for (int z = x; z != y; z = parent[z]) cyc.push_back(z);
        return cyc;
      }
      if (state[y] == 0) {
        parent[y] = x;
        state[y] = 1;
        stack.push_back({y, 0});
      }
    }
  }
  return {};
}

// Tree edges implied by clause (iii) for the given bags.
inline std::vector<std::pair<int, int>> tim_edges_for(const std::vector<std::vector<int>>& bags,
                                                      const std::vector<int>& tau) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < static_cast<int>(bags.size()); ++i)
    for (int j = 0; j < static_cast<int>(bags.size()); ++j)
      if (tau[i] == tau[j] + 1 && sorted_intersect(bags[i], bags[j])) out.push_back({i, j});
  return out;
}

// Nodes sorted by (time, smallest vertex).
inline TimDecomposition make_tim(std::vector<std::pair<int, std::vector<int>>> nodes) {
  for (auto& [t, b] : nodes) std::sort(b.begin(), b.end());
  std::sort(nodes.begin(), nodes.end());
  TimDecomposition d;
  for (auto& [t, b] : nodes) {
    d.tau.push_back(t);
    d.bags.push_back(b);
  }
  d.tree_edges = tim_edges_for(d.bags, d.tau);
  return d;
}

}  // namespace detail

inline int TimDecomposition::components() const {
  return detail::count_components(size(), tree_edges);
}

inline VimDecomposition vim_decomposition(const TemporalGraph& g) {
  VimDecomposition d;
  d.bags.assign(g.lifetime(), {});
  for (int v = 0; v < g.num_vertices(); ++v) {
    auto a = activity_interval(g, v);
    if (!a) continue;
    for (int t = a->tmin; t <= a->tmax; ++t) d.bags[t - 1].push_back(v);
  }
  return d;
}

// Snapshot components as initial bags, then merge same-time bags lying on a
// cycle of the bag-adjacency graph until it is a forest.
inline TimDecomposition tim_decomposition(const TemporalGraph& g) {
  const int n = g.num_vertices();
  const int lam = g.lifetime();
  std::vector<std::pair<int, std::vector<int>>> nodes;
  for (int t = 1; t <= lam; ++t) {
    detail::UnionFind uf(n);
    for (auto& e : g.edges())
      if (e.t == t) uf.unite(e.u, e.v);
    std::map<int, std::vector<int>> groups;
    for (int v = 0; v < n; ++v) groups[uf.find(v)].push_back(v);
    for (auto& [r, b] : groups) nodes.push_back({t, b});
  }
  while (true) {
    auto d = detail::make_tim(nodes);
    auto cyc = detail::find_cycle(d.size(), d.tree_edges);
    if (cyc.empty()) return d;
    std::map<int, std::vector<int>> by_time;
    for (int x : cyc) by_time[d.tau[x]].push_back(x);
    std::set<int> drop;
    std::vector<std::pair<int, std::vector<int>>> merged;
    for (auto& [t, xs] : by_time) {
      if (xs.size() < 2) continue;
      std::vector<int> u;
      for (int x : xs) {
        drop.insert(x);
        u.insert(u.end(), d.bags[x].begin(), d.bags[x].end());
      }
      merged.push_back({t, u});
    }
    nodes.clear();
    for (int i = 0; i < d.size(); ++i)
      if (!drop.count(i)) nodes.push_back({d.tau[i], d.bags[i]});
    nodes.insert(nodes.end(), merged.begin(), merged.end());
  }
}

inline Verdict validate_tim(const TemporalGraph& g, const TimDecomposition& d) {
  const int lam = g.lifetime();
  if (d.tau.size() != d.bags.size())
    return Verdict::reject("shape", "tau and bags differ in length");
  for (int i = 0; i < d.size(); ++i) {
    if (d.tau[i] < 1 || d.tau[i] > lam)
      return Verdict::reject("shape", "node " + std::to_string(i) + " has time outside [1,L]");
    for (int v : d.bags[i])
      if (v < 0 || v >= g.num_vertices())
        return Verdict::reject("shape", "node " + std::to_string(i) + " holds unknown vertex");
  }
  for (int v = 0; v < g.num_vertices(); ++v)
    for (int t = 1; t <= lam; ++t) {
      int hits = 0;
      for (int i = 0; i < d.size(); ++i)
        if (d.tau[i] == t && std::binary_search(d.bags[i].begin(), d.bags[i].end(), v)) ++hits;
      if (hits != 1)
        return Verdict::reject("i", "vertex " + g.name(v) + " in " + std::to_string(hits) +
                                        " bags at time " + std::to_string(t));
    }
  for (auto& e : g.edges()) {
    bool found = false;
    for (int i = 0; i < d.size() && !found; ++i)
      found = d.tau[i] == e.t && std::binary_search(d.bags[i].begin(), d.bags[i].end(), e.u) &&
              std::binary_search(d.bags[i].begin(), d.bags[i].end(), e.v);
    if (!found)
      return Verdict::reject("ii", "edge " + g.name(e.u) + g.name(e.v) + "@" +
                                       std::to_string(e.t) + " not inside a bag");
  }
  auto expect = detail::tim_edges_for(d.bags, d.tau);
  std::set<std::pair<int, int>> a(expect.begin(), expect.end());
  std::set<std::pair<int, int>> b(d.tree_edges.begin(), d.tree_edges.end());
  if (a != b) return Verdict::reject("iii", "tree edges differ from intersecting consecutive bags");
  if (!detail::find_cycle(d.size(), d.tree_edges).empty())
    return Verdict::reject("iii", "bag graph has a cycle");
  return Verdict::accept();
}

namespace detail {

inline void set_partitions(int n, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> block(n, 0);
  std::function<void(int, int)> rec = [&](int i, int used) {
    if (i == n) {
      visit(block);
      return;
    }
    for (int b = 0; b <= used; ++b) {
      block[i] = b;
      rec(i + 1, std::max(used, b + 1));
    }
  };
  if (n == 0) {
    visit(block);
    return;
  }
  block[0] = 0;
  rec(1, 1);
}

}  // namespace detail

inline int tim_width_exact_tiny(const TemporalGraph& g, int max_n = 4, int max_lambda = 3) {
  const int n = g.num_vertices();
  const int lam = g.lifetime();
  if (n > max_n || lam > max_lambda)
    fail(ErrorCode::TooLarge, "exact TIM width limited to n<=" + std::to_string(max_n) +
                                  ", L<=" + std::to_string(max_lambda));
  if (lam == 0) return 0;
  std::vector<std::vector<std::vector<int>>> parts;
  detail::set_partitions(n, [&](const std::vector<int>& p) {
    std::map<int, std::vector<int>> g2;
    for (int v = 0; v < n; ++v) g2[p[v]].push_back(v);
    std::vector<std::vector<int>> blocks;
    for (auto& [k, b] : g2) blocks.push_back(b);
    parts.push_back(blocks);
  });
  int best = n + 1;
  std::vector<int> choice(lam, 0);
  std::function<void(int)> rec = [&](int t) {
    if (t == lam) {
      std::vector<std::pair<int, std::vector<int>>> nodes;
      int w = 0;
      for (int s = 0; s < lam; ++s)
        for (auto& b : parts[choice[s]]) {
          nodes.push_back({s + 1, b});
          w = std::max(w, static_cast<int>(b.size()));
        }
      if (w >= best) return;
      auto d = detail::make_tim(nodes);
      if (validate_tim(g, d)) best = w;
      return;
    }
    for (int c = 0; c < static_cast<int>(parts.size()); ++c) {
      choice[t] = c;
      rec(t + 1);
    }
  };
  rec(0);
  return best;
}

inline Verdict validate_tree_decomposition(const StaticGraph& sg, const TreeDecomposition& td) {
  const int m = td.size();
  const int n = sg.size();
  if (m == 0) {
    if (n == 0) return Verdict::accept();
    return Verdict::reject("i", "no bags");
  }
  for (auto [a, b] : td.tree)
    if (a < 0 || b < 0 || a >= m || b >= m || a == b)
      return Verdict::reject("tree", "bad tree edge");
  if (static_cast<int>(td.tree.size()) != m - 1 || detail::count_components(m, td.tree) != 1)
    return Verdict::reject("tree", "bag graph is not a tree");
  std::vector<std::vector<int>> holders(n);
  for (int i = 0; i < m; ++i)
    for (int x : td.bags[i]) {
      if (x < 0 || x >= n) return Verdict::reject("i", "bag holds unknown element");
      holders[x].push_back(i);
    }
  for (int x = 0; x < n; ++x)
    if (holders[x].empty()) return Verdict::reject("i", "element " + sg.names()[x] + " uncovered");
  for (auto [a, b] : sg.edges()) {
    bool found = false;
    for (int i : holders[a])
      if (std::find(td.bags[i].begin(), td.bags[i].end(), b) != td.bags[i].end()) found = true;
    if (!found)
      return Verdict::reject("ii", "edge " + sg.names()[a] + "-" + sg.names()[b] + " uncovered");
  }
  for (int x = 0; x < n; ++x) {
    std::set<int> hs(holders[x].begin(), holders[x].end());
    std::vector<std::pair<int, int>> sub;
    std::map<int, int> idx;
    for (int h : hs) idx[h] = static_cast<int>(idx.size());
    for (auto [a, b] : td.tree)
      if (hs.count(a) && hs.count(b)) sub.push_back({idx[a], idx[b]});
    if (detail::count_components(static_cast<int>(hs.size()), sub) != 1)
      return Verdict::reject("iii", "bags of " + sg.names()[x] + " are disconnected");
  }
  return Verdict::accept();
}

// Greedy min-fill elimination; ties go to the lexicographically smallest name.
inline TreeDecomposition tree_decomposition_footprint(const StaticGraph& sg) {
  const int n = sg.size();
  TreeDecomposition td;
  if (n == 0) return td;
  std::vector<std::set<int>> adj(n);
  for (auto [a, b] : sg.edges()) {
    adj[a].insert(b);
    adj[b].insert(a);
  }
  std::vector<bool> gone(n, false);
  std::vector<int> order, pos(n);
  std::vector<std::vector<int>> later(n);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    long best_fill = 0;
    for (int v = 0; v < n; ++v) {
      if (gone[v]) continue;
      long fill = 0;
      std::vector<int> nb(adj[v].begin(), adj[v].end());
      for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j)
          if (!adj[nb[i]].count(nb[j])) ++fill;
      if (best < 0 || fill < best_fill ||
          (fill == best_fill && sg.names()[v] < sg.names()[best])) {
        best = v;
        best_fill = fill;
      }
    }
    std::vector<int> nb(adj[best].begin(), adj[best].end());
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        adj[nb[i]].insert(nb[j]);
        adj[nb[j]].insert(nb[i]);
      }
    for (int x : nb) adj[x].erase(best);
    later[best] = nb;
    gone[best] = true;
    pos[best] = step;
    order.push_back(best);
  }
  td.bags.resize(n);
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    std::vector<int> bag = later[v];
    bag.push_back(v);
    std::sort(bag.begin(), bag.end());
    td.bags[i] = bag;
  }
  std::vector<int> roots;
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    if (later[v].empty()) {
      roots.push_back(i);
      continue;
    }
    int p = n;
    for (int x : later[v]) p = std::min(p, pos[x]);
    td.tree.push_back({i, p});
  }
  for (std::size_t r = 1; r < roots.size(); ++r) td.tree.push_back({roots[r - 1], roots[r]});
  return td;
}

// Exact treewidth by dynamic programming over elimination-order prefixes.
inline int treewidth_exact_tiny(const StaticGraph& sg, int max_n = 8) {
  const int n = sg.size();
  if (n > max_n) fail(ErrorCode::TooLarge, "exact treewidth limited to n<=" + std::to_string(max_n));
  if (n == 0) return -1;
  std::vector<unsigned> nb(n, 0);
  for (auto [a, b] : sg.edges()) {
    nb[a] |= 1u << b;
    nb[b] |= 1u << a;
  }
  // q(S, v): vertices outside S+v reachable from v through S.
  auto q = [&](unsigned s, int v) {
    unsigned seen = 1u << v, frontier = 1u << v, out = 0;
    while (frontier) {
      int x = __builtin_ctz(frontier);
      frontier &= frontier - 1;
      unsigned nx = nb[x] & ~seen;
      seen |= nx;
      out |= nx & ~s;
      frontier |= nx & s;
    }
    return __builtin_popcount(out);
  };
  const unsigned full = (1u << n) - 1;
  std::vector<int> tw(full + 1, n);
  tw[0] = -1;
  for (unsigned s = 1; s <= full; ++s)
    for (int v = 0; v < n; ++v) {
      if (!(s >> v & 1)) continue;
      unsigned rest = s & ~(1u << v);
      tw[s] = std::min(tw[s], std::max(tw[rest], q(rest, v)));
    }
  return tw[full];
}

namespace detail {

// Singleton bags for vertices that no bag covers, appended as a path tail.
inline void cover_missing(TreeDecomposition& td, int n) {
  std::vector<bool> seen(n, false);
  for (auto& b : td.bags)
    for (int x : b) seen[x] = true;
  for (int x = 0; x < n; ++x) {
    if (seen[x]) continue;
    td.bags.push_back({x});
    int i = td.size() - 1;
    if (i > 0) td.tree.push_back({i - 1, i});
  }
}

}  // namespace detail

inline PathDecomposition path_decomposition_from_vim(const TemporalGraph& g) {
  auto vim = vim_decomposition(g);
  PathDecomposition pd;
  pd.bags = vim.bags;
  for (int i = 1; i < pd.size(); ++i) pd.tree.push_back({i - 1, i});
  detail::cover_missing(pd, g.num_vertices());
  auto v = validate_tree_decomposition(footprint(g), pd);
  if (!v) fail(ErrorCode::ValidationFailure, "VIM path decomposition: clause " + v.clause + ", " + v.detail);
  return pd;
}

namespace detail {

// Parent of every TIM node (toward the lowest node of its component), -1 for roots.
inline std::vector<int> tim_parents(const TimDecomposition& d) {
  std::vector<std::vector<int>> adj(d.size());
  for (auto [a, b] : d.tree_edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> parent(d.size(), -2);
  for (int r = 0; r < d.size(); ++r) {
    if (parent[r] != -2) continue;
    parent[r] = -1;
    std::vector<int> stack{r};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : adj[x])
        if (parent[y] == -2) {
          parent[y] = x;
          stack.push_back(y);
        }
    }
  }
  return parent;
}

}  // namespace detail

inline TreeDecomposition tree_decomposition_from_tim(const TemporalGraph& g,
                                                     const TimDecomposition& d) {
  auto v = validate_tim(g, d);
  if (!v) fail(ErrorCode::InvalidInput, "TIM decomposition violates clause " + v.clause + ": " + v.detail);
  TreeDecomposition td;
  td.bags = d.bags;
  auto parent = detail::tim_parents(d);
  std::vector<int> roots;
  for (int i = 0; i < d.size(); ++i) {
    if (parent[i] < 0) roots.push_back(i);
    else td.tree.push_back({i, parent[i]});
  }
  for (std::size_t r = 1; r < roots.size(); ++r) td.tree.push_back({roots[r - 1], roots[r]});
  detail::cover_missing(td, g.num_vertices());
  auto check = validate_tree_decomposition(footprint(g), td);
  if (!check) fail(ErrorCode::ValidationFailure, "TIM tree decomposition: clause " + check.clause);
  return td;
}

}  // namespace tempo
