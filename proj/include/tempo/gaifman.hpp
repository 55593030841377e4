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
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tempo/decomp.hpp"
#include "tempo/encodings.hpp"
#include "tempo/structure.hpp"
#include "tempo/tgraph.hpp"

namespace tempo {

inline StaticGraph gaifman_graph(const RelationalStructure& rs) {
  StaticGraph h(rs.ids(), false);
  for (auto& [name, r] : rs.relations()) {
    if (r.arity < 2) continue;
    for (auto& t : r.tuples)
      for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = i + 1; j < t.size(); ++j) h.add_edge(t[i], t[j]);
  }
  return h;
}

struct BagBound {
  int size = 0;
  long bound = 0;
  bool holds = true;
};

struct TransferResult {
  TreeDecomposition td;   // bags index the Gaifman graph's vertices
  StaticGraph host;       // Gaifman graph the decomposition is for
  Verdict validation;
  std::vector<BagBound> bags;

  bool bounds_hold() const {
    return std::all_of(bags.begin(), bags.end(), [](const BagBound& b) { return b.holds; });
  }
  bool ok() const { return validation.ok && bounds_hold(); }
};

namespace detail {

inline void finish_transfer(TransferResult& r, const std::function<long(int)>& bound_for) {
  r.validation = validate_tree_decomposition(r.host, r.td);
  for (int i = 0; i < r.td.size(); ++i) {
    BagBound b;
    b.size = static_cast<int>(r.td.bags[i].size());
    b.bound = bound_for(i);
    b.holds = b.size <= b.bound;
    r.bags.push_back(b);
  }
}

inline void require_valid_footprint_td(const TemporalGraph& g, const TreeDecomposition& td) {
  auto v = validate_tree_decomposition(footprint(g), td);
  if (!v) fail(ErrorCode::InvalidInput, "footprint decomposition violates clause " + v.clause + ": " + v.detail);
}

}  // namespace detail

// B'_i = B_i + temporal edges inside B_i + all time elements.
inline TransferResult transfer_td_lifetime(const TemporalGraph& g, const TreeDecomposition& fp) {
  detail::require_valid_footprint_td(g, fp);
  const int n = g.num_vertices(), m = g.num_edges(), lam = g.lifetime();
  TransferResult r;
  r.host = gaifman_graph(encode_lifetime(g));
  r.td.tree = fp.tree;
  std::vector<long> base;
  for (auto& b : fp.bags) {
    std::vector<int> nb = b;
    for (int i = 0; i < m; ++i) {
      auto& e = g.edges()[i];
      if (std::binary_search(b.begin(), b.end(), e.u) && std::binary_search(b.begin(), b.end(), e.v))
        nb.push_back(n + i);
    }
    for (int t = 0; t < lam; ++t) nb.push_back(n + m + t);
    std::sort(nb.begin(), nb.end());
    r.td.bags.push_back(nb);
    base.push_back(static_cast<long>(b.size()));
  }
  detail::finish_transfer(r, [&](int i) { return lam + lam * base[i] * base[i] + base[i]; });
  return r;
}

// B'_i = B_i + temporal edges with an endpoint in B_i.
inline TransferResult transfer_td_degree(const TemporalGraph& g, const TreeDecomposition& fp) {
  detail::require_valid_footprint_td(g, fp);
  const int n = g.num_vertices(), m = g.num_edges();
  const long dt = max_temporal_degree(g);
  TransferResult r;
  r.host = gaifman_graph(encode_degree(g));
  r.td.tree = fp.tree;
  std::vector<long> base;
  for (auto& b : fp.bags) {
    std::vector<int> nb = b;
    for (int i = 0; i < m; ++i) {
      auto& e = g.edges()[i];
      if (std::binary_search(b.begin(), b.end(), e.u) || std::binary_search(b.begin(), b.end(), e.v))
        nb.push_back(n + i);
    }
    std::sort(nb.begin(), nb.end());
    r.td.bags.push_back(nb);
    base.push_back(static_cast<long>(b.size()));
  }
  detail::finish_transfer(r, [&](int i) { return (dt + 1) * base[i]; });
  return r;
}

// B_t = Gamma_t + edges at t + bag nodes t and t+1, in time order.
inline TransferResult transfer_pd_vim(const TemporalGraph& g) {
  const int n = g.num_vertices(), m = g.num_edges(), lam = g.lifetime();
  auto vim = vim_decomposition(g);
  TransferResult r;
  r.host = gaifman_graph(encode_vim(g));
  std::vector<long> gamma;
  for (int t = 1; t <= lam; ++t) {
    std::vector<int> b = vim.bags[t - 1];
    for (int i = 0; i < m; ++i)
      if (g.edges()[i].t == t) b.push_back(n + i);
    b.push_back(n + m + t - 1);
    if (t < lam) b.push_back(n + m + t);
    std::sort(b.begin(), b.end());
    r.td.bags.push_back(b);
    if (t > 1) r.td.tree.push_back({t - 2, t - 1});
    gamma.push_back(static_cast<long>(vim.bags[t - 1].size()));
  }
  int before = r.td.size();
  detail::cover_missing(r.td, r.host.size());
  for (int i = before; i < r.td.size(); ++i) gamma.push_back(1);
  detail::finish_transfer(r, [&](int i) { return 2 + gamma[i] + gamma[i] * gamma[i]; });
  return r;
}

// B_i = Gamma_i + edges placed in node i + node i and its parent.
inline TransferResult transfer_td_tim(const TemporalGraph& g, const TimDecomposition& d) {
  auto v = validate_tim(g, d);
  if (!v) fail(ErrorCode::InvalidInput, "TIM decomposition violates clause " + v.clause + ": " + v.detail);
  const int n = g.num_vertices(), m = g.num_edges();
  TransferResult r;
  r.host = gaifman_graph(encode_tim(g, d));
  auto parent = detail::tim_parents(d);
  std::vector<long> gamma;
  std::vector<int> roots;
  for (int i = 0; i < d.size(); ++i) {
    std::vector<int> b = d.bags[i];
    for (int k = 0; k < m; ++k) {
      auto& e = g.edges()[k];
      if (e.t == d.tau[i] && std::binary_search(d.bags[i].begin(), d.bags[i].end(), e.u) &&
          std::binary_search(d.bags[i].begin(), d.bags[i].end(), e.v))
        b.push_back(n + k);
    }
    b.push_back(n + m + i);
    if (parent[i] >= 0) {
      b.push_back(n + m + parent[i]);
      r.td.tree.push_back({i, parent[i]});
    } else {
      roots.push_back(i);
    }
    std::sort(b.begin(), b.end());
    r.td.bags.push_back(b);
    gamma.push_back(static_cast<long>(d.bags[i].size()));
  }
  for (std::size_t k = 1; k < roots.size(); ++k) r.td.tree.push_back({roots[k - 1], roots[k]});
  int before = r.td.size();
  detail::cover_missing(r.td, r.host.size());
  for (int i = before; i < r.td.size(); ++i) gamma.push_back(1);
  detail::finish_transfer(r, [&](int i) { return 2 + gamma[i] + gamma[i] * gamma[i]; });
  return r;
}

struct DegreeBoundReport {
  int max_gaifman_degree = 0;
  int bound = 0;
  bool holds = true;
};

inline DegreeBoundReport degree_bound_check(const TemporalGraph& g) {
  DegreeBoundReport rep;
  rep.max_gaifman_degree = gaifman_graph(encode_degree(g)).max_degree();
  rep.bound = 2 * max_temporal_degree(g);
  rep.holds = rep.max_gaifman_degree <= rep.bound;
  return rep;
}

struct MinorModel {
  std::vector<int> branch;                               // minor vertex -> host vertex
  std::map<std::pair<int, int>, std::vector<int>> paths; // minor edge -> host path
};

struct MinorLimits {
  int max_vertices = 10;
  int max_q = 5;
  int max_r = 2;
};

// Exhaustive search for a depth-r topological model of K_q in host.
inline std::optional<MinorModel> has_topological_minor(const StaticGraph& host, int q, int r,
                                                       const MinorLimits& lim = {}) {
  const int n = host.size();
  if (n > lim.max_vertices || q > lim.max_q || r > lim.max_r)
    fail(ErrorCode::TooLarge, "minor search limited to |V|<=" + std::to_string(lim.max_vertices) +
                                  ", q<=" + std::to_string(lim.max_q) + ", r<=" +
                                  std::to_string(lim.max_r));
  if (q <= 0) return MinorModel{};
  if (q > n) return std::nullopt;
  auto adj = host.neighbours();
  std::vector<int> candidates;
  for (int v = 0; v < n; ++v)
    if (static_cast<int>(adj[v].size()) >= q - 1) candidates.push_back(v);
  if (static_cast<int>(candidates.size()) < q) return std::nullopt;

  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < q; ++i)
    for (int j = i + 1; j < q; ++j) pairs.push_back({i, j});
  MinorModel model;
  std::vector<bool> used(n, false);  // branch vertices and path interiors
  const int max_len = r + 1;

  std::function<bool(std::size_t)> route = [&](std::size_t k) -> bool {
    if (k == pairs.size()) return true;
    int s = model.branch[pairs[k].first], z = model.branch[pairs[k].second];
    std::vector<int> path{s};
    std::function<bool(int)> walk = [&](int x) -> bool {
      for (int y : adj[x]) {
        if (y == z) {
          path.push_back(z);
          model.paths[pairs[k]] = path;
          if (route(k + 1)) return true;
          path.pop_back();
          continue;
        }
        if (used[y] || static_cast<int>(path.size()) >= max_len) continue;
        used[y] = true;
        path.push_back(y);
        if (walk(y)) return true;
        path.pop_back();
        used[y] = false;
      }
      return false;
    };
    if (walk(s)) return true;
    model.paths.erase(pairs[k]);
    return false;
  };

  std::function<bool(std::size_t, int)> choose = [&](std::size_t start, int need) -> bool {
    if (need == 0) return route(0);
    for (std::size_t i = start; i < candidates.size(); ++i) {
      int v = candidates[i];
      model.branch.push_back(v);
      used[v] = true;
      if (choose(i + 1, need - 1)) return true;
      used[v] = false;
      model.branch.pop_back();
    }
    return false;
  };
  if (choose(0, q)) return model;
  return std::nullopt;
}

struct SparsityProfile {
  std::map<int, int> d;  // radius -> excluded clique size
  int at(int r) const {
    auto it = d.find(r);
    if (it != d.end()) return it->second;
    if (d.empty()) fail(ErrorCode::InvalidInput, "empty sparsity profile");
    return d.rbegin()->second;
  }
  static SparsityProfile constant(int value) {
    SparsityProfile p;
    p.d[0] = value;
    return p;
  }
};

struct NowhereDenseReport {
  int radius = 0;
  int clique = 0;       // g(r) = d(ceil(r/2)) + 2 Lambda
  int host_size = 0;
  bool vacuous = false; // clique larger than the host
  bool holds = true;    // the clique is not a depth-r topological minor
  std::optional<MinorModel> counterexample;
};

inline NowhereDenseReport nowhere_dense_witness_check(const TemporalGraph& g,
                                                      const SparsityProfile& profile, int r,
                                                      int max_host = 14) {
  NowhereDenseReport rep;
  rep.radius = r;
  rep.clique = profile.at((r + 1) / 2) + 2 * g.lifetime();
  auto host = gaifman_graph(encode_lifetime(g));
  rep.host_size = host.size();
  if (rep.clique > host.size()) {
    rep.vacuous = true;
    return rep;
  }
  MinorLimits lim{max_host, host.size(), std::max(r, 2)};
  rep.counterexample = has_topological_minor(host, rep.clique, r, lim);
  rep.holds = !rep.counterexample.has_value();
  return rep;
}

inline std::string export_edge_list(const StaticGraph& h) {
  std::ostringstream out;
  for (auto [a, b] : h.edges()) out << h.names()[a] << ' ' << h.names()[b] << '\n';
  return out.str();
}

inline std::string export_dot(const StaticGraph& h, const std::string& name = "gaifman") {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (auto& v : h.names()) out << "  \"" << v << "\";\n";
  for (auto [a, b] : h.edges())
    out << "  \"" << h.names()[a] << "\" -- \"" << h.names()[b] << "\";\n";
  out << "}\n";
  return out.str();
}

}  // namespace tempo
