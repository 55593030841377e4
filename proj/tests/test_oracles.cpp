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

#include <gtest/gtest.h>

#include <cstdlib>

#include "tempo/oracles.hpp"
#include "tempo/verify.hpp"

namespace tempo {
namespace {

TemporalGraph graph(std::vector<EdgeSpec> edges, bool directed = false, bool strict = true) {
  return TemporalGraph(std::nullopt, edges, directed, strict);
}
TemporalGraph e1() { return graph({{"a", "b", 1}, {"b", "c", 2}}); }
TemporalGraph triangle() { return graph({{"a", "b", 1}, {"b", "c", 2}, {"a", "c", 3}}); }
TemporalGraph diamond() { return graph({{"a", "b", 1}, {"b", "d", 2}, {"a", "c", 1}, {"c", "d", 2}}); }

ErrorCode code_of_invalid() {
  RandomConfig c;
  c.p = 1.5;
  try {
    random_instance(c);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Infeasible;
}

int V(const TemporalGraph& g, const std::string& n) { return g.require_vertex(n); }

TEST(Reachable, Examples) {
  auto g = e1();
  EXPECT_TRUE(oracle_reachable(g, "a", "c"));
  EXPECT_FALSE(oracle_reachable(g, "c", "a"));
  PathRestriction r;
  r.vertices = vertex_mask(g, {V(g, "a"), V(g, "c")});
  EXPECT_FALSE(oracle_reachable(g, "a", "c", r));
  PathRestriction wait;
  wait.max_wait = 0;
  EXPECT_FALSE(oracle_reachable(g, "a", "c", wait));
  wait.max_wait = 1;
  EXPECT_TRUE(oracle_reachable(g, "a", "c", wait));
}

TEST(Disjoint, Examples) {
  auto d = diamond();
  EXPECT_TRUE(oracle_disjoint_paths(d, V(d, "a"), V(d, "d"), DisjointVariant::Edge));
  EXPECT_TRUE(oracle_disjoint_paths(d, V(d, "a"), V(d, "d"), DisjointVariant::VertexInterior));
  auto g = e1();
  EXPECT_FALSE(oracle_disjoint_paths(g, V(g, "a"), V(g, "c"), DisjointVariant::Edge));
  EXPECT_FALSE(oracle_disjoint_paths(g, V(g, "a"), V(g, "c"), DisjointVariant::VertexInterior));
}

TEST(Components, Examples) {
  auto twice = graph({{"a", "b", 1}, {"a", "b", 2}});
  auto open = oracle_components(twice, ComponentVariant::Open);
  EXPECT_NE(std::find(open.begin(), open.end(), std::vector<int>{0, 1}), open.end());
  EXPECT_TRUE(oracle_is_component(twice, {0, 1}, ComponentVariant::Open));
  EXPECT_FALSE(oracle_is_component(twice, {0}, ComponentVariant::Open));
  auto empty = TemporalGraph(std::vector<std::string>{"a", "b"}, {}, false, true);
  auto singles = oracle_components(empty, ComponentVariant::Open);
  std::sort(singles.begin(), singles.end());
  EXPECT_EQ(singles, (std::vector<std::vector<int>>{{0}, {1}}));
}

TEST(Separators, Examples) {
  auto g = e1();
  auto r = oracle_min_separator(g, V(g, "a"), V(g, "c"), SeparatorVariant::Vertex);
  EXPECT_TRUE(r.verdict);
  EXPECT_EQ(r.value, 1);
  EXPECT_EQ(r.witness, (std::vector<std::vector<std::string>>{{"b"}}));
  auto tri = triangle();
  auto none = oracle_min_separator(tri, V(tri, "a"), V(tri, "c"), SeparatorVariant::Vertex);
  EXPECT_FALSE(none.verdict);
  EXPECT_FALSE(none.value.has_value());
  auto te = oracle_min_separator(tri, V(tri, "a"), V(tri, "c"), SeparatorVariant::TemporalEdge);
  EXPECT_EQ(te.value, 2);
}

TEST(Families, Examples) {
  auto g = e1();
  EXPECT_TRUE(oracle_spanner(g, {0, 1, 2}));
  EXPECT_FALSE(oracle_spanner(g, {V(g, "a"), V(g, "c")}));
  EXPECT_TRUE(oracle_exploration(g, ExplorationVariant::Vertex));
  EXPECT_TRUE(oracle_exploration(g, ExplorationVariant::Edge));
  auto tri = graph({{"a", "b", 1}, {"b", "c", 1}, {"a", "c", 1}});
  EXPECT_TRUE(oracle_colouring(tri, 3));
  EXPECT_FALSE(oracle_colouring(tri, 2));
  auto m = graph({{"a", "b", 1}, {"a", "b", 3}});
  EXPECT_EQ(oracle_max_matching(m, MatchingVariant::Delta, 2).value, 2);
  EXPECT_EQ(oracle_max_matching(m, MatchingVariant::Delta, 3).value, 1);
  EXPECT_TRUE(oracle_tpcover(g, 1));
}

TEST(RandomInstance, Examples) {
  RandomConfig c;
  c.n = 3;
  c.lifetime = 2;
  c.p = 1;
  c.seed = 0;
  EXPECT_EQ(random_instance(c).num_edges(), 6);
  c.p = 0;
  EXPECT_EQ(random_instance(c).num_edges(), 0);
  EXPECT_EQ(random_instance(c).num_vertices(), 3);
  c.directed = true;
  c.p = 1;
  EXPECT_EQ(random_instance(c).num_edges(), 12);
  EXPECT_EQ(code_of_invalid(), ErrorCode::InvalidInput);
}

TEST(RandomInstance, Deterministic) {
  EXPECT_EQ(splitmix64(0), 0xe220a8397b1dcdafULL);
  RandomConfig c;
  c.n = 5;
  c.lifetime = 4;
  c.p = 0.4;
  int differ = 0;
  for (std::uint64_t s = 0; s < 20; ++s) {
    c.seed = s;
    auto a = random_instance(c), b = random_instance(c);
    EXPECT_EQ(print_tg(a), print_tg(b));
    c.seed = s + 100;
    if (print_tg(random_instance(c)) != print_tg(a)) ++differ;
  }
  EXPECT_GT(differ, 15);
}

TEST(Properties, ReachableMatchesReachSet) {
  CounterRng rng(42);
  for (int i = 0; i < 1000; ++i) {
    RandomConfig c;
    c.n = 2 + rng.below(5);
    c.lifetime = 1 + rng.below(5);
    c.p = 0.1 + 0.3 * rng.uniform();
    c.directed = rng.below(2) == 1;
    c.strict = rng.below(2) == 1;
    c.seed = rng.next();
    auto g = random_instance(c);
    auto u = g.name(rng.below(c.n)), v = g.name(rng.below(c.n));
    if (u == v) continue;
    EXPECT_EQ(oracle_reachable(g, u, v), reach_set(g, u).count(v) > 0) << print_tg(g) << u << " " << v;
  }
}

// Every subset of ids of the given size.
void subsets_of_size(const std::vector<std::string>& ids, std::size_t size,
                     const std::function<void(const std::set<std::string>&)>& visit) {
  std::set<std::string> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == size) {
      visit(cur);
      return;
    }
    for (std::size_t i = start; i < ids.size(); ++i) {
      cur.insert(ids[i]);
      rec(i + 1);
      cur.erase(ids[i]);
    }
  };
  rec(0);
}

TEST(Properties, OptimaAreTight) {
  int checked = 0;
  for (auto problem : {"separator_vertex", "separator_temporal_edge", "spanner", "reach_ds", "feedback_temporal_edge",
                       "matching_temporal", "component_open", "permanent_ds"}) {
    auto& info = problem_info(problem);
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
      RandomConfig c;
      c.n = 4;
      c.lifetime = 3;
      c.p = 0.3;
      c.seed = seed;
      c.directed = seed % 2 == 1;
      auto g = random_instance(c);
      if (g.num_edges() > 10) continue;
      Assignment base;
      if (info.kind == ProblemKind::PairSet) base.elements = {{"s", "v0"}, {"z", "v3"}};
      auto rep = oracle_optimum(g, problem, Params{}, base);
      if (!rep.value) continue;
      ++checked;
      ASSERT_EQ(rep.witness.size(), 1u);
      Assignment w = base;
      w.sets["X"] = std::set<std::string>(rep.witness[0].begin(), rep.witness[0].end());
      EXPECT_TRUE(oracle_verdict(g, problem, Params{}, w)) << problem;
      EXPECT_EQ(static_cast<long long>(rep.witness[0].size()), *rep.value);
      const bool maximize = *info.objective == Direction::Max;
      long long beyond = maximize ? *rep.value + 1 : *rep.value - 1;
      auto ids = domain_ids(g, info.set_sort);
      if (beyond < 0 || beyond > static_cast<long long>(ids.size())) continue;
      subsets_of_size(ids, static_cast<std::size_t>(beyond), [&](const std::set<std::string>& xs) {
        Assignment a = base;
        a.sets["X"] = xs;
        EXPECT_FALSE(oracle_verdict(g, problem, Params{}, a)) << problem << " seed " << seed;
      });
    }
  }
  EXPECT_GT(checked, 40);
}

TEST(Ceiling, DefaultsAndOverride) {
  ::unsetenv("TEMPO_ORACLE_CEILING");
  auto c = oracle_ceiling();
  EXPECT_EQ(c.n, 6);
  EXPECT_EQ(c.lifetime, 5);
  EXPECT_EQ(c.edges, 12);
  EXPECT_EQ(c.colours, 3);
  std::vector<EdgeSpec> path;
  for (int i = 0; i < 6; ++i) path.push_back({"p" + std::to_string(i), "p" + std::to_string(i + 1), 1});
  auto big = graph(path);
  try {
    oracle_spanner(big, {});
    ADD_FAILURE() << "expected TooLarge";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooLarge);
  }
  ::setenv("TEMPO_ORACLE_CEILING", "n=7,edges=20", 1);
  EXPECT_EQ(oracle_ceiling().n, 7);
  EXPECT_EQ(oracle_ceiling().lifetime, 5);
  EXPECT_TRUE(oracle_spanner(big, {0, 1, 2, 3, 4, 5, 6}));
  ::unsetenv("TEMPO_ORACLE_CEILING");
}

}  // namespace
}  // namespace tempo
