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

#include "tempo/decomp.hpp"
#include "tempo/oracles.hpp"

namespace tempo {
namespace {

TemporalGraph graph(std::vector<EdgeSpec> edges, std::vector<std::string> vertices = {}) {
  return new_temporal_graph(vertices, edges, false, true);
}

TemporalGraph e1() { return graph({{"a", "b", 1}, {"b", "c", 2}}); }

StaticGraph complete(int k) {
  std::vector<std::string> names;
  for (int i = 0; i < k; ++i) names.push_back("k" + std::to_string(i));
  StaticGraph g(names, false);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) g.add_edge(i, j);
  return g;
}

StaticGraph cycle(int k) {
  std::vector<std::string> names;
  for (int i = 0; i < k; ++i) names.push_back("c" + std::to_string(i));
  StaticGraph g(names, false);
  for (int i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k);
  return g;
}

StaticGraph path3() {
  StaticGraph g({"a", "b", "c"}, false);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  return g;
}

using Bags = std::vector<std::vector<int>>;

TEST(Vim, E1) {
  auto d = vim_decomposition(e1());
  EXPECT_EQ(d.bags, (Bags{{0, 1}, {1, 2}}));
  EXPECT_EQ(d.width(), 2);
  EXPECT_EQ(vim_decomposition(e1()), d);
}

TEST(Vim, LateSingleEdge) {
  auto d = vim_decomposition(graph({{"u", "v", 3}}));
  EXPECT_EQ(d.bags, (Bags{{}, {}, {0, 1}}));
  EXPECT_EQ(d.width(), 2);
}

TEST(Vim, TemporallyConnectedHasWidthN) {
  auto g = graph({{"a", "b", 1}, {"b", "c", 1}, {"a", "c", 1}, {"a", "b", 2}, {"b", "c", 2}, {"a", "c", 2}});
  EXPECT_EQ(vim_decomposition(g).width(), 3);
}

TEST(Tim, E1) {
  auto g = e1();
  auto d = tim_decomposition(g);
  ASSERT_EQ(d.size(), 4);
  std::set<std::pair<int, std::vector<int>>> nodes;
  for (int i = 0; i < d.size(); ++i) nodes.insert({d.tau[i], d.bags[i]});
  EXPECT_EQ(nodes, (std::set<std::pair<int, std::vector<int>>>{{1, {0, 1}}, {1, {2}}, {2, {1, 2}}, {2, {0}}}));
  EXPECT_EQ(d.width(), 2);
  EXPECT_TRUE(validate_tim(g, d));
  EXPECT_EQ(d.tree_edges.size(), 3u);
}

TEST(Tim, GapMergesBags) {
  auto g = graph({{"a", "b", 1}, {"a", "b", 3}});
  auto d = tim_decomposition(g);
  EXPECT_TRUE(validate_tim(g, d));
  EXPECT_EQ(d.size(), 3);
  EXPECT_EQ(d.width(), 2);
  for (auto& b : d.bags) EXPECT_EQ(b, (std::vector<int>{0, 1}));
  EXPECT_EQ(tim_width_exact_tiny(g), 2);
}

TEST(Tim, Edgeless) {
  auto d = tim_decomposition(graph({}, {"a", "b"}));
  EXPECT_EQ(d.size(), 0);
  EXPECT_EQ(d.width(), 0);
}

TEST(Tim, ValidatorClauses) {
  auto g = e1();
  auto missing = detail::make_tim({{1, {0, 1}}, {2, {1, 2}}, {2, {0}}});
  auto v = validate_tim(g, missing);
  EXPECT_FALSE(v);
  EXPECT_EQ(v.clause, "i");
  auto split = detail::make_tim({{1, {0}}, {1, {1}}, {1, {2}}, {2, {0}}, {2, {1, 2}}});
  v = validate_tim(g, split);
  EXPECT_FALSE(v);
  EXPECT_EQ(v.clause, "ii");
  auto g2 = graph({{"a", "b", 1}, {"a", "b", 3}});
  auto cyc = detail::make_tim({{1, {0, 1}}, {2, {0}}, {2, {1}}, {3, {0, 1}}});
  v = validate_tim(g2, cyc);
  EXPECT_FALSE(v);
  EXPECT_EQ(v.clause, "iii");
}

TEST(Tim, ExactTiny) {
  EXPECT_EQ(tim_width_exact_tiny(e1()), 2);
  EXPECT_EQ(tim_width_exact_tiny(graph({{"u", "v", 1}})), 2);
  RandomConfig c;
  c.n = 5;
  c.lifetime = 2;
  c.p = 0.5;
  auto big = random_instance(c);
  EXPECT_THROW(tim_width_exact_tiny(big), Error);
}

TEST(TreeDecomposition, Heuristic) {
  auto td = tree_decomposition_footprint(path3());
  EXPECT_TRUE(validate_tree_decomposition(path3(), td));
  EXPECT_EQ(td.width(), 1);
  auto k4 = tree_decomposition_footprint(complete(4));
  EXPECT_TRUE(validate_tree_decomposition(complete(4), k4));
  EXPECT_EQ(k4.width(), 3);
  auto c4 = tree_decomposition_footprint(cycle(4));
  EXPECT_TRUE(validate_tree_decomposition(cycle(4), c4));
  EXPECT_EQ(c4.width(), 2);
}

TEST(TreeDecomposition, ExactTiny) {
  EXPECT_EQ(treewidth_exact_tiny(path3()), 1);
  EXPECT_EQ(treewidth_exact_tiny(complete(5)), 4);
  EXPECT_EQ(treewidth_exact_tiny(cycle(6)), 2);
  EXPECT_EQ(treewidth_exact_tiny(cycle(4)), 2);
  EXPECT_THROW(treewidth_exact_tiny(cycle(9)), Error);
}

TEST(TreeDecomposition, ValidatorClauses) {
  auto k3 = complete(3);
  EXPECT_TRUE(validate_tree_decomposition(k3, TreeDecomposition{{{0, 1, 2}}, {}}));
  auto v = validate_tree_decomposition(k3, TreeDecomposition{{{0, 1}, {1, 2}}, {{0, 1}}});
  EXPECT_FALSE(v);
  EXPECT_EQ(v.clause, "ii");
  auto p = path3();
  v = validate_tree_decomposition(p, TreeDecomposition{{{0, 1}, {2}, {1, 2}}, {{0, 1}, {1, 2}}});
  EXPECT_FALSE(v);
  EXPECT_EQ(v.clause, "iii");
  v = validate_tree_decomposition(p, TreeDecomposition{{{0, 1}}, {}});
  EXPECT_FALSE(v);
  EXPECT_EQ(v.clause, "i");
}

TEST(PathFromVim, E1AndTriangle) {
  auto pd = path_decomposition_from_vim(e1());
  EXPECT_EQ(pd.bags, (Bags{{0, 1}, {1, 2}}));
  EXPECT_EQ(pd.width(), 1);
  EXPECT_TRUE(pd.is_path());
  auto tri = graph({{"a", "b", 1}, {"b", "c", 1}, {"a", "c", 1}, {"a", "b", 2}});
  EXPECT_EQ(path_decomposition_from_vim(tri).width(), 2);
  auto empty = path_decomposition_from_vim(graph({}, {"a"}));
  EXPECT_TRUE(validate_tree_decomposition(footprint(graph({}, {"a"})), empty));
}

TEST(TreeFromTim, E1AndInvalid) {
  auto g = e1();
  auto td = tree_decomposition_from_tim(g, tim_decomposition(g));
  EXPECT_TRUE(validate_tree_decomposition(footprint(g), td));
  EXPECT_EQ(td.width(), 1);
  auto trivial = detail::make_tim({{1, {0, 1, 2}}, {2, {0, 1, 2}}});
  EXPECT_EQ(tree_decomposition_from_tim(g, trivial).width(), 2);
  auto bad = detail::make_tim({{1, {0, 1}}});
  try {
    tree_decomposition_from_tim(g, bad);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidInput);
  }
}

TEST(Properties, RandomInstances) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    RandomConfig c;
    c.n = 1 + static_cast<int>(seed % 4);
    c.lifetime = 1 + static_cast<int>(seed % 3);
    c.p = seed % 2 ? 0.5 : 0.25;
    c.seed = seed;
    auto g = random_instance(c);
    auto fp = footprint(g);
    auto pd = path_decomposition_from_vim(g);
    EXPECT_TRUE(validate_tree_decomposition(fp, pd));
    EXPECT_LE(pd.width() + 1, std::max(1, vim_decomposition(g).width()));
    auto d = tim_decomposition(g);
    EXPECT_TRUE(validate_tim(g, d)) << validate_tim(g, d).clause;
    EXPECT_GE(d.width(), tim_width_exact_tiny(g));
    EXPECT_TRUE(validate_tree_decomposition(fp, tree_decomposition_from_tim(g, d)));
    auto td = tree_decomposition_footprint(fp);
    EXPECT_TRUE(validate_tree_decomposition(fp, td));
    EXPECT_GE(td.width(), treewidth_exact_tiny(fp));
    // Each snapshot component lies inside one bag of its time.
    for (int t = 1; t <= g.lifetime(); ++t) {
      auto s = snapshot(g, t);
      for (auto [a, b] : s.edges()) {
        bool together = false;
        for (int i = 0; i < d.size(); ++i)
          if (d.tau[i] == t && std::binary_search(d.bags[i].begin(), d.bags[i].end(), a) &&
              std::binary_search(d.bags[i].begin(), d.bags[i].end(), b))
            together = true;
        EXPECT_TRUE(together);
      }
    }
  }
}

}  // namespace
}  // namespace tempo
