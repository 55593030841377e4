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

#include "tempo/oracles.hpp"
#include "tempo/tg_format.hpp"
#include "tempo/tgraph.hpp"

namespace tempo {
namespace {

using Names = std::set<std::string>;

TemporalGraph e1(bool directed = false, bool strict = true) {
  return TemporalGraph(std::vector<std::string>{"a", "b", "c"}, {{"a", "b", 1}, {"b", "c", 2}}, directed, strict);
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::InvalidInput;
}

TEST(TemporalGraph, BuildsE1) {
  auto g = e1();
  EXPECT_EQ(g.num_vertices(), 3);
  EXPECT_EQ(g.num_edges(), 2);
  EXPECT_EQ(g.lifetime(), 2);
}

TEST(TemporalGraph, CollapsesDuplicateTriples) {
  TemporalGraph g(std::nullopt, {{"a", "b", 1}, {"a", "b", 1}, {"b", "a", 1}}, false, true);
  EXPECT_EQ(g.num_edges(), 1);
  TemporalGraph d(std::nullopt, {{"a", "b", 1}, {"b", "a", 1}}, true, true);
  EXPECT_EQ(d.num_edges(), 2);
}

TEST(TemporalGraph, Errors) {
  EXPECT_EQ(code_of([] { TemporalGraph(std::nullopt, {{"a", "a", 1}}, false, true); }), ErrorCode::SelfLoop);
  EXPECT_EQ(code_of([] { TemporalGraph(std::vector<std::string>{"a"}, {{"a", "b", 1}}, false, true); }),
            ErrorCode::UnknownVertex);
  EXPECT_EQ(code_of([] { TemporalGraph(std::nullopt, {{"a", "b", 0}}, false, true); }), ErrorCode::InvalidInput);
  EXPECT_EQ(code_of([] { TemporalGraph(std::nullopt, {{"a~", "b", 1}}, false, true); }), ErrorCode::InvalidName);
}

TEST(TemporalGraph, EdgelessHasZeroLifetime) {
  TemporalGraph g(std::vector<std::string>{"a"}, {}, false, true);
  EXPECT_EQ(g.lifetime(), 0);
  EXPECT_EQ(max_temporal_degree(g), 0);
  EXPECT_EQ(footprint(g).size(), 1);
  EXPECT_TRUE(footprint(g).edges().empty());
}

TEST(Footprint, MergesLabels) {
  auto fp = footprint(e1());
  EXPECT_EQ(fp.edges().size(), 2u);
  EXPECT_TRUE(fp.has_edge(0, 1));
  EXPECT_TRUE(fp.has_edge(1, 2));
  TemporalGraph g(std::nullopt, {{"a", "b", 1}, {"a", "b", 5}}, false, true);
  EXPECT_EQ(footprint(g).edges().size(), 1u);
}

TEST(Snapshot, SelectsOneTime) {
  auto g = e1();
  auto s1 = snapshot(g, 1), s2 = snapshot(g, 2);
  EXPECT_EQ(s1.edges(), (std::set<std::pair<int, int>>{{0, 1}}));
  EXPECT_EQ(s2.edges(), (std::set<std::pair<int, int>>{{1, 2}}));
  EXPECT_EQ(s1.size(), 3);
  EXPECT_EQ(code_of([&] { snapshot(g, 3); }), ErrorCode::TimeOutOfRange);
  EXPECT_EQ(code_of([&] { snapshot(g, 0); }), ErrorCode::TimeOutOfRange);
}

TEST(Degrees, E1AndStar) {
  auto g = e1();
  EXPECT_EQ(max_temporal_degree(g), 2);
  EXPECT_EQ(temporal_degree(g, "b"), 2);
  EXPECT_EQ(static_degree(g, g.require_vertex("b")), 2);
  EXPECT_EQ(max_static_degree(g), 2);
  TemporalGraph star(std::nullopt, {{"c", "a", 1}, {"c", "b", 2}, {"c", "d", 3}}, false, true);
  EXPECT_EQ(max_temporal_degree(star), 3);
}

TEST(ActivityInterval, Vertices) {
  auto g = e1();
  auto b = activity_interval(g, "b");
  ASSERT_TRUE(b);
  EXPECT_EQ(b->tmin, 1);
  EXPECT_EQ(b->tmax, 2);
  auto a = activity_interval(g, "a");
  ASSERT_TRUE(a);
  EXPECT_EQ(a->tmin, 1);
  EXPECT_EQ(a->tmax, 1);
  TemporalGraph iso(std::vector<std::string>{"a", "b", "d"}, {{"a", "b", 1}}, false, true);
  EXPECT_FALSE(activity_interval(iso, "d"));
  EXPECT_EQ(code_of([&] { activity_interval(g, "zz"); }), ErrorCode::UnknownVertex);
  auto ab = activity_interval(g, "b", "a");
  ASSERT_TRUE(ab);
  EXPECT_EQ(ab->tmin, 1);
}

TEST(ReachSet, Examples) {
  auto g = e1();
  EXPECT_EQ(reach_set(g, "a"), (Names{"a", "b", "c"}));
  EXPECT_EQ(reach_set(g, "c"), (Names{"c", "b"}));
  TemporalGraph back(std::nullopt, {{"a", "b", 2}, {"b", "c", 1}}, false, true);
  EXPECT_EQ(reach_set(back, "a"), (Names{"a", "b"}));
  EXPECT_EQ(code_of([&] { reach_set(g, "q"); }), ErrorCode::UnknownVertex);
}

TEST(ReachSet, StrictnessAndWaiting) {
  TemporalGraph same(std::nullopt, {{"a", "b", 1}, {"b", "c", 1}}, false, true);
  EXPECT_EQ(reach_set(same, "a"), (Names{"a", "b"}));
  EXPECT_EQ(reach_set(same.with_strict(false), "a"), (Names{"a", "b", "c"}));
  TemporalGraph slow(std::nullopt, {{"a", "b", 1}, {"b", "c", 5}}, false, true);
  ReachOptions o;
  o.max_wait = 2;
  EXPECT_EQ(reach_set(slow, "a", o), (Names{"a", "b"}));
  o.max_wait = 4;
  EXPECT_EQ(reach_set(slow, "a", o), (Names{"a", "b", "c"}));
}

TEST(ReachSet, Restrictions) {
  auto g = e1();
  ReachOptions o;
  o.allowed_vertices = std::vector<bool>{true, false, true};
  EXPECT_EQ(reach_set(g, "a", o), (Names{"a"}));
  ReachOptions s;
  s.allowed_static = std::set<std::pair<int, int>>{{0, 1}};
  EXPECT_EQ(reach_set(g, "a", s), (Names{"a", "b"}));
  ReachOptions e;
  e.allowed_edges = std::vector<bool>{true, true};
  EXPECT_EQ(reach_set(g, "a", e), (Names{"a", "b", "c"}));
}

TEST(ReachSet, DirectedFollowsArcs) {
  auto g = e1(true);
  EXPECT_EQ(reach_set(g, "a"), (Names{"a", "b", "c"}));
  EXPECT_EQ(reach_set(g, "b"), (Names{"b", "c"}));
  EXPECT_EQ(reach_set(g, "c"), (Names{"c"}));
}

TEST(Properties, RandomInstances) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    RandomConfig c;
    c.n = 2 + static_cast<int>(seed % 4);
    c.lifetime = 1 + static_cast<int>(seed % 3);
    c.p = 0.4;
    c.seed = seed;
    c.directed = seed % 5 == 0;
    auto g = random_instance(c);
    int sum = 0;
    for (int v = 0; v < g.num_vertices(); ++v) {
      EXPECT_LE(temporal_degree(g, v), max_temporal_degree(g));
      sum += temporal_degree(g, v);
    }
    EXPECT_EQ(sum, 2 * g.num_edges());
    std::size_t snap_edges = 0;
    for (int t = 1; t <= g.lifetime(); ++t) snap_edges += snapshot(g, t).edges().size();
    EXPECT_EQ(snap_edges, static_cast<std::size_t>(g.num_edges()));
    auto loose = g.with_strict(false);
    for (auto& v : g.vertices()) {
      auto strict = reach_set(g, v), lax = reach_set(loose, v);
      EXPECT_TRUE(std::includes(lax.begin(), lax.end(), strict.begin(), strict.end()));
      EXPECT_TRUE(strict.count(v));
    }
    if (g.num_vertices() >= 2) {
      auto specs = g.edge_specs();
      specs.push_back({g.name(0), g.name(1), 1});
      TemporalGraph more(g.vertices(), specs, g.directed(), g.strict());
      for (auto& v : g.vertices()) {
        auto before = reach_set(g, v), after = reach_set(more, v);
        EXPECT_TRUE(std::includes(after.begin(), after.end(), before.begin(), before.end()));
      }
    }
  }
}

TEST(TgFormat, ParsesE1) {
  auto g = parse_tg("tg 1\nundirected strict\nedge a b 1\nedge b c 2");
  EXPECT_EQ(g, e1());
}

TEST(TgFormat, IsolatedVertexAndMultiLabels) {
  auto g = parse_tg("# demo\ntg 1\ndirected nonstrict\nvertex d\nedge a b 1 3 # two labels\n");
  EXPECT_EQ(g.num_vertices(), 3);
  EXPECT_EQ(g.num_edges(), 2);
  EXPECT_TRUE(g.directed());
  EXPECT_FALSE(g.strict());
  EXPECT_TRUE(g.index_of("d"));
}

TEST(TgFormat, Errors) {
  auto err = [](const std::string& text) {
    try {
      parse_tg(text);
    } catch (const Error& e) {
      return std::make_pair(e.code(), std::string(e.what()));
    }
    return std::make_pair(ErrorCode::InvalidInput, std::string("no error"));
  };
  auto loop = err("tg 1\nundirected strict\nedge a a 1\n");
  EXPECT_EQ(loop.first, ErrorCode::SelfLoop);
  EXPECT_NE(loop.second.find("line 3"), std::string::npos);
  EXPECT_EQ(err("tg 1\ntg 1\n").first, ErrorCode::DuplicateHeader);
  EXPECT_EQ(err("tg 1\nundirected strict\ndirected strict\n").first, ErrorCode::DuplicateHeader);
  EXPECT_EQ(err("undirected strict\n").first, ErrorCode::SyntaxError);
  EXPECT_EQ(err("tg 1\nundirected\n").first, ErrorCode::SyntaxError);
  EXPECT_EQ(err("tg 1\nundirected strict\nedge a b x\n").first, ErrorCode::SyntaxError);
  EXPECT_EQ(err("tg 1\nundirected strict\nedge a b 0\n").first, ErrorCode::SyntaxError);
  EXPECT_EQ(err("tg 1\nundirected strict\narc a b 1\n").first, ErrorCode::SyntaxError);
  EXPECT_EQ(err("").first, ErrorCode::SyntaxError);
}

TEST(TgFormat, RoundTrip) {
  EXPECT_EQ(parse_tg(print_tg(e1())), e1());
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    RandomConfig c;
    c.n = 1 + static_cast<int>(seed % 6);
    c.lifetime = static_cast<int>(seed % 4);
    c.p = 0.3;
    c.directed = seed % 2 == 1;
    c.strict = seed % 3 != 0;
    c.seed = seed;
    auto g = random_instance(c);
    EXPECT_EQ(parse_tg(print_tg(g)), g) << print_tg(g);
  }
}

}  // namespace
}  // namespace tempo
