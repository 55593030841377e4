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

#include "random_formula.hpp"
#include "tempo/cookbook.hpp"
#include "tempo/encodings.hpp"
#include "tempo/eval.hpp"

namespace tempo {
namespace {

TemporalGraph graph(std::vector<EdgeSpec> edges) { return TemporalGraph(std::nullopt, edges, false, true); }
TemporalGraph e1() { return graph({{"a", "b", 1}, {"b", "c", 2}}); }

FormulaPtr P(const std::string& s) { return parse_formula(s); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvalidInput;
}

std::vector<std::string> names(const std::vector<Variable>& vs) {
  std::vector<std::string> out;
  for (auto& v : vs) out.push_back(v.name);
  return out;
}

TEST(Parser, ElementQuantifier) {
  auto f = P("exists x : V . V(x)");
  EXPECT_TRUE(structurally_equal(*f, *fm::exists("x", Sort::V, fm::rel("V", {"x"}))));
}

TEST(Parser, SetQuantifier) {
  auto f = P("Exists X sub V . forall y : V . y in X");
  EXPECT_TRUE(structurally_equal(*f, *fm::exists_set("X", Sort::V, fm::forall("y", Sort::V, fm::mem("y", "X")))));
}

TEST(Parser, Errors) {
  EXPECT_EQ(code_of([] { P("exists x ."); }), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of([] { P("exists x : Q . V(x)"); }), ErrorCode::UnknownSort);
  EXPECT_EQ(code_of([] { P("x = "); }), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of([] { P("(x = y"); }), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of([] { P("x = y y"); }), ErrorCode::SyntaxError);
  try {
    P("x = y &\n  & z = z");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }
}

TEST(Parser, Precedence) {
  auto a = fm::eq("a", "b"), b = fm::eq("c", "d"), c = fm::eq("e", "f");
  EXPECT_TRUE(structurally_equal(*P("a = b | c = d & e = f"), *fm::disj({a, fm::conj({b, c})})));
  EXPECT_TRUE(structurally_equal(*P("!a = b & c = d"), *fm::conj({fm::neg(a), b})));
  EXPECT_TRUE(structurally_equal(*P("a = b -> c = d <-> e = f"), *fm::iff(fm::implies(a, b), c)));
  EXPECT_TRUE(structurally_equal(*P("a = b | c = d -> e = f"), *fm::implies(fm::disj({a, b}), c)));
}

TEST(Parser, QuantifierBodyExtendsRight) {
  auto f = P("exists x . V(x) & V(y) | x = y");
  ASSERT_EQ(f->kind, Kind::ExistsElem);
  EXPECT_EQ(f->kids[0]->kind, Kind::Or);
  EXPECT_FALSE(f->guard.has_value());
}

TEST(Parser, CommentsAndWhitespace) {
  auto f = P("# leading comment\nexists x : V .\n  V(x) # trailing\n");
  EXPECT_TRUE(structurally_equal(*f, *P("exists x : V . V(x)")));
}

TEST(Printer, RoundTrip) {
  for (auto s : {"exists x : V . V(x)", "Exists X sub V . forall y : V . y in X",
                 "!(a = b & c = d) -> (e = f <-> !g in H)", "forall e : TE . exists t : L . pres(e, t) | true",
                 "(exists x . x = x) & false", "Forall S sub L . (a = b -> c = d) -> e = f"}) {
    auto f = P(s);
    EXPECT_TRUE(structurally_equal(*P(print_formula(f)), *f)) << s << " printed as " << print_formula(f);
  }
}

TEST(Printer, MinimalParentheses) {
  EXPECT_EQ(print_formula(P("((a = b) | ((c = d) & (e = f)))")).find('('), std::string::npos);
  EXPECT_NE(print_formula(P("(a = b | c = d) & e = f")).find('('), std::string::npos);
}

TEST(Printer, CookbookFormulasRoundTrip) {
  Tag tag{Encoding::Lifetime, true, false, 3};
  for (auto name : {"path", "separator_vertex", "reach_ds", "tpcover"}) {
    auto b = build_problem(tag, name, Params{2, 2, 2, 1});
    EXPECT_TRUE(structurally_equal(*P(print_formula(b.formula)), *b.formula)) << name;
  }
}

TEST(FreeVariables, Basics) {
  EXPECT_EQ(names(free_variables(*P("x = y"))), (std::vector<std::string>{"x", "y"}));
  EXPECT_TRUE(free_variables(*P("exists x : V . forall y . x = y")).empty());
  auto fv = free_variables(*P("exists y . y in X & inc(y, z)"));
  ASSERT_EQ(fv.size(), 2u);
  EXPECT_EQ(fv[0].name, "X");
  EXPECT_EQ(fv[0].order, Order::Set);
  EXPECT_EQ(fv[1].name, "z");
  EXPECT_EQ(fv[1].order, Order::Element);
  EXPECT_TRUE(is_fo(*P("exists x : V . V(x)")));
  EXPECT_FALSE(is_fo(*P("Exists X sub V . true")));
  EXPECT_FALSE(is_fo(*P("x in X")));
}

TEST(Evaluate, LifetimeOrder) {
  auto f = P("exists t1 : L . exists t2 : L . ltT(t1, t2)");
  EXPECT_TRUE(evaluate(encode_lifetime(e1()), f));
  EXPECT_FALSE(evaluate(encode_lifetime(graph({{"a", "b", 1}})), f));
}

TEST(Evaluate, DegreeSuccessor) {
  EXPECT_TRUE(evaluate(encode_degree(e1()), P("exists e1 : TE . exists e2 : TE . psuc(e1, e2)")));
  EXPECT_TRUE(evaluate(encode_degree(graph({{"a", "b", 2}, {"b", "c", 1}})),
                       P("exists e1 : TE . exists e2 : TE . psuc(e1, e2)")));
  EXPECT_FALSE(evaluate(encode_degree(TemporalGraph(std::nullopt, {{"a", "b", 2}, {"b", "c", 1}}, true, true)),
                        P("exists e1 : TE . exists e2 : TE . psuc(e1, e2)")));
}

TEST(Evaluate, VimReachability) {
  auto g = e1();
  auto rs = encode_vim(g);
  auto b = build_problem(tag_for(g, Encoding::Vim), "path");
  EXPECT_TRUE(evaluate(rs, b.formula, Assignment{{{"u", "a"}, {"v", "c"}}, {}}));
  EXPECT_FALSE(evaluate(rs, b.formula, Assignment{{{"u", "c"}, {"v", "a"}}, {}}));
}

TEST(Evaluate, Semantics) {
  auto rs = encode_lifetime(e1());
  EXPECT_TRUE(evaluate(rs, P("forall e : TE . exists t : L . pres(e, t)")));
  EXPECT_TRUE(evaluate(rs, P("forall x : V . exists e : TE . inc(e, x)")));
  EXPECT_FALSE(evaluate(rs, P("forall x . V(x)")));
  EXPECT_TRUE(evaluate(rs, P("Exists X sub V . forall y : V . y in X")));
  EXPECT_TRUE(evaluate(rs, P("Forall X sub L . Exists Y sub L . forall t : L . t in X <-> !t in Y")));
  EXPECT_TRUE(evaluate(rs, P("x in X & !y in X"), Assignment{{{"x", "a"}, {"y", "b"}}, {{"X", {"a", "c"}}}}));
  EXPECT_TRUE(evaluate(rs, P("pres(e, t)"), Assignment{{{"e", "a~b@1"}, {"t", "@1"}}, {}}));
  EXPECT_FALSE(evaluate(rs, P("pres(e, t)"), Assignment{{{"e", "a~b@1"}, {"t", "@2"}}, {}}));
}

TEST(Evaluate, ShadowingUsesInnermostBinding) {
  auto rs = encode_lifetime(e1());
  EXPECT_TRUE(evaluate(rs, P("exists x : V . exists x : TE . TE(x)")));
  EXPECT_FALSE(evaluate(rs, P("exists x : TE . exists x : V . TE(x)")));
}

TEST(Evaluate, Errors) {
  auto rs = encode_lifetime(e1());
  EXPECT_EQ(code_of([&] { evaluate(rs, P("V(x)")); }), ErrorCode::UnboundVariable);
  EXPECT_EQ(code_of([&] { evaluate(rs, P("exists x . foo(x)")); }), ErrorCode::SignatureMismatch);
  EXPECT_EQ(code_of([&] { evaluate(rs, P("exists x . inc(x)")); }), ErrorCode::SignatureMismatch);
  EXPECT_EQ(code_of([&] { evaluate(rs, P("exists x . psuc(x, x)")); }), ErrorCode::SignatureMismatch);
}

TEST(Count, Examples) {
  auto rs = encode_lifetime(e1());
  EXPECT_EQ(count_satisfying(rs, P("V(x)"), {{"x", Order::Element, std::nullopt}}), 3u);
  auto adj = P("!x = y & exists e : TE . inc(e, x) & inc(e, y)");
  EXPECT_EQ(count_satisfying(rs, adj, {{"x", Order::Element, Sort::V}, {"y", Order::Element, Sort::V}}), 4u);
  EXPECT_EQ(count_satisfying(rs, P("V(x) & !V(x)"), {{"x", Order::Element, std::nullopt}}), 0u);
  EXPECT_EQ(count_satisfying(rs, P("exists y : V . y in X"), {{"X", Order::Set, Sort::V}}), 7u);
}

TEST(Count, UnlistedFreeVariable) {
  auto rs = encode_lifetime(e1());
  EXPECT_EQ(code_of([&] { count_satisfying(rs, P("x = y"), {{"x", Order::Element, std::nullopt}}); }),
            ErrorCode::UnboundVariable);
  EXPECT_EQ(count_satisfying(rs, P("x = y"), {{"x", Order::Element, std::nullopt}}, Assignment{{{"y", "b"}}, {}}), 1u);
}

TEST(Optimize, Examples) {
  auto rs = encode_lifetime(e1());
  std::vector<Variable> X{{"X", Order::Set, Sort::V}};
  auto all = optimize_affine(rs, P("forall x : V . x in X"), X, {1}, 0, Direction::Min);
  EXPECT_EQ(all.value, 3);
  EXPECT_EQ(all.witness, (std::vector<std::vector<std::string>>{{"a", "b", "c"}}));
  auto least = optimize_affine(rs, P("exists y : V . y in X"), X, {1}, 0, Direction::Min);
  EXPECT_EQ(least.value, 1);
  EXPECT_EQ(least.witness, (std::vector<std::vector<std::string>>{{"a"}}));
  const Assignment b{{{"b", "b"}}, {}};
  auto most = optimize_affine(rs, P("!b in X"), X, {1}, 0, Direction::Max, b);
  EXPECT_EQ(most.value, 2);
  EXPECT_EQ(most.witness, (std::vector<std::vector<std::string>>{{"a", "c"}}));
  auto affine = optimize_affine(rs, P("!b in X"), X, {-2}, 5, Direction::Min, b);
  EXPECT_EQ(affine.value, 1);
  EXPECT_EQ(code_of([&] { optimize_affine(rs, P("exists y . y in X & !y = y"), X, {1}, 0, Direction::Min); }),
            ErrorCode::Infeasible);
}

TEST(CostGuard, Examples) {
  auto six = graph({{"a", "b", 1}, {"c", "d", 1}, {"e", "f", 1}});
  auto rs = encode_lifetime(six);
  auto f = P("exists x : V . exists y : V . exists z : V . x = y & y = z");
  auto v = cost_guard(rs, f, kDefaultBudget);
  EXPECT_EQ(v.estimate, 216);
  EXPECT_TRUE(v.pass);

  std::vector<EdgeSpec> edges;
  for (int i = 0; i < 24; ++i) edges.push_back({"w" + std::to_string(i), "w" + std::to_string(i + 1), 1});
  auto big = encode_lifetime(graph(edges));
  ASSERT_EQ(big.members(Sort::V).size(), 25u);
  auto s = P("Exists X sub V . forall y : V . y in X");
  auto refuse = cost_guard(big, s, kDefaultBudget);
  EXPECT_FALSE(refuse.pass);
  EXPECT_EQ(refuse.estimate, 33554432.0 * 25);
  EXPECT_EQ(code_of([&] { evaluate(big, s, {}, EvalOptions{kDefaultBudget}); }), ErrorCode::BudgetExceeded);
  EXPECT_TRUE(cost_guard(big, s, 1e9).pass);
  EXPECT_TRUE(cost_guard(big, s, 0).pass);
  auto pruned = P("Exists X sub V . forall y : V . y in X -> V(y) & !V(y)");
  EXPECT_EQ(code_of([&] { evaluate(big, pruned, {}, EvalOptions{kDefaultBudget}); }), ErrorCode::BudgetExceeded);
  EXPECT_TRUE(evaluate(big, pruned, {}, EvalOptions{0}));
}

// Random structures and formulas for the property tests.
struct Sample {
  RelationalStructure rs;
  FormulaPtr f;
};

RelationalStructure random_structure(std::uint64_t seed) {
  CounterRng rng(seed);
  RandomConfig c;
  c.n = 2 + rng.below(3);
  c.lifetime = 1 + rng.below(3);
  c.p = 0.5;
  c.directed = rng.below(2) == 1;
  c.strict = rng.below(2) == 1;
  c.seed = seed;
  auto g = random_instance(c);
  return encode(g, static_cast<Encoding>(rng.below(4)));
}

constexpr int kSamples = 150;

TEST(Properties, NegationAndDeMorgan) {
  for (int i = 0; i < kSamples; ++i) {
    auto rs = random_structure(1000 + i);
    testing::FormulaGen gen(rs, 7 + i);
    auto a = gen.gen(3, {}, {}), b = gen.gen(3, {}, {});
    bool va = evaluate(rs, a), vb = evaluate(rs, b);
    EXPECT_EQ(evaluate(rs, fm::neg(a)), !va) << print_formula(a);
    EXPECT_EQ(evaluate(rs, fm::neg(fm::conj({a, b}))), evaluate(rs, fm::disj({fm::neg(a), fm::neg(b)})));
    EXPECT_EQ(evaluate(rs, fm::neg(fm::disj({a, b}))), evaluate(rs, fm::conj({fm::neg(a), fm::neg(b)})));
    EXPECT_EQ(evaluate(rs, fm::conj({a, b})), va && vb);
    EXPECT_EQ(evaluate(rs, fm::implies(a, b)), !va || vb);
    EXPECT_EQ(evaluate(rs, fm::iff(a, b)), va == vb);
  }
}

TEST(Properties, GuardedQuantifierEquivalence) {
  for (int i = 0; i < kSamples; ++i) {
    auto rs = random_structure(2000 + i);
    testing::FormulaGen gen(rs, 11 + i);
    auto body = gen.gen(3, {"x"}, {});
    for (auto s : {"V", "TE", "L"}) {
      auto sort = *parse_sort(s);
      auto guarded = fm::exists("x", sort, body);
      auto plain = fm::exists("x", std::nullopt, fm::conj({fm::rel(s, {"x"}), body}));
      EXPECT_EQ(evaluate(rs, guarded), evaluate(rs, plain)) << print_formula(guarded);
      auto all = fm::forall("x", sort, body);
      auto all_plain = fm::forall("x", std::nullopt, fm::implies(fm::rel(s, {"x"}), body));
      EXPECT_EQ(evaluate(rs, all), evaluate(rs, all_plain)) << print_formula(all);
    }
  }
}

TEST(Properties, CountMatchesEvaluate) {
  for (int i = 0; i < kSamples; ++i) {
    auto rs = random_structure(3000 + i);
    testing::FormulaGen gen(rs, 13 + i);
    auto f = gen.gen(3, {"x"}, {});
    std::uint64_t expect = 0;
    for (auto& id : rs.ids()) expect += evaluate(rs, f, Assignment{{{"x", id}}, {}}) ? 1 : 0;
    EXPECT_EQ(count_satisfying(rs, f, {{"x", Order::Element, std::nullopt}}), expect) << print_formula(f);
  }
}

TEST(Properties, OptionsDoNotChangeResults) {
  for (int i = 0; i < kSamples; ++i) {
    auto rs = random_structure(4000 + i);
    testing::FormulaGen gen(rs, 17 + i);
    auto f = gen.gen(4, {}, {});
    EvalOptions plain;
    plain.prune_sets = false;
    plain.memoize = false;
    EXPECT_EQ(evaluate(rs, f), evaluate(rs, f, {}, plain)) << print_formula(f);
  }
}

TEST(Properties, OptimizeMatchesEnumeration) {
  int feasible = 0;
  for (int i = 0; i < kSamples; ++i) {
    auto rs = random_structure(5000 + i);
    testing::FormulaGen gen(rs, 19 + i);
    auto f = gen.gen(3, {"y"}, {"X"});
    f = gen.below(2) ? fm::exists("y", Sort::V, f) : fm::forall("y", Sort::V, f);
    auto dom = rs.members(Sort::V);
    std::optional<long long> best;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << dom.size()); ++m) {
      std::set<std::string> xs;
      for (std::size_t k = 0; k < dom.size(); ++k)
        if ((m >> k) & 1u) xs.insert(rs.id(dom[k]));
      if (!evaluate(rs, f, Assignment{{}, {{"X", xs}}})) continue;
      long long size = static_cast<long long>(xs.size());
      if (!best || size < *best) best = size;
    }
    std::vector<Variable> X{{"X", Order::Set, Sort::V}};
    if (!best) {
      EXPECT_EQ(code_of([&] { optimize_affine(rs, f, X, {1}, 0, Direction::Min); }), ErrorCode::Infeasible);
      continue;
    }
    ++feasible;
    auto r = optimize_affine(rs, f, X, {1}, 0, Direction::Min);
    EXPECT_EQ(r.value, *best) << print_formula(f);
    std::set<std::string> w(r.witness[0].begin(), r.witness[0].end());
    EXPECT_TRUE(evaluate(rs, f, Assignment{{}, {{"X", w}}}));
  }
  EXPECT_GT(feasible, 0);
}

TEST(Properties, ParsePrintRandom) {
  for (int i = 0; i < kSamples; ++i) {
    auto rs = random_structure(6000 + i);
    testing::FormulaGen gen(rs, 23 + i);
    auto f = gen.gen(5, {"x"}, {"X"});
    EXPECT_TRUE(structurally_equal(*P(print_formula(f)), *f)) << print_formula(f);
  }
}

}  // namespace
}  // namespace tempo
