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

// Formula builders for temporal graph problems over the four encodings.

#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tempo/encodings.hpp"
#include "tempo/eval.hpp"
#include "tempo/formula.hpp"
#include "tempo/tgraph.hpp"

namespace tempo {

struct Tag {
  Encoding encoding = Encoding::Lifetime;
  bool strict = true;
  bool directed = false;
  int lifetime = 0;  // needed by builders that unroll over time
};

inline Tag tag_for(const TemporalGraph& g, Encoding e) {
  return Tag{e, g.strict(), g.directed(), g.lifetime()};
}

struct Params {
  int k = 1;
  int l = 1;
  int Delta = 1;  // clique window, matching gap, delta-tvc window
  int delta = 1;  // restless waiting bound
};

// Free-variable form plus its existential closure over the solution sets.
struct Built {
  FormulaPtr formula;
  FormulaPtr closed;
  std::vector<Variable> free_vars;
  std::vector<Variable> solution_vars;
};

// Windows [s, min(L, s + len - 1)] for s = 1..max(1, L - len + 1).
inline std::vector<std::pair<int, int>> time_windows(int lifetime, int len) {
  std::vector<std::pair<int, int>> out;
  const int count = std::max(1, lifetime - len + 1);
  for (int s = 1; s <= count; ++s) out.emplace_back(s, std::min(lifetime, s + len - 1));
  return out;
}

using Pred = std::function<FormulaPtr(const std::string&)>;
using Pred2 = std::function<FormulaPtr(const std::string&, const std::string&)>;

struct PathShape {
  Pred2 succ;          // defaults to psuc
  Pred2 hook;          // extra conjunct over (e_s, e_z)
  bool tecc = true;
};

class Builder {
 public:
  explicit Builder(Tag tag) : tag_(tag) {}

  const Tag& tag() const { return tag_; }
  bool lifetime() const { return tag_.encoding == Encoding::Lifetime; }
  bool bags() const { return tag_.encoding == Encoding::Vim || tag_.encoding == Encoding::Tim; }
  Sort time_sort() const { return lifetime() ? Sort::L : Sort::B; }

  std::string fresh(const std::string& prefix) { return prefix + "_" + std::to_string(++counter_); }

  [[noreturn]] void unsupported(const std::string& what) const {
    fail(ErrorCode::UnsupportedCombination,
         what + " is not available for encoding " + encoding_name(tag_.encoding) +
             (tag_.strict ? " (strict)" : " (non-strict)"));
  }

  // -- incidence -------------------------------------------------------------

  FormulaPtr inc(const std::string& e, const std::string& v) const {
    if (tag_.directed) return fm::disj({fm::rel("source", {e, v}), fm::rel("target", {e, v})});
    return fm::rel("inc", {e, v});
  }
  FormulaPtr src(const std::string& e, const std::string& v) const {
    return fm::rel(tag_.directed ? "source" : "inc", {e, v});
  }
  FormulaPtr tgt(const std::string& e, const std::string& v) const {
    return fm::rel(tag_.directed ? "target" : "inc", {e, v});
  }
  static FormulaPtr pres(const std::string& e, const std::string& t) { return fm::rel("pres", {e, t}); }

  // e runs from a to b (either way when undirected).
  FormulaPtr joins(const std::string& e, const std::string& a, const std::string& b) const {
    if (tag_.directed) return fm::conj({fm::rel("source", {e, a}), fm::rel("target", {e, b})});
    return fm::conj({fm::neq(a, b), fm::rel("inc", {e, a}), fm::rel("inc", {e, b})});
  }

  // -- shortcuts -------------------------------------------------------------

  FormulaPtr sharededge(const std::string& a, const std::string& b) {
    if (!tag_.directed) {
      auto w = fresh("w");
      return fm::forall(w, Sort::V, fm::implies(inc(a, w), inc(b, w)));
    }
    auto w1 = fresh("w"), w2 = fresh("w");
    return fm::conj({fm::forall(w1, Sort::V, fm::implies(fm::rel("source", {a, w1}), fm::rel("source", {b, w1}))),
                     fm::forall(w2, Sort::V, fm::implies(fm::rel("target", {a, w2}), fm::rel("target", {b, w2})))});
  }

  // At most one temporal edge of X per static edge.
  FormulaPtr edgeset(const std::string& x) {
    auto a = fresh("a"), b = fresh("b");
    return fm::forall(a, Sort::TE,
                      fm::forall(b, Sort::TE,
                                 fm::implies(fm::conj({fm::mem(a, x), fm::mem(b, x), sharededge(a, b)}), fm::eq(a, b))));
  }

  // g1 is g2 or lies before it along next. Callers add g1 != g2 for "strictly".
  FormulaPtr bag_order(const std::string& g1, const std::string& g2) {
    if (!bags()) unsupported("bag order");
    auto p = fresh("P"), h = fresh("H"), h2 = fresh("H"), k = fresh("H"), k2 = fresh("H");
    auto chain = std::vector<FormulaPtr>{
        fm::mem(g1, p), fm::mem(g2, p),
        fm::forall(h, Sort::B,
                   fm::implies(fm::conj({fm::mem(h, p), fm::neq(h, g1)}),
                               fm::exists(h2, Sort::B, fm::conj({fm::mem(h2, p), fm::rel("next", {h2, h})})))),
        fm::forall(k, Sort::B,
                   fm::implies(fm::conj({fm::mem(k, p), fm::neq(k, g2)}),
                               fm::exists(k2, Sort::B, fm::conj({fm::mem(k2, p), fm::rel("next", {k, k2})}))))};
    if (tag_.encoding == Encoding::Vim) return fm::exists_set(p, Sort::B, fm::conj(chain));
    auto x = fresh("x"), f = fresh("H");
    chain.insert(chain.begin(), fm::forall(f, Sort::B, fm::implies(fm::mem(f, p), fm::rel("bag", {x, f}))));
    return fm::exists(x, Sort::V,
                      fm::conj({fm::rel("bag", {x, g1}), fm::rel("bag", {x, g2}), fm::exists_set(p, Sort::B, fm::conj(chain))}));
  }

  FormulaPtr strictly_before(const std::string& g1, const std::string& g2) {
    return fm::conj({fm::neq(g1, g2), bag_order(g1, g2)});
  }

  // b may directly follow a on a temporal path.
  FormulaPtr psuc(const std::string& a, const std::string& b) {
    if (tag_.encoding == Encoding::Degree) return fm::rel("psuc", {a, b});
    auto v = fresh("v"), t1 = fresh("t"), t2 = fresh("t");
    FormulaPtr order;
    if (lifetime()) {
      order = tag_.strict ? fm::rel("ltT", {t1, t2}) : fm::disj({fm::rel("ltT", {t1, t2}), fm::eq(t1, t2)});
    } else {
      order = tag_.strict ? strictly_before(t1, t2) : bag_order(t1, t2);
    }
    auto body = fm::exists(
        v, Sort::V,
        fm::conj({tgt(a, v), src(b, v),
                  fm::exists(t1, time_sort(),
                             fm::conj({pres(a, t1), fm::exists(t2, time_sort(), fm::conj({pres(b, t2), order}))}))}));
    if (tag_.strict) return body;
    return fm::conj({fm::neq(a, b), body});
  }

  // Temporal adjacency; TIM and degree carry no explicit time.
  FormulaPtr tadj(const std::string& x, const std::string& y, const std::optional<std::string>& t) {
    auto e = fresh("e");
    std::vector<FormulaPtr> parts{fm::neq(x, y), inc(e, x), inc(e, y)};
    if (t) {
      if (!(lifetime() || tag_.encoding == Encoding::Vim)) unsupported("timed adjacency");
      parts.insert(parts.begin(), pres(e, *t));
    }
    return fm::exists(e, Sort::TE, fm::conj(parts));
  }

  // At least k distinct elements of sort s satisfy member.
  FormulaPtr card(int k, Sort s, const Pred& member) {
    std::vector<std::string> xs;
    for (int i = 0; i < k; ++i) xs.push_back(fresh("c"));
    std::vector<FormulaPtr> parts;
    for (auto& x : xs) parts.push_back(member(x));
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) parts.push_back(fm::neq(xs[static_cast<std::size_t>(i)], xs[static_cast<std::size_t>(j)]));
    return fm::exists_all(xs, s, fm::conj(parts));
  }

  FormulaPtr card_set(int k, const std::string& x, Sort s = Sort::V) {
    return card(k, s, [&](const std::string& y) { return fm::mem(y, x); });
  }

  // At least k edges of P are incident to x.
  FormulaPtr at_least(const std::string& x, const std::string& p, int k) {
    std::vector<std::string> prev;
    std::function<FormulaPtr(int)> rec = [&](int i) -> FormulaPtr {
      if (i == k) return fm::truth(true);
      auto e = fresh("d");
      std::vector<FormulaPtr> parts{fm::mem(e, p), inc(e, x)};
      for (auto& q : prev) parts.push_back(fm::neq(e, q));
      prev.push_back(e);
      parts.push_back(rec(i + 1));
      return fm::exists(e, Sort::TE, fm::conj(parts));
    };
    return rec(0);
  }

  // Exactly k edges of P are incident to x.
  FormulaPtr deg(const std::string& x, const std::string& p, int k) {
    if (k == 0) return fm::neg(at_least(x, p, 1));
    return fm::conj({at_least(x, p, k), fm::neg(at_least(x, p, k + 1))});
  }

  // time(a) <= time(b) <= time(a) + l for time elements a, b.
  FormulaPtr interval(const std::string& a, const std::string& b, int l) {
    if (lifetime()) {
      std::function<FormulaPtr(const std::string&, int)> gap = [&](const std::string& from, int left) -> FormulaPtr {
        if (left == 0) return fm::rel("ltT", {from, b});
        auto s = fresh("s");
        return fm::exists(s, Sort::L, fm::conj({fm::rel("ltT", {from, s}), gap(s, left - 1)}));
      };
      return fm::conj({fm::neg(fm::rel("ltT", {b, a})), fm::neg(gap(a, l))});
    }
    if (!bags()) unsupported("interval");
    std::function<FormulaPtr(const std::string&, int)> step = [&](const std::string& from, int left) -> FormulaPtr {
      if (left == 0) return fm::eq(from, b);
      auto h = fresh("H");
      return fm::disj({fm::eq(from, b), fm::exists(h, Sort::B, fm::conj({fm::rel("next", {from, h}), step(h, left - 1)}))});
    };
    return step(a, l);
  }

  // time(e1) <= time(e2) <= time(e1) + l for temporal edges.
  FormulaPtr teint(const std::string& e1, const std::string& e2, int l) {
    if (tag_.encoding == Encoding::Degree) unsupported("time distance");
    auto t1 = fresh("t"), t2 = fresh("t");
    auto core = fm::exists(
        t1, time_sort(),
        fm::conj({pres(e1, t1), fm::exists(t2, time_sort(), fm::conj({pres(e2, t2), interval(t1, t2, l)}))}));
    if (tag_.encoding != Encoding::Tim) return core;
    auto x = fresh("x");
    return fm::exists(x, Sort::V, fm::conj({inc(e1, x), inc(e2, x), core}));
  }

  FormulaPtr deltapsuc(const std::string& a, const std::string& b, int delta) {
    return fm::conj({psuc(a, b), teint(a, b, delta)});
  }

  // The edges of P form a connected footprint. anchor, when given, is a
  // vertex of P used to break the symmetry of the cut.
  FormulaPtr tecc(const std::string& p, const std::optional<std::string>& anchor = std::nullopt) {
    auto z = fresh("Z"), w = fresh("w"), e = fresh("e"), w2 = fresh("w"), e2 = fresh("e");
    auto e3 = fresh("e"), a = fresh("x"), b = fresh("y");
    std::vector<FormulaPtr> premise{
        fm::forall(w, Sort::V, fm::implies(fm::mem(w, z), fm::exists(e, Sort::TE, fm::conj({fm::mem(e, p), inc(e, w)})))),
    };
    if (anchor) {
      premise.push_back(fm::mem(*anchor, z));
    } else {
      auto y = fresh("w");
      premise.push_back(fm::exists(y, Sort::V, fm::mem(y, z)));
    }
    premise.push_back(fm::exists(
        w2, Sort::V, fm::conj({fm::notin(w2, z), fm::exists(e2, Sort::TE, fm::conj({fm::mem(e2, p), inc(e2, w2)}))})));
    auto cross = fm::exists(
        e3, Sort::TE,
        fm::conj({fm::mem(e3, p), fm::exists(a, Sort::V, fm::conj({inc(e3, a), fm::mem(a, z),
                                                                    fm::exists(b, Sort::V, fm::conj({inc(e3, b), fm::notin(b, z)}))}))}));
    return fm::forall_set(z, Sort::V, fm::implies(fm::conj(premise), cross));
  }

  // x is reachable from r in the footprint of P.
  FormulaPtr fpreach(const std::string& r, const std::string& x, const std::string& p) {
    auto z = fresh("Z"), e = fresh("e"), a = fresh("x"), b = fresh("y");
    auto closed = fm::forall(
        e, Sort::TE,
        fm::implies(fm::mem(e, p),
                    fm::forall(a, Sort::V,
                               fm::forall(b, Sort::V, fm::implies(fm::conj({inc(e, a), inc(e, b), fm::mem(a, z)}), fm::mem(b, z))))));
    return fm::forall_set(z, Sort::V, fm::implies(fm::conj({fm::mem(r, z), closed}), fm::mem(x, z)));
  }

  // X induces a connected subgraph of the footprint.
  FormulaPtr xcc(const std::string& x) {
    if (tag_.encoding == Encoding::Degree) unsupported("static connectivity");
    auto z = fresh("Z"), w = fresh("w"), y = fresh("w"), y2 = fresh("w"), e = fresh("e"), a = fresh("x"), b = fresh("y");
    auto premise = fm::conj({fm::forall(w, Sort::V, fm::implies(fm::mem(w, z), fm::mem(w, x))),
                             fm::exists(y, Sort::V, fm::mem(y, z)),
                             fm::exists(y2, Sort::V, fm::conj({fm::mem(y2, x), fm::notin(y2, z)}))});
    auto cross = fm::exists(
        e, Sort::TE,
        fm::exists(a, Sort::V,
                   fm::conj({fm::mem(a, z), inc(e, a),
                             fm::exists(b, Sort::V, fm::conj({fm::mem(b, x), fm::notin(b, z), inc(e, b)}))})));
    return fm::forall_set(z, Sort::V, fm::implies(premise, cross));
  }

  // -- paths -----------------------------------------------------------------

  Pred2 default_succ() {
    return [this](const std::string& a, const std::string& b) { return psuc(a, b); };
  }

  // Every edge of P except e_z has a successor in P.
  FormulaPtr std_chain(const std::string& p, const std::string& ez, const Pred2& succ) {
    auto a = fresh("a"), b = fresh("b");
    return fm::forall(a, Sort::TE,
                      fm::implies(fm::conj({fm::mem(a, p), fm::neq(a, ez)}),
                                  fm::exists(b, Sort::TE, fm::conj({fm::mem(b, p), succ(a, b)}))));
  }

  // Undirected non-strict chain: orient P away from u with a 2-colouring Z of
  // its vertices and an alternating edge set Q, then demand that every edge
  // be followed by the edges at its head.
  FormulaPtr oriented_chain(const std::string& u, const std::string& p, const std::string& es, const Pred2& succ) {
    auto z = fresh("Z"), q = fresh("Q");
    auto w = fresh("w"), e = fresh("e"), a = fresh("a"), a2 = fresh("a"), w1 = fresh("w"), w2 = fresh("w");
    auto c = fresh("a"), d = fresh("b"), w3 = fresh("w"), f = fresh("a"), g = fresh("b"), w4 = fresh("w");
    auto in_z = fm::forall(w, Sort::V, fm::implies(fm::mem(w, z), fm::exists(e, Sort::TE, fm::conj({fm::mem(e, p), inc(e, w)}))));
    auto q_in_p = fm::forall(a, Sort::TE, fm::implies(fm::mem(a, q), fm::mem(a, p)));
    auto split = fm::forall(
        a2, Sort::TE,
        fm::implies(fm::mem(a2, p), fm::conj({fm::exists(w1, Sort::V, fm::conj({inc(a2, w1), fm::mem(w1, z)})),
                                              fm::exists(w2, Sort::V, fm::conj({inc(a2, w2), fm::notin(w2, z)}))})));
    auto alternate = fm::forall(
        c, Sort::TE,
        fm::forall(d, Sort::TE,
                   fm::implies(fm::conj({fm::mem(c, p), fm::mem(d, p), fm::neq(c, d),
                                         fm::exists(w3, Sort::V, fm::conj({inc(c, w3), inc(d, w3)}))}),
                               fm::iff(fm::mem(c, q), fm::notin(d, q)))));
    auto head = [&](const std::string& x, const std::string& y) {
      return fm::conj({inc(x, y), fm::iff(fm::mem(y, z), fm::notin(x, q))});
    };
    auto follow = fm::forall(
        f, Sort::TE,
        fm::forall(g, Sort::TE,
                   fm::implies(fm::conj({fm::mem(f, p), fm::mem(g, p), fm::neq(f, g),
                                         fm::exists(w4, Sort::V, fm::conj({head(f, w4), inc(g, w4)}))}),
                               succ(f, g))));
    return fm::exists_set(
        z, Sort::V,
        fm::conj({in_z, fm::mem(u, z),
                  fm::exists_set(q, Sort::TE, fm::conj({q_in_p, fm::mem(es, q), split, alternate, follow}))}));
  }

  // P is the edge set of a temporal path from u to v.
  FormulaPtr pepath(const std::string& u, const std::string& v, const std::string& p, const PathShape& shape = {}) {
    auto succ = shape.succ ? shape.succ : default_succ();
    auto es = fresh("es"), ez = fresh("ez");
    auto chain = (!tag_.directed && !tag_.strict) ? oriented_chain(u, p, es, succ) : std_chain(p, ez, succ);
    std::vector<FormulaPtr> inner{fm::mem(ez, p), tgt(ez, v)};
    if (shape.hook) inner.push_back(shape.hook(es, ez));
    inner.push_back(chain);
    auto ends = fm::exists(es, Sort::TE, fm::conj({fm::mem(es, p), src(es, u), fm::exists(ez, Sort::TE, fm::conj(inner))}));
    auto w = fresh("w"), e = fresh("e");
    auto interior = fm::forall(
        w, Sort::V,
        fm::implies(fm::conj({fm::neq(w, u), fm::neq(w, v), fm::exists(e, Sort::TE, fm::conj({fm::mem(e, p), inc(e, w)}))}),
                    deg(w, p, 2)));
    std::vector<FormulaPtr> parts{deg(u, p, 1), deg(v, p, 1), interior, ends};
    if (shape.tecc) parts.push_back(tecc(p, u));
    return fm::conj(parts);
  }

  // A path from u to v whose edges lie inside the vertex set pv.
  FormulaPtr pvpath(const std::string& u, const std::string& v, const std::string& pv,
                    const std::vector<Pred>& edge_filters = {}, const PathShape& shape = {}) {
    auto pe = fresh("PE"), a = fresh("a"), x1 = fresh("x"), x2 = fresh("y");
    std::vector<FormulaPtr> parts{fm::forall(
        a, Sort::TE,
        fm::implies(fm::mem(a, pe),
                    fm::exists(x1, Sort::V,
                               fm::conj({fm::mem(x1, pv), inc(a, x1),
                                         fm::exists(x2, Sort::V, fm::conj({fm::mem(x2, pv), fm::neq(x1, x2), inc(a, x2)}))}))))};
    for (auto& flt : edge_filters) {
      auto b = fresh("a");
      parts.push_back(fm::forall(b, Sort::TE, fm::implies(fm::mem(b, pe), flt(b))));
    }
    parts.push_back(pepath(u, v, pe, shape));
    return fm::exists_set(pe, Sort::TE, fm::conj(parts));
  }

  // u != v and a temporal path from u to v using allowed vertices and edges.
  FormulaPtr path(const std::string& u, const std::string& v, const Pred& vertex_filter = {},
                  const std::vector<Pred>& edge_filters = {}, const PathShape& shape = {}) {
    auto pv = fresh("PV");
    std::vector<FormulaPtr> parts;
    if (vertex_filter) {
      auto x = fresh("x");
      parts.push_back(fm::forall(x, Sort::V, fm::implies(fm::mem(x, pv), vertex_filter(x))));
    }
    parts.push_back(fm::mem(u, pv));
    parts.push_back(fm::mem(v, pv));
    parts.push_back(pvpath(u, v, pv, edge_filters, shape));
    return fm::conj({fm::neq(u, v), fm::exists_set(pv, Sort::V, fm::conj(parts))});
  }

  FormulaPtr path_vertex(const std::string& u, const std::string& v, const std::string& x) {
    return path(u, v, [x](const std::string& y) { return fm::mem(y, x); });
  }

  // e shares its static edge with some member of X.
  FormulaPtr on_static(const std::string& e, const std::string& x) {
    auto f = fresh("f");
    return fm::exists(f, Sort::TE, fm::conj({fm::mem(f, x), sharededge(e, f)}));
  }

  // Time variables tau_1 < ... < tau_L pinned to 1..L, one successor at a time.
  FormulaPtr pinned(const std::function<FormulaPtr(const std::vector<std::string>&)>& body) {
    if (!lifetime()) unsupported("time unrolling");
    std::vector<std::string> taus;
    for (int i = 0; i < tag_.lifetime; ++i) taus.push_back(fresh("tau"));
    std::function<FormulaPtr(int)> rec = [&](int i) -> FormulaPtr {
      if (i == tag_.lifetime) return body(taus);
      auto& t = taus[static_cast<std::size_t>(i)];
      auto s = fresh("s");
      FormulaPtr first;
      if (i == 0) {
        first = fm::neg(fm::exists(s, Sort::L, fm::rel("ltT", {s, t})));
      } else {
        auto& prev = taus[static_cast<std::size_t>(i - 1)];
        first = fm::conj({fm::rel("ltT", {prev, t}),
                          fm::neg(fm::exists(s, Sort::L, fm::conj({fm::rel("ltT", {prev, s}), fm::rel("ltT", {s, t})})))});
      }
      return fm::exists(t, Sort::L, fm::conj({first, rec(i + 1)}));
    };
    return rec(0);
  }

  // Strict walk x_0 = u, ..., x_L = v with one wait or move per time step.
  FormulaPtr path_fo(const std::string& u, const std::string& v) {
    if (!lifetime() || !tag_.strict) unsupported("unrolled strict path");
    return fm::conj({fm::neq(u, v), pinned([&](const std::vector<std::string>& taus) {
                       std::function<FormulaPtr(int, const std::string&)> rec = [&](int i, const std::string& at) -> FormulaPtr {
                         if (i == static_cast<int>(taus.size())) return fm::eq(at, v);
                         auto x = fresh("x");
                         return fm::exists(x, Sort::V, fm::conj({step(at, x, taus[static_cast<std::size_t>(i)]), rec(i + 1, x)}));
                       };
                       return rec(0, u);
                     })});
  }

  FormulaPtr step(const std::string& a, const std::string& b, const std::string& t) {
    auto e = fresh("e");
    return fm::disj({fm::eq(a, b), fm::exists(e, Sort::TE, fm::conj({pres(e, t), joins(e, a, b)}))});
  }

 private:
  Tag tag_;
  int counter_ = 0;
};

// ---------------------------------------------------------------------------
// Problem registry

enum class ProblemKind { Pair, PairSet, Set, Family, Sentence };

struct ProblemInfo {
  std::string name;
  ProblemKind kind;
  std::vector<Encoding> encodings;
  bool strict = true;
  bool nonstrict = true;
  std::vector<std::string> params;
  Sort set_sort = Sort::V;
  std::optional<Direction> objective;
  std::string summary;
};

inline const char* problem_kind_name(ProblemKind k) {
  switch (k) {
    case ProblemKind::Pair: return "pair";
    case ProblemKind::PairSet: return "pair_set";
    case ProblemKind::Set: return "set";
    case ProblemKind::Family: return "family";
    case ProblemKind::Sentence: return "sentence";
  }
  return "?";
}

inline const std::vector<ProblemInfo>& problem_registry() {
  using E = Encoding;
  static const std::vector<E> all{E::Lifetime, E::Degree, E::Vim, E::Tim};
  static const std::vector<E> lvt{E::Lifetime, E::Vim, E::Tim};
  static const std::vector<E> lv{E::Lifetime, E::Vim};
  static const std::vector<E> l{E::Lifetime};
  const auto mn = std::optional<Direction>(Direction::Min);
  const auto mx = std::optional<Direction>(Direction::Max);
  const auto none = std::optional<Direction>();
  using K = ProblemKind;
  static const std::vector<ProblemInfo> reg{
      {"path", K::Pair, all, true, true, {}, Sort::V, none, "temporal path from u to v"},
      {"path_fo", K::Pair, l, true, false, {}, Sort::V, none, "strict path by first-order walk unrolling"},
      {"path_vertex", K::PairSet, all, true, true, {}, Sort::V, none, "path from u to v inside vertex set X"},
      {"path_static_edge", K::PairSet, all, true, true, {}, Sort::TE, none, "path using only static edges of X"},
      {"path_temporal_edge", K::PairSet, all, true, true, {}, Sort::TE, none, "path using only temporal edges of X"},
      {"restless", K::Pair, lvt, true, true, {"delta"}, Sort::V, none, "path waiting at most delta per vertex"},
      {"disjoint_edge", K::Pair, all, true, true, {}, Sort::V, none, "two edge-disjoint paths from u to v"},
      {"disjoint_vertex", K::Pair, all, true, true, {}, Sort::V, none, "two paths on disjoint vertex sets"},
      {"disjoint_vertex_interior", K::Pair, all, true, true, {}, Sort::V, none, "two internally vertex-disjoint paths"},
      {"component_open", K::Set, all, true, true, {}, Sort::V, mx, "open temporal connected component"},
      {"component_closed", K::Set, all, true, true, {}, Sort::V, mx, "closed temporal connected component"},
      {"component_unilateral_open", K::Set, all, true, true, {}, Sort::V, mx, "unilateral open component"},
      {"component_unilateral_closed", K::Set, all, true, true, {}, Sort::V, mx, "unilateral closed component"},
      {"separator_vertex", K::PairSet, all, true, true, {}, Sort::V, mn, "vertex set removing all s-z paths"},
      {"separator_static_edge", K::PairSet, all, true, true, {}, Sort::TE, mn, "static edges removing all s-z paths"},
      {"separator_temporal_edge", K::PairSet, all, true, true, {}, Sort::TE, mn, "temporal edges removing all s-z paths"},
      {"spanner", K::Set, all, true, true, {}, Sort::V, mn, "vertex set preserving all reachability"},
      {"exploration_vertex", K::Sentence, l, true, false, {}, Sort::V, none, "walk visiting every vertex"},
      {"exploration_edge", K::Sentence, l, true, false, {}, Sort::V, none, "walk traversing every static edge"},
      {"clique", K::Set, lv, true, true, {"Delta"}, Sort::V, mx, "Delta temporal clique"},
      {"independent_set", K::Set, lv, true, true, {"Delta"}, Sort::V, mx, "Delta temporal independent set"},
      {"feedback_temporal_edge", K::Set, all, true, true, {}, Sort::TE, mn, "temporal edges hitting every temporal cycle"},
      {"feedback_connection", K::Set, all, true, true, {}, Sort::TE, mn, "static edges hitting every temporal cycle"},
      {"colouring", K::Sentence, l, true, true, {"k"}, Sort::V, none, "every snapshot is k-colourable"},
      {"matching_delta", K::Set, lv, true, true, {"Delta"}, Sort::TE, mx, "Delta-matching"},
      {"matching_temporal", K::Set, all, true, true, {}, Sort::TE, mx, "no edge of M can follow another"},
      {"tpcover", K::Sentence, all, true, true, {"k"}, Sort::V, none, "partition of the edges into k temporal paths"},
      {"multistage_vc", K::Family, l, true, true, {"l"}, Sort::V, mn, "per-snapshot covers changing by at most l"},
      {"timeline_vc", K::Family, l, true, true, {"k", "l"}, Sort::V, mn, "timeline vertex cover"},
      {"tvc", K::Family, l, true, true, {}, Sort::V, mn, "temporal vertex cover"},
      {"delta_tvc", K::Family, l, true, true, {"Delta"}, Sort::V, mn, "Delta-temporal vertex cover"},
      {"edge_cover", K::Set, l, true, true, {}, Sort::TE, mn, "temporal edge cover"},
      {"snapshot_ds", K::Family, l, true, true, {}, Sort::V, mn, "dominating set of every snapshot"},
      {"timeline_ds", K::Family, l, true, true, {"k", "l"}, Sort::V, mn, "timeline dominating set"},
      {"overtime_ds", K::Set, l, true, true, {}, Sort::V, mn, "dominating set over time"},
      {"permanent_ds", K::Set, l, true, true, {}, Sort::V, mn, "permanent dominating set"},
      {"reach_ds", K::Set, all, true, true, {}, Sort::V, mn, "temporal reachability dominating set"},
  };
  return reg;
}

inline const ProblemInfo& problem_info(const std::string& name) {
  for (auto& p : problem_registry())
    if (p.name == name) return p;
  fail(ErrorCode::InvalidInput, "unknown problem '" + name + "'");
}

inline bool supports(const ProblemInfo& p, Encoding e, bool strict) {
  if (std::find(p.encodings.begin(), p.encodings.end(), e) == p.encodings.end()) return false;
  return strict ? p.strict : p.nonstrict;
}

// Number of sets in a family solution.
inline int family_count(const std::string& name, int lifetime, const Params& p) {
  if (name == "timeline_vc" || name == "timeline_ds") return static_cast<int>(time_windows(lifetime, p.l).size());
  return lifetime;
}

inline std::vector<std::string> family_names(int count) {
  std::vector<std::string> out;
  for (int i = 1; i <= count; ++i) out.push_back("X" + std::to_string(i));
  return out;
}

namespace detail {

inline void check_params(const ProblemInfo& info, const Params& p) {
  for (auto& name : info.params) {
    int v = name == "k" ? p.k : name == "l" ? p.l : name == "Delta" ? p.Delta : p.delta;
    if (v < 1) fail(ErrorCode::InvalidInput, "parameter " + name + " must be a positive integer");
  }
}

// Every pair of distinct members of x satisfies r.
inline FormulaPtr pairwise(Builder& b, const std::string& x, const Pred2& r) {
  auto a = b.fresh("a"), c = b.fresh("b");
  return fm::forall(a, Sort::V,
                    fm::forall(c, Sort::V, fm::implies(fm::conj({fm::mem(a, x), fm::mem(c, x), fm::neq(a, c)}), r(a, c))));
}

// v is in s or has a neighbour in s through an edge satisfying when(e).
inline FormulaPtr dominated(Builder& b, const std::string& v, const std::string& s, const Pred& when) {
  auto e = b.fresh("e"), w = b.fresh("w");
  std::vector<FormulaPtr> parts;
  if (when) parts.push_back(when(e));
  parts.push_back(b.inc(e, v));
  parts.push_back(fm::exists(w, Sort::V, fm::conj({fm::neq(w, v), fm::mem(w, s), b.inc(e, w)})));
  return fm::disj({fm::mem(v, s), fm::exists(e, Sort::TE, fm::conj(parts))});
}

// e is covered at time t by set s.
inline FormulaPtr covered_at(Builder& b, const std::string& e, const std::string& t, const std::string& s) {
  auto w = b.fresh("w");
  return fm::conj({Builder::pres(e, t), fm::exists(w, Sort::V, fm::conj({b.inc(e, w), fm::mem(w, s)}))});
}

inline Built finish(FormulaPtr f, std::vector<Variable> free_vars, std::vector<Variable> solution) {
  Built out;
  out.formula = f;
  out.free_vars = std::move(free_vars);
  out.solution_vars = solution;
  FormulaPtr closed = f;
  for (auto it = solution.rbegin(); it != solution.rend(); ++it) closed = fm::exists_set(it->name, it->guard, closed);
  out.closed = closed;
  return out;
}

inline Variable elem(const std::string& n, Sort s = Sort::V) { return {n, Order::Element, s}; }
inline Variable set(const std::string& n, Sort s) { return {n, Order::Set, s}; }

}  // namespace detail

inline Built build_problem(const Tag& tag, const std::string& name, const Params& params = {}) {
  const auto& info = problem_info(name);
  if (!supports(info, tag.encoding, tag.strict))
    fail(ErrorCode::UnsupportedCombination, name + " is not available for encoding " + encoding_name(tag.encoding) +
                                                (tag.strict ? " (strict)" : " (non-strict)"));
  detail::check_params(info, params);
  Builder b(tag);
  using detail::elem;
  using detail::finish;
  using detail::set;
  const std::vector<Variable> uv{elem("u"), elem("v")};
  const std::string X = "X";

  if (name == "path") return finish(b.path("u", "v"), uv, {});
  if (name == "path_fo") return finish(b.path_fo("u", "v"), uv, {});
  if (name == "path_vertex") return finish(b.path_vertex("u", "v", X), {elem("u"), elem("v"), set(X, Sort::V)}, {});
  if (name == "path_static_edge")
    return finish(b.path("u", "v", {}, {[&](const std::string& e) { return b.on_static(e, X); }}),
                  {elem("u"), elem("v"), set(X, Sort::TE)}, {});
  if (name == "path_temporal_edge")
    return finish(b.path("u", "v", {}, {[&](const std::string& e) { return fm::mem(e, X); }}),
                  {elem("u"), elem("v"), set(X, Sort::TE)}, {});
  if (name == "restless") {
    PathShape shape;
    shape.succ = [&](const std::string& x, const std::string& y) { return b.deltapsuc(x, y, params.delta); };
    shape.tecc = false;
    return finish(b.path("u", "v", {}, {}, shape), uv, {});
  }
  if (name == "disjoint_edge") {
    auto p1 = b.fresh("P"), p2 = b.fresh("P"), a = b.fresh("a");
    auto second = fm::exists_set(
        p2, Sort::TE, fm::conj({fm::forall(a, Sort::TE, fm::implies(fm::mem(a, p2), fm::notin(a, p1))), b.pepath("u", "v", p2)}));
    return finish(fm::conj({fm::neq("u", "v"), fm::exists_set(p1, Sort::TE, fm::conj({b.pepath("u", "v", p1), second}))}), uv, {});
  }
  if (name == "disjoint_vertex") {
    auto x1 = b.fresh("PV"), x2 = b.fresh("PV"), y = b.fresh("x");
    auto second = fm::exists_set(
        x2, Sort::V, fm::conj({fm::forall(y, Sort::V, fm::implies(fm::mem(y, x2), fm::notin(y, x1))), b.pvpath("u", "v", x2)}));
    return finish(fm::conj({fm::neq("u", "v"), fm::exists_set(x1, Sort::V, fm::conj({b.pvpath("u", "v", x1), second}))}), uv, {});
  }
  if (name == "disjoint_vertex_interior") {
    auto p1 = b.fresh("P"), p2 = b.fresh("P"), a = b.fresh("a"), x = b.fresh("x"), c = b.fresh("b");
    auto outside = fm::forall(
        x, Sort::V,
        fm::implies(b.inc(a, x), fm::disj({fm::eq(x, "u"), fm::eq(x, "v"),
                                           fm::neg(fm::exists(c, Sort::TE, fm::conj({fm::mem(c, p1), b.inc(c, x)})))})));
    auto second = fm::exists_set(p2, Sort::TE,
                                 fm::conj({fm::forall(a, Sort::TE, fm::implies(fm::mem(a, p2), outside)), b.pepath("u", "v", p2)}));
    return finish(fm::conj({fm::neq("u", "v"), fm::exists_set(p1, Sort::TE, fm::conj({b.pepath("u", "v", p1), second}))}), uv, {});
  }
  if (name == "component_open" || name == "component_unilateral_open") {
    const bool uni = name == "component_unilateral_open";
    auto rel = [&](const std::string& a, const std::string& c) {
      return uni ? fm::disj({b.path(a, c), b.path(c, a)}) : fm::conj({b.path(a, c), b.path(c, a)});
    };
    auto y = b.fresh("y"), a = b.fresh("a");
    auto maximal = fm::neg(fm::exists(
        y, Sort::V, fm::conj({fm::notin(y, X), fm::forall(a, Sort::V, fm::implies(fm::mem(a, X), rel(a, y)))})));
    return finish(fm::conj({detail::pairwise(b, X, rel), maximal}), {set(X, Sort::V)}, {set(X, Sort::V)});
  }
  if (name == "component_closed" || name == "component_unilateral_closed") {
    const bool uni = name == "component_unilateral_closed";
    auto within = [&](const std::string& s) {
      return [&b, s, uni](const std::string& a, const std::string& c) {
        return uni ? fm::disj({b.path_vertex(a, c, s), b.path_vertex(c, a, s)})
                   : fm::conj({b.path_vertex(a, c, s), b.path_vertex(c, a, s)});
      };
    };
    auto y = b.fresh("Y"), x = b.fresh("x"), w = b.fresh("y");
    auto bigger = fm::exists_set(
        y, Sort::V,
        fm::conj({fm::forall(x, Sort::V, fm::implies(fm::mem(x, X), fm::mem(x, y))),
                  fm::exists(w, Sort::V, fm::conj({fm::mem(w, y), fm::notin(w, X)})), detail::pairwise(b, y, within(y))}));
    return finish(fm::conj({detail::pairwise(b, X, within(X)), fm::neg(bigger)}), {set(X, Sort::V)}, {set(X, Sort::V)});
  }
  if (name == "separator_vertex") {
    auto f = fm::conj({fm::notin("s", X), fm::notin("z", X),
                       fm::neg(b.path("s", "z", [&](const std::string& y) { return fm::notin(y, X); }))});
    return finish(f, {elem("s"), elem("z"), set(X, Sort::V)}, {set(X, Sort::V)});
  }
  if (name == "separator_static_edge") {
    auto f = fm::neg(b.path("s", "z", {}, {[&](const std::string& e) { return fm::neg(b.on_static(e, X)); }}));
    return finish(f, {elem("s"), elem("z"), set(X, Sort::TE)}, {set(X, Sort::TE)});
  }
  if (name == "separator_temporal_edge") {
    auto f = fm::neg(b.path("s", "z", {}, {[&](const std::string& e) { return fm::notin(e, X); }}));
    return finish(f, {elem("s"), elem("z"), set(X, Sort::TE)}, {set(X, Sort::TE)});
  }
  if (name == "spanner") {
    auto a = b.fresh("a"), c = b.fresh("b");
    auto f = fm::forall(a, Sort::V, fm::forall(c, Sort::V, fm::implies(b.path(a, c), b.path_vertex(a, c, X))));
    return finish(f, {set(X, Sort::V)}, {set(X, Sort::V)});
  }
  if (name == "exploration_vertex" || name == "exploration_edge") {
    const bool edges = name == "exploration_edge";
    auto f = b.pinned([&](const std::vector<std::string>& taus) {
      std::vector<std::string> xs;
      for (std::size_t i = 0; i <= taus.size(); ++i) xs.push_back(b.fresh("x"));
      FormulaPtr cover;
      if (!edges) {
        auto w = b.fresh("w");
        std::vector<FormulaPtr> alts;
        for (auto& x : xs) alts.push_back(fm::eq(w, x));
        cover = fm::forall(w, Sort::V, fm::disj(alts));
      } else {
        auto e = b.fresh("e");
        std::vector<FormulaPtr> alts;
        for (std::size_t i = 1; i < xs.size(); ++i) {
          if (b.tag().directed) {
            alts.push_back(fm::conj({fm::neq(xs[i - 1], xs[i]), fm::rel("source", {e, xs[i - 1]}), fm::rel("target", {e, xs[i]})}));
          } else {
            alts.push_back(fm::conj({fm::neq(xs[i - 1], xs[i]), b.inc(e, xs[i - 1]), b.inc(e, xs[i])}));
          }
        }
        cover = fm::forall(e, Sort::TE, fm::disj(alts));
      }
      std::function<FormulaPtr(std::size_t)> rec = [&](std::size_t i) -> FormulaPtr {
        if (i == xs.size()) return cover;
        FormulaPtr inner = rec(i + 1);
        if (i > 0) inner = fm::conj({b.step(xs[i - 1], xs[i], taus[i - 1]), inner});
        return fm::exists(xs[i], Sort::V, inner);
      };
      return rec(0);
    });
    return finish(f, {}, {});
  }
  if (name == "clique" || name == "independent_set") {
    const Sort ts = b.time_sort();
    auto rel = [&](const std::string& a, const std::string& c) {
      auto t = b.fresh("t"), t2 = b.fresh("t"), e = b.fresh("e");
      auto hit = fm::exists(
          t2, ts, fm::conj({b.interval(t, t2, params.Delta - 1),
                            fm::exists(e, Sort::TE, fm::conj({Builder::pres(e, t2), b.inc(e, a), b.inc(e, c)}))}));
      if (name == "clique") return fm::forall(t, ts, hit);
      return fm::neg(fm::exists(t, ts, hit));
    };
    return finish(detail::pairwise(b, X, rel), {set(X, Sort::V)}, {set(X, Sort::V)});
  }
  if (name == "feedback_temporal_edge" || name == "feedback_connection") {
    Pred allowed;
    if (name == "feedback_temporal_edge") {
      allowed = [&](const std::string& e) { return fm::notin(e, X); };
    } else {
      allowed = [&](const std::string& e) { return fm::neg(b.on_static(e, X)); };
    }
    auto v = b.fresh("v"), w = b.fresh("w"), ec = b.fresh("ec"), p = b.fresh("P"), a = b.fresh("a");
    PathShape shape;
    shape.hook = [&](const std::string& es, const std::string& ez) {
      if (b.tag().directed) return b.psuc(ez, ec);
      return fm::conj({fm::neq(es, ez), b.psuc(ez, ec)});
    };
    auto cyc = fm::exists_set(
        p, Sort::TE,
        fm::conj({fm::forall(a, Sort::TE, fm::implies(fm::mem(a, p), fm::conj({allowed(a), fm::neq(a, ec)}))),
                  b.pepath(v, w, p, shape)}));
    auto f = fm::forall(
        v, Sort::V,
        fm::neg(fm::exists(
            w, Sort::V,
            fm::conj({fm::neq(w, v), fm::exists(ec, Sort::TE, fm::conj({allowed(ec), b.src(ec, w), b.tgt(ec, v), cyc}))}))));
    return finish(f, {set(X, Sort::TE)}, {set(X, Sort::TE)});
  }
  if (name == "colouring") {
    const int k = params.k;
    auto f = b.pinned([&](const std::vector<std::string>& taus) {
      std::vector<FormulaPtr> blocks;
      for (auto& tau : taus) {
        std::vector<std::string> ys;
        for (int j = 0; j < k; ++j) ys.push_back(b.fresh("Y"));
        auto w = b.fresh("w"), e = b.fresh("e"), x = b.fresh("x"), y = b.fresh("y");
        std::vector<FormulaPtr> some, clash;
        for (auto& s : ys) {
          some.push_back(fm::mem(w, s));
          clash.push_back(fm::conj({fm::mem(x, s), fm::mem(y, s)}));
        }
        auto body = fm::conj(
            {fm::forall(w, Sort::V, fm::disj(some)),
             fm::forall(e, Sort::TE,
                        fm::implies(Builder::pres(e, tau),
                                    fm::forall(x, Sort::V,
                                               fm::forall(y, Sort::V,
                                                          fm::implies(fm::conj({fm::neq(x, y), b.inc(e, x), b.inc(e, y)}),
                                                                      fm::neg(fm::disj(clash)))))))});
        for (auto it = ys.rbegin(); it != ys.rend(); ++it) body = fm::exists_set(*it, Sort::V, body);
        blocks.push_back(body);
      }
      return fm::conj(blocks);
    });
    return finish(f, {}, {});
  }
  if (name == "matching_delta" || name == "matching_temporal") {
    const std::string M = X;
    auto a = b.fresh("a"), c = b.fresh("b");
    FormulaPtr bad;
    if (name == "matching_temporal") {
      bad = b.psuc(a, c);
    } else {
      auto w = b.fresh("w");
      bad = fm::conj({fm::exists(w, Sort::V, fm::conj({b.inc(a, w), b.inc(c, w)})), b.teint(a, c, params.Delta - 1)});
    }
    auto f = fm::forall(
        a, Sort::TE, fm::forall(c, Sort::TE, fm::implies(fm::conj({fm::mem(a, M), fm::mem(c, M), fm::neq(a, c)}), fm::neg(bad))));
    return finish(f, {set(M, Sort::TE)}, {set(M, Sort::TE)});
  }
  if (name == "tpcover") {
    const int k = params.k;
    std::vector<std::string> ps;
    for (int i = 0; i < k; ++i) ps.push_back(b.fresh("P"));
    std::function<FormulaPtr(int)> rec = [&](int i) -> FormulaPtr {
      auto& p = ps[static_cast<std::size_t>(i)];
      std::vector<FormulaPtr> parts;
      for (int j = 0; j < i; ++j) {
        auto a = b.fresh("a");
        parts.push_back(fm::forall(a, Sort::TE, fm::implies(fm::mem(a, p), fm::notin(a, ps[static_cast<std::size_t>(j)]))));
      }
      if (i == k - 1) {
        auto a = b.fresh("a");
        std::vector<FormulaPtr> any;
        for (auto& q : ps) any.push_back(fm::mem(a, q));
        parts.push_back(fm::forall(a, Sort::TE, fm::disj(any)));
      }
      auto x = b.fresh("u"), y = b.fresh("v");
      parts.push_back(fm::exists(x, Sort::V, fm::exists(y, Sort::V, fm::conj({fm::neq(x, y), b.pepath(x, y, p)}))));
      if (i + 1 < k) parts.push_back(rec(i + 1));
      return fm::exists_set(p, Sort::TE, fm::conj(parts));
    };
    return finish(rec(0), {}, {});
  }

  // Families and covers over the lifetime encoding.
  const int lam = tag.lifetime;
  std::vector<Variable> fam;
  for (auto& n : family_names(family_count(name, lam, params))) fam.push_back(set(n, Sort::V));
  auto fname = [&](int i) { return fam[static_cast<std::size_t>(i)].name; };

  if (name == "multistage_vc") {
    auto f = b.pinned([&](const std::vector<std::string>& taus) {
      std::vector<FormulaPtr> parts;
      for (int i = 0; i < lam; ++i) {
        auto e = b.fresh("e"), w = b.fresh("w");
        parts.push_back(fm::forall(
            e, Sort::TE,
            fm::implies(Builder::pres(e, taus[static_cast<std::size_t>(i)]),
                        fm::exists(w, Sort::V, fm::conj({b.inc(e, w), fm::mem(w, fname(i))})))));
      }
      for (int i = 0; i + 1 < lam; ++i) {
        auto x = fname(i), y = fname(i + 1);
        parts.push_back(fm::neg(b.card(params.l + 1, Sort::V, [&](const std::string& c) {
          return fm::disj({fm::conj({fm::mem(c, x), fm::notin(c, y)}), fm::conj({fm::notin(c, x), fm::mem(c, y)})});
        })));
      }
      return fm::conj(parts);
    });
    return finish(f, fam, fam);
  }
  if (name == "timeline_vc" || name == "timeline_ds") {
    auto wins = time_windows(lam, params.l);
    const bool vc = name == "timeline_vc";
    auto f = b.pinned([&](const std::vector<std::string>& taus) {
      std::vector<FormulaPtr> parts;
      if (vc) {
        auto e = b.fresh("e");
        std::vector<FormulaPtr> alts;
        for (std::size_t s = 0; s < wins.size(); ++s)
          for (int t = wins[s].first; t <= wins[s].second; ++t)
            alts.push_back(detail::covered_at(b, e, taus[static_cast<std::size_t>(t - 1)], fname(static_cast<int>(s))));
        parts.push_back(fm::forall(e, Sort::TE, fm::disj(alts)));
      } else {
        auto v = b.fresh("v");
        std::vector<FormulaPtr> each;
        for (int t = 1; t <= lam; ++t) {
          std::vector<FormulaPtr> alts;
          for (std::size_t s = 0; s < wins.size(); ++s)
            if (wins[s].first <= t && t <= wins[s].second) {
              auto tau = taus[static_cast<std::size_t>(t - 1)];
              alts.push_back(detail::dominated(b, v, fname(static_cast<int>(s)),
                                               [tau](const std::string& e) { return Builder::pres(e, tau); }));
            }
          each.push_back(fm::disj(alts));
        }
        parts.push_back(fm::forall(v, Sort::V, fm::conj(each)));
      }
      // No vertex is active in more than k windows.
      const int m = static_cast<int>(wins.size());
      if (params.k < m) {
        auto v = b.fresh("v");
        std::vector<FormulaPtr> over;
        std::vector<int> pick;
        std::function<void(int)> choose = [&](int start) {
          if (static_cast<int>(pick.size()) == params.k + 1) {
            std::vector<FormulaPtr> all;
            for (int s : pick) all.push_back(fm::mem(v, fname(s)));
            over.push_back(fm::conj(all));
            return;
          }
          for (int s = start; s < m; ++s) {
            pick.push_back(s);
            choose(s + 1);
            pick.pop_back();
          }
        };
        choose(0);
        parts.push_back(fm::forall(v, Sort::V, fm::neg(fm::disj(over))));
      }
      return fm::conj(parts);
    });
    return finish(f, fam, fam);
  }
  if (name == "tvc") {
    auto f = b.pinned([&](const std::vector<std::string>& taus) {
      auto e = b.fresh("e"), e2 = b.fresh("f");
      std::vector<FormulaPtr> alts;
      for (int i = 0; i < lam; ++i) alts.push_back(detail::covered_at(b, e2, taus[static_cast<std::size_t>(i)], fname(i)));
      return fm::forall(e, Sort::TE, fm::exists(e2, Sort::TE, fm::conj({b.sharededge(e, e2), fm::disj(alts)})));
    });
    return finish(f, fam, fam);
  }
  if (name == "delta_tvc") {
    auto f = b.pinned([&](const std::vector<std::string>& taus) {
      std::vector<FormulaPtr> parts;
      for (auto [lo, hi] : time_windows(lam, params.Delta)) {
        auto e = b.fresh("e"), e2 = b.fresh("f");
        std::vector<FormulaPtr> in, alts;
        for (int t = lo; t <= hi; ++t) {
          in.push_back(Builder::pres(e, taus[static_cast<std::size_t>(t - 1)]));
          alts.push_back(detail::covered_at(b, e2, taus[static_cast<std::size_t>(t - 1)], fname(t - 1)));
        }
        parts.push_back(fm::forall(
            e, Sort::TE, fm::implies(fm::disj(in), fm::exists(e2, Sort::TE, fm::conj({b.sharededge(e, e2), fm::disj(alts)})))));
      }
      return fm::conj(parts);
    });
    return finish(f, fam, fam);
  }
  if (name == "snapshot_ds") {
    auto f = b.pinned([&](const std::vector<std::string>& taus) {
      std::vector<FormulaPtr> parts;
      for (int i = 0; i < lam; ++i) {
        auto v = b.fresh("v");
        auto tau = taus[static_cast<std::size_t>(i)];
        parts.push_back(fm::forall(
            v, Sort::V, detail::dominated(b, v, fname(i), [tau](const std::string& e) { return Builder::pres(e, tau); })));
      }
      return fm::conj(parts);
    });
    return finish(f, fam, fam);
  }
  if (name == "edge_cover") {
    auto e = b.fresh("e"), v = b.fresh("v"), f2 = b.fresh("f"), t = b.fresh("t");
    auto f = fm::forall(
        e, Sort::TE,
        fm::forall(v, Sort::V,
                   fm::implies(b.inc(e, v),
                               fm::exists(f2, Sort::TE,
                                          fm::conj({fm::mem(f2, X), b.inc(f2, v),
                                                    fm::exists(t, Sort::L, fm::conj({Builder::pres(e, t), Builder::pres(f2, t)}))})))));
    return finish(f, {set(X, Sort::TE)}, {set(X, Sort::TE)});
  }
  if (name == "overtime_ds") {
    auto v = b.fresh("v");
    return finish(fm::forall(v, Sort::V, detail::dominated(b, v, X, {})), {set(X, Sort::V)}, {set(X, Sort::V)});
  }
  if (name == "permanent_ds") {
    auto t = b.fresh("t"), v = b.fresh("v");
    auto f = fm::forall(t, Sort::L,
                        fm::forall(v, Sort::V, detail::dominated(b, v, X, [t](const std::string& e) { return Builder::pres(e, t); })));
    return finish(f, {set(X, Sort::V)}, {set(X, Sort::V)});
  }
  if (name == "reach_ds") {
    auto v = b.fresh("v"), a = b.fresh("a");
    auto f = fm::forall(
        v, Sort::V, fm::disj({fm::mem(v, X), fm::exists(a, Sort::V, fm::conj({fm::mem(a, X), b.path(a, v)}))}));
    return finish(f, {set(X, Sort::V)}, {set(X, Sort::V)});
  }
  fail(ErrorCode::InvalidInput, "unknown problem '" + name + "'");
}

// ---------------------------------------------------------------------------
// Shortcuts by name, with fixed free-variable conventions.

inline const std::vector<std::string>& shortcut_names() {
  static const std::vector<std::string> names{"edgeset", "sharededge", "bagorder", "psuc",     "tadj",  "card",
                                              "deg",     "interval",   "xcc",      "fpreach",  "tecc",  "teint",
                                              "deltapsuc", "pepath", "pvpath"};
  return names;
}

inline Built build_shortcut(const Tag& tag, const std::string& name, const Params& p = {}) {
  Builder b(tag);
  using detail::elem;
  using detail::set;
  auto tsort = [&]() {
    if (tag.encoding == Encoding::Degree) b.unsupported(name);
    return b.time_sort();
  };
  auto out = [](FormulaPtr f, std::vector<Variable> vars) { return detail::finish(std::move(f), std::move(vars), {}); };
  if (name == "edgeset") return out(b.edgeset("X"), {set("X", Sort::TE)});
  if (name == "sharededge") return out(b.sharededge("e1", "e2"), {elem("e1", Sort::TE), elem("e2", Sort::TE)});
  if (name == "bagorder") return out(b.strictly_before("b1", "b2"), {elem("b1", Sort::B), elem("b2", Sort::B)});
  if (name == "psuc") return out(b.psuc("e1", "e2"), {elem("e1", Sort::TE), elem("e2", Sort::TE)});
  if (name == "tadj") {
    if (tag.encoding == Encoding::Lifetime || tag.encoding == Encoding::Vim)
      return out(b.tadj("x", "y", std::string("t")), {elem("x"), elem("y"), elem("t", tsort())});
    return out(b.tadj("x", "y", std::nullopt), {elem("x"), elem("y")});
  }
  if (name == "card") {
    if (p.k < 1) fail(ErrorCode::InvalidInput, "parameter k must be a positive integer");
    return out(b.card_set(p.k, "X"), {set("X", Sort::V)});
  }
  if (name == "deg") {
    if (p.k < 0) fail(ErrorCode::InvalidInput, "parameter k must be non-negative");
    return out(b.deg("x", "P", p.k), {elem("x"), set("P", Sort::TE)});
  }
  if (name == "interval") {
    if (p.l < 0) fail(ErrorCode::InvalidInput, "parameter l must be non-negative");
    auto s = tsort();
    return out(b.interval("a", "b", p.l), {elem("a", s), elem("b", s)});
  }
  if (name == "xcc") return out(b.xcc("X"), {set("X", Sort::V)});
  if (name == "fpreach") return out(b.fpreach("r", "x", "P"), {elem("r"), elem("x"), set("P", Sort::TE)});
  if (name == "tecc") return out(b.tecc("P"), {set("P", Sort::TE)});
  if (name == "teint") {
    if (p.l < 0) fail(ErrorCode::InvalidInput, "parameter l must be non-negative");
    return out(b.teint("e1", "e2", p.l), {elem("e1", Sort::TE), elem("e2", Sort::TE)});
  }
  if (name == "deltapsuc") {
    if (p.delta < 1) fail(ErrorCode::InvalidInput, "parameter delta must be a positive integer");
    return out(b.deltapsuc("e1", "e2", p.delta), {elem("e1", Sort::TE), elem("e2", Sort::TE)});
  }
  if (name == "pepath") return out(b.pepath("u", "v", "P"), {elem("u"), elem("v"), set("P", Sort::TE)});
  if (name == "pvpath") return out(b.pvpath("u", "v", "P"), {elem("u"), elem("v"), set("P", Sort::V)});
  fail(ErrorCode::InvalidInput, "unknown shortcut '" + name + "'");
}

}  // namespace tempo
