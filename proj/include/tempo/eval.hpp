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
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tempo/error.hpp"
#include "tempo/formula.hpp"
#include "tempo/structure.hpp"

namespace tempo {

struct Assignment {
  std::map<std::string, std::string> elements;
  std::map<std::string, std::set<std::string>> sets;
};

inline constexpr double kDefaultBudget = 1048576.0;

// TEMPO_BUDGET overrides the default; 0 disables the guard.
inline double default_budget() {
  if (const char* env = std::getenv("TEMPO_BUDGET")) {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end != env && v >= 0) return v;
  }
  return kDefaultBudget;
}

struct EvalOptions {
  double budget = default_budget();  // 0 = unlimited
  bool prune_sets = true;            // restrict set domains using guarding conjuncts
  bool memoize = true;
};

struct CostVerdict {
  double estimate = 0;
  double budget = 0;
  bool pass = true;
};

namespace detail {

inline double sort_size(const RelationalStructure& rs, const std::optional<Sort>& g) {
  return g ? static_cast<double>(rs.members(*g).size()) : static_cast<double>(rs.size());
}

inline double estimate_cost(const RelationalStructure& rs, const Formula& f) {
  double body = 1;
  for (auto& k : f.kids) body = std::max(body, estimate_cost(rs, *k));
  switch (f.kind) {
    case Kind::ExistsElem:
    case Kind::ForallElem: return sort_size(rs, f.guard) * body;
    case Kind::ExistsSet:
    case Kind::ForallSet: return std::pow(2.0, sort_size(rs, f.guard)) * body;
    default: return body;
  }
}

struct Bits {
  std::vector<std::uint64_t> w;
  void reset(int n) { w.assign(static_cast<std::size_t>((n + 63) / 64), 0); }
  bool test(int i) const { return (w[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1u; }
  void set(int i) { w[static_cast<std::size_t>(i >> 6)] |= std::uint64_t{1} << (i & 63); }
  void clear() { std::fill(w.begin(), w.end(), 0); }
  bool operator==(const Bits&) const = default;
};

}  // namespace detail

inline CostVerdict cost_guard(const RelationalStructure& rs, const Formula& f, double budget) {
  CostVerdict v;
  v.estimate = detail::estimate_cost(rs, f);
  v.budget = budget;
  v.pass = budget <= 0 || v.estimate <= budget;
  return v;
}

inline CostVerdict cost_guard(const RelationalStructure& rs, const FormulaPtr& f,
                              double budget = default_budget()) {
  return cost_guard(rs, *f, budget);
}

// Compiled evaluator. Variables become slots, relations become bit tables.
// Quantifier subformulas are memoized on the values of the free variables
// they use, so repeated evaluations with new bindings reuse earlier work.
class Evaluator {
 public:
  Evaluator(const RelationalStructure& rs, FormulaPtr f, EvalOptions opt = {})
      : rs_(rs), f_(std::move(f)), opt_(opt) {
    n_ = rs_.size();
    for (int s = 0; s < 4; ++s) domains_[s] = rs_.members(kAllSorts[static_cast<std::size_t>(s)]);
    for (int i = 0; i < n_; ++i) domains_[4].push_back(i);
    for (int s = 0; s < 5; ++s) {
      domain_bits_[s].reset(n_);
      for (int x : domains_[s]) domain_bits_[s].set(x);
    }
    free_ = free_variables(*f_);
    for (auto& v : free_) {
      if (v.order == Order::Element) {
        scope_.push_back({v.name, Order::Element, elem_slots_++});
      } else {
        scope_.push_back({v.name, Order::Set, set_slots_++});
      }
      free_slot_[v.name] = scope_.back();
    }
    root_ = compile(*f_);
    ev_.assign(static_cast<std::size_t>(elem_slots_), -1);
    sv_.resize(static_cast<std::size_t>(set_slots_));
    for (auto& b : sv_) b.reset(n_);
    bound_.assign(free_.size(), false);
  }

  const std::vector<Variable>& free_vars() const { return free_; }
  double estimate() const { return detail::estimate_cost(rs_, *f_); }
  const RelationalStructure& structure() const { return rs_; }

  void check_budget(double multiplier = 1) const {
    if (opt_.budget <= 0) return;
    double est = estimate() * multiplier;
    if (est > opt_.budget)
      fail(ErrorCode::BudgetExceeded, "estimated " + std::to_string(est) +
                                          " assignments exceeds budget " +
                                          std::to_string(opt_.budget));
  }

  bool evaluate(const Assignment& a) {
    bind(a);
    for (std::size_t i = 0; i < free_.size(); ++i)
      if (!bound_[i]) fail(ErrorCode::UnboundVariable, "free variable " + free_[i].name + " is unbound");
    return run(root_);
  }

  // Low-level binding used by the enumeration modes.
  bool has_free(const std::string& name) const { return free_slot_.count(name) > 0; }
  void bind_element(const std::string& name, int elem) {
    auto& s = slot_for(name, Order::Element);
    ev_[static_cast<std::size_t>(s.slot)] = elem;
    mark(name);
  }
  void bind_set(const std::string& name, const std::vector<int>& elems) {
    auto& s = slot_for(name, Order::Set);
    auto& b = sv_[static_cast<std::size_t>(s.slot)];
    b.clear();
    for (int x : elems) b.set(x);
    mark(name);
  }
  void bind(const Assignment& a) {
    for (auto& [name, id] : a.elements) {
      if (!has_free(name)) continue;
      bind_element(name, resolve_id(id));
    }
    for (auto& [name, ids] : a.sets) {
      if (!has_free(name)) continue;
      std::vector<int> xs;
      for (auto& id : ids) xs.push_back(resolve_id(id));
      bind_set(name, xs);
    }
  }
  bool all_bound() const {
    return std::all_of(bound_.begin(), bound_.end(), [](bool b) { return b; });
  }
  bool run_root() {
    if (!all_bound())
      for (std::size_t i = 0; i < free_.size(); ++i)
        if (!bound_[i]) fail(ErrorCode::UnboundVariable, "free variable " + free_[i].name + " is unbound");
    return run(root_);
  }

  int resolve_id(const std::string& id) const {
    auto i = rs_.find(id);
    if (!i) fail(ErrorCode::InvalidInput, "unknown element id " + id);
    return *i;
  }

  const std::vector<int>& domain(const std::optional<Sort>& g) const {
    return g ? domains_[static_cast<int>(*g)] : domains_[4];
  }

 private:
  struct Binding {
    std::string name;
    Order order;
    int slot;
  };
  struct Filter {
    int var_slot;
    int domain;  // index into domains_
    int psi;
  };
  struct Uses {
    std::vector<int> elems;
    std::vector<int> sets;
  };
  struct RelTable {
    int arity = 0;
    detail::Bits unary;
    std::vector<detail::Bits> rows;
    std::set<std::vector<int>> tuples;
  };
  struct CNode {
    Kind kind = Kind::True;
    std::vector<int> kids;
    int rel = -1;
    int sort_test = -1;
    std::vector<int> slots;
    int set_slot = -1;
    int set_slot2 = -1;
    int var_slot = -1;
    int domain = 4;
    std::vector<Filter> filters;
    std::vector<int> forced;
    Uses uses;
    bool memo = false;
    std::unordered_map<std::string, bool> table;
  };

  const RelationalStructure& rs_;
  FormulaPtr f_;
  EvalOptions opt_;
  int n_ = 0;
  std::vector<int> domains_[5];
  detail::Bits domain_bits_[5];
  std::vector<Variable> free_;
  std::map<std::string, Binding> free_slot_;
  std::vector<Binding> scope_;
  int elem_slots_ = 0;
  int set_slots_ = 0;
  std::vector<CNode> nodes_;
  std::map<std::string, int> rel_index_;
  std::vector<RelTable> rels_;
  int root_ = -1;
  std::vector<int> ev_;
  std::vector<detail::Bits> sv_;
  std::vector<bool> bound_;
  std::vector<int> scratch_;

  const Binding& slot_for(const std::string& name, Order o) const {
    auto it = free_slot_.find(name);
    if (it == free_slot_.end()) fail(ErrorCode::UnboundVariable, name + " is not a free variable");
    if (it->second.order != o)
      fail(ErrorCode::SignatureMismatch, name + " bound with the wrong order");
    return it->second;
  }

  void mark(const std::string& name) {
    for (std::size_t i = 0; i < free_.size(); ++i)
      if (free_[i].name == name) bound_[i] = true;
  }

  const Binding& lookup(const std::string& name, Order o) const {
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it)
      if (it->name == name) {
        if (it->order != o)
          fail(ErrorCode::SignatureMismatch,
               name + (o == Order::Set ? " is an element variable used as a set"
                                       : " is a set variable used as an element"));
        return *it;
      }
    fail(ErrorCode::UnboundVariable, "variable " + name + " is unbound");
  }

  int relation_table(const std::string& name, int arity) {
    auto it = rel_index_.find(name);
    if (it != rel_index_.end()) {
      if (rels_[static_cast<std::size_t>(it->second)].arity != arity)
        fail(ErrorCode::SignatureMismatch, "relation " + name + " used with arity " + std::to_string(arity));
      return it->second;
    }
    auto* r = rs_.relation(name);
    if (!r) return -1;
    if (r->arity != arity)
      fail(ErrorCode::SignatureMismatch, "relation " + name + " has arity " + std::to_string(r->arity) +
                                             ", used with " + std::to_string(arity));
    RelTable t;
    t.arity = arity;
    if (arity == 1) {
      t.unary.reset(n_);
      for (auto& tup : r->tuples) t.unary.set(tup[0]);
    } else if (arity == 2) {
      t.rows.resize(static_cast<std::size_t>(n_));
      for (auto& row : t.rows) row.reset(n_);
      for (auto& tup : r->tuples) t.rows[static_cast<std::size_t>(tup[0])].set(tup[1]);
    } else {
      for (auto& tup : r->tuples) t.tuples.insert(tup);
    }
    rels_.push_back(std::move(t));
    rel_index_[name] = static_cast<int>(rels_.size()) - 1;
    return rel_index_[name];
  }

  static void merge(std::vector<int>& into, const std::vector<int>& from) {
    std::vector<int> out;
    std::set_union(into.begin(), into.end(), from.begin(), from.end(), std::back_inserter(out));
    into = std::move(out);
  }
  static void insert(std::vector<int>& into, int x) {
    auto it = std::lower_bound(into.begin(), into.end(), x);
    if (it == into.end() || *it != x) into.insert(it, x);
  }
  static void erase(std::vector<int>& from, int x) {
    auto it = std::lower_bound(from.begin(), from.end(), x);
    if (it != from.end() && *it == x) from.erase(it);
  }

  int compile(const Formula& f) {
    CNode n;
    n.kind = f.kind;
    switch (f.kind) {
      case Kind::True:
      case Kind::False: break;
      case Kind::Eq: {
        bool set0 = is_set_name(f.args[0]);
        bool set1 = is_set_name(f.args[1]);
        if (set0 || set1) {
          n.set_slot = lookup(f.args[0], Order::Set).slot;
          n.set_slot2 = lookup(f.args[1], Order::Set).slot;
          insert(n.uses.sets, n.set_slot);
          insert(n.uses.sets, n.set_slot2);
        } else {
          for (auto& a : f.args) {
            n.slots.push_back(lookup(a, Order::Element).slot);
            insert(n.uses.elems, n.slots.back());
          }
        }
        break;
      }
      case Kind::Rel: {
        for (auto& a : f.args) {
          n.slots.push_back(lookup(a, Order::Element).slot);
          insert(n.uses.elems, n.slots.back());
        }
        n.rel = relation_table(f.name, static_cast<int>(f.args.size()));
        if (n.rel < 0) {
          auto s = parse_sort(f.name);
          if (!s || f.args.size() != 1)
            fail(ErrorCode::SignatureMismatch, "relation " + f.name + " is not in the structure");
          n.sort_test = static_cast<int>(*s);
        }
        break;
      }
      case Kind::Member: {
        n.slots.push_back(lookup(f.args[0], Order::Element).slot);
        n.set_slot = lookup(f.name, Order::Set).slot;
        insert(n.uses.elems, n.slots[0]);
        insert(n.uses.sets, n.set_slot);
        break;
      }
      case Kind::ExistsElem:
      case Kind::ForallElem:
      case Kind::ExistsSet:
      case Kind::ForallSet: {
        bool set = f.is_set_quantifier();
        n.var_slot = set ? set_slots_++ : elem_slots_++;
        n.domain = f.guard ? static_cast<int>(*f.guard) : 4;
        scope_.push_back({f.name, set ? Order::Set : Order::Element, n.var_slot});
        int body = compile(*f.kids[0]);
        scope_.pop_back();
        n.kids.push_back(body);
        n.uses = nodes_[static_cast<std::size_t>(body)].uses;
        erase(set ? n.uses.sets : n.uses.elems, n.var_slot);
        if (set) collect_filters(n, body);
        n.memo = opt_.memoize;
        break;
      }
      default: {
        for (auto& k : f.kids) {
          int c = compile(*k);
          n.kids.push_back(c);
          merge(n.uses.elems, nodes_[static_cast<std::size_t>(c)].uses.elems);
          merge(n.uses.sets, nodes_[static_cast<std::size_t>(c)].uses.sets);
        }
        break;
      }
    }
    nodes_.push_back(std::move(n));
    return static_cast<int>(nodes_.size()) - 1;
  }

  bool is_set_name(const std::string& name) const {
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it)
      if (it->name == name) return it->order == Order::Set;
    return false;
  }

  void flatten_and(int id, std::vector<int>& out) const {
    auto& n = nodes_[static_cast<std::size_t>(id)];
    if (n.kind == Kind::And) {
      for (int k : n.kids) flatten_and(k, out);
    } else {
      out.push_back(id);
    }
  }

  // Conjuncts "forall x . x in X -> psi" (psi free of X) drop elements failing
  // psi from the domain of X; conjuncts "y in X" force y into X. Under an
  // existential they are read off the body, under a universal off the premise
  // of an implication.
  void collect_filters(CNode& q, int body) {
    std::vector<int> conjuncts;
    auto& b = nodes_[static_cast<std::size_t>(body)];
    if (q.kind == Kind::ExistsSet) {
      flatten_and(body, conjuncts);
    } else if (b.kind == Kind::Implies) {
      flatten_and(b.kids[0], conjuncts);
    }
    const int x = q.var_slot;
    for (int c : conjuncts) {
      auto& cn = nodes_[static_cast<std::size_t>(c)];
      if (cn.kind == Kind::Member && cn.set_slot == x) {
        q.forced.push_back(cn.slots[0]);
        continue;
      }
      if (cn.kind != Kind::ForallElem) continue;
      auto& imp = nodes_[static_cast<std::size_t>(cn.kids[0])];
      if (imp.kind != Kind::Implies) continue;
      auto& m = nodes_[static_cast<std::size_t>(imp.kids[0])];
      if (m.kind != Kind::Member || m.set_slot != x || m.slots[0] != cn.var_slot) continue;
      auto& psi = nodes_[static_cast<std::size_t>(imp.kids[1])];
      if (std::binary_search(psi.uses.sets.begin(), psi.uses.sets.end(), x)) continue;
      q.filters.push_back({cn.var_slot, cn.domain, imp.kids[1]});
    }
  }

  static constexpr std::size_t kMemoCap = std::size_t{1} << 20;

  bool run(int id) {
    CNode& n = nodes_[static_cast<std::size_t>(id)];
    if (!n.memo) return compute(n);
    std::string key;
    key.reserve(n.uses.elems.size() * sizeof(int) + n.uses.sets.size() * 8);
    for (int s : n.uses.elems) {
      int v = ev_[static_cast<std::size_t>(s)];
      key.append(reinterpret_cast<const char*>(&v), sizeof v);
    }
    for (int s : n.uses.sets)
      for (auto w : sv_[static_cast<std::size_t>(s)].w) key.append(reinterpret_cast<const char*>(&w), sizeof w);
    auto it = n.table.find(key);
    if (it != n.table.end()) return it->second;
    bool r = compute(n);
    auto& t = nodes_[static_cast<std::size_t>(id)].table;
    if (t.size() < kMemoCap) t.emplace(std::move(key), r);
    return r;
  }

  int ev(int slot) const { return ev_[static_cast<std::size_t>(slot)]; }

  bool compute(CNode& n) {
    switch (n.kind) {
      case Kind::True: return true;
      case Kind::False: return false;
      case Kind::Eq:
        if (n.set_slot >= 0)
          return sv_[static_cast<std::size_t>(n.set_slot)] == sv_[static_cast<std::size_t>(n.set_slot2)];
        return ev(n.slots[0]) == ev(n.slots[1]);
      case Kind::Rel: {
        if (n.rel < 0) return domain_bits_[n.sort_test].test(ev(n.slots[0]));
        auto& t = rels_[static_cast<std::size_t>(n.rel)];
        if (t.arity == 1) return t.unary.test(ev(n.slots[0]));
        if (t.arity == 2) return t.rows[static_cast<std::size_t>(ev(n.slots[0]))].test(ev(n.slots[1]));
        std::vector<int> tup;
        for (int s : n.slots) tup.push_back(ev(s));
        return t.tuples.count(tup) > 0;
      }
      case Kind::Member: return sv_[static_cast<std::size_t>(n.set_slot)].test(ev(n.slots[0]));
      case Kind::Not: return !run(n.kids[0]);
      case Kind::And:
        for (int k : n.kids)
          if (!run(k)) return false;
        return true;
      case Kind::Or:
        for (int k : n.kids)
          if (run(k)) return true;
        return false;
      case Kind::Implies: return !run(n.kids[0]) || run(n.kids[1]);
      case Kind::Iff: return run(n.kids[0]) == run(n.kids[1]);
      case Kind::ExistsElem:
        for (int d : domains_[n.domain]) {
          ev_[static_cast<std::size_t>(n.var_slot)] = d;
          if (run(n.kids[0])) return true;
        }
        return false;
      case Kind::ForallElem:
        for (int d : domains_[n.domain]) {
          ev_[static_cast<std::size_t>(n.var_slot)] = d;
          if (!run(n.kids[0])) return false;
        }
        return true;
      case Kind::ExistsSet:
      case Kind::ForallSet: return set_quantifier(n);
    }
    return false;
  }

  bool set_quantifier(const CNode& n) {
    const bool exists = n.kind == Kind::ExistsSet;
    std::vector<int> dom = domains_[n.domain];
    std::vector<int> forced;
    if (opt_.prune_sets) {
      for (auto& flt : n.filters) {
        std::vector<int> keep;
        for (int d : dom) {
          if (domain_bits_[flt.domain].test(d)) {
            ev_[static_cast<std::size_t>(flt.var_slot)] = d;
            if (!run(flt.psi)) continue;
          }
          keep.push_back(d);
        }
        dom = std::move(keep);
      }
      for (int s : n.forced) {
        int y = ev(s);
        if (std::find(forced.begin(), forced.end(), y) != forced.end()) continue;
        auto it = std::find(dom.begin(), dom.end(), y);
        if (it == dom.end()) return !exists;
        forced.push_back(y);
        dom.erase(it);
      }
    }
    if (dom.size() > 62)
      fail(ErrorCode::BudgetExceeded, "set quantifier over " + std::to_string(dom.size()) + " elements");
    auto& bits = sv_[static_cast<std::size_t>(n.var_slot)];
    const std::uint64_t total = std::uint64_t{1} << dom.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      bits.clear();
      for (int y : forced) bits.set(y);
      for (std::size_t i = 0; i < dom.size(); ++i)
        if ((mask >> i) & 1u) bits.set(dom[i]);
      bool r = run(n.kids[0]);
      if (exists && r) return true;
      if (!exists && !r) return false;
    }
    return !exists;
  }
};

inline bool evaluate(const RelationalStructure& rs, const FormulaPtr& f, const Assignment& a = {},
                     EvalOptions opt = {}) {
  Evaluator ev(rs, f, opt);
  ev.check_budget();
  return ev.evaluate(a);
}

namespace detail {

inline double enumeration_size(const Evaluator& ev, const std::vector<Variable>& vars) {
  double m = 1;
  for (auto& v : vars) {
    double d = static_cast<double>(ev.domain(v.guard).size());
    m *= v.order == Order::Set ? std::pow(2.0, d) : d;
  }
  return m;
}

inline void check_vars_cover(const Evaluator& ev, const std::vector<Variable>& vars,
                             const Assignment& base) {
  for (auto& fv : ev.free_vars()) {
    bool listed = std::any_of(vars.begin(), vars.end(), [&](const Variable& v) { return v.name == fv.name; });
    if (!listed && !base.elements.count(fv.name) && !base.sets.count(fv.name))
      fail(ErrorCode::UnboundVariable, "free variable " + fv.name + " is neither enumerated nor bound");
  }
}

inline std::vector<int> subset_of(const std::vector<int>& dom, std::uint64_t mask) {
  std::vector<int> out;
  for (std::size_t i = 0; i < dom.size(); ++i)
    if ((mask >> i) & 1u) out.push_back(dom[i]);
  return out;
}

}  // namespace detail

// Number of assignments to free_vars (elements over guarded sorts, sets over
// guarded powersets) satisfying f. Other free variables come from base.
inline std::uint64_t count_satisfying(const RelationalStructure& rs, const FormulaPtr& f,
                                      const std::vector<Variable>& free_vars,
                                      const Assignment& base = {}, EvalOptions opt = {}) {
  Evaluator ev(rs, f, opt);
  ev.check_budget(detail::enumeration_size(ev, free_vars));
  detail::check_vars_cover(ev, free_vars, base);
  ev.bind(base);
  for (auto& v : free_vars)
    if (v.order == Order::Set && ev.domain(v.guard).size() > 62)
      fail(ErrorCode::BudgetExceeded, "set variable " + v.name + " ranges over too many elements");
  std::uint64_t count = 0;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == free_vars.size()) {
      if (ev.run_root()) ++count;
      return;
    }
    auto& v = free_vars[i];
    auto& dom = ev.domain(v.guard);
    const bool used = ev.has_free(v.name);
    if (v.order == Order::Element) {
      for (int d : dom) {
        if (used) ev.bind_element(v.name, d);
        self(self, i + 1);
      }
    } else {
      const std::uint64_t total = std::uint64_t{1} << dom.size();
      for (std::uint64_t m = 0; m < total; ++m) {
        if (used) ev.bind_set(v.name, detail::subset_of(dom, m));
        self(self, i + 1);
      }
    }
  };
  rec(rec, 0);
  return count;
}

enum class Direction { Min, Max };

struct OptimizeResult {
  long long value = 0;
  std::vector<std::vector<std::string>> witness;  // one sorted id list per set variable
};

// Optimum of constant + sum coeff_i * |X_i| over satisfying evaluations of
// the set variables. Ties go to the lexicographically least family.
inline OptimizeResult optimize_affine(const RelationalStructure& rs, const FormulaPtr& f,
                                      const std::vector<Variable>& set_vars,
                                      const std::vector<long long>& coefficients, long long constant,
                                      Direction dir, const Assignment& base = {},
                                      EvalOptions opt = {}) {
  if (coefficients.size() != set_vars.size())
    fail(ErrorCode::InvalidInput, "one coefficient per set variable is required");
  Evaluator ev(rs, f, opt);
  std::vector<Variable> vars = set_vars;
  for (auto& v : vars) v.order = Order::Set;
  ev.check_budget(detail::enumeration_size(ev, vars));
  detail::check_vars_cover(ev, vars, base);
  ev.bind(base);
  for (auto& v : vars)
    if (ev.domain(v.guard).size() > 62)
      fail(ErrorCode::BudgetExceeded, "set variable " + v.name + " ranges over too many elements");
  std::optional<OptimizeResult> best;
  std::vector<std::vector<int>> chosen(vars.size());
  auto family = [&]() {
    std::vector<std::vector<std::string>> out;
    for (auto& c : chosen) {
      std::vector<std::string> ids;
      for (int x : c) ids.push_back(rs.id(x));
      std::sort(ids.begin(), ids.end());
      out.push_back(std::move(ids));
    }
    return out;
  };
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == vars.size()) {
      if (!ev.run_root()) return;
      long long value = constant;
      for (std::size_t k = 0; k < vars.size(); ++k)
        value += coefficients[k] * static_cast<long long>(chosen[k].size());
      bool better = !best || (dir == Direction::Min ? value < best->value : value > best->value);
      if (!better && best && value == best->value) {
        auto fam = family();
        if (fam < best->witness) best->witness = std::move(fam);
        return;
      }
      if (better) best = OptimizeResult{value, family()};
      return;
    }
    auto& dom = ev.domain(vars[i].guard);
    const bool used = ev.has_free(vars[i].name);
    const std::uint64_t total = std::uint64_t{1} << dom.size();
    for (std::uint64_t m = 0; m < total; ++m) {
      chosen[i] = detail::subset_of(dom, m);
      if (used) ev.bind_set(vars[i].name, chosen[i]);
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  if (!best) fail(ErrorCode::Infeasible, "no satisfying evaluation");
  return *best;
}

}  // namespace tempo
