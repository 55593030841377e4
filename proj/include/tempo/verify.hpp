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

// Randomized cross-check of cookbook formulas against the oracles.

#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tempo/cookbook.hpp"
#include "tempo/encodings.hpp"
#include "tempo/eval.hpp"
#include "tempo/oracles.hpp"
#include "tempo/tg_format.hpp"

namespace tempo {

// ---------------------------------------------------------------------------
// Oracle adapter: problem name + assignment of ids -> verdict.

namespace detail {

inline int vertex_arg(const TemporalGraph& g, const Assignment& a, const std::string& name) {
  auto it = a.elements.find(name);
  if (it == a.elements.end()) fail(ErrorCode::UnboundVariable, "missing assignment for " + name);
  return g.require_vertex(it->second);
}

inline std::vector<int> set_arg(const TemporalGraph& g, const Assignment& a, const std::string& name, Sort s) {
  auto it = a.sets.find(name);
  if (it == a.sets.end()) fail(ErrorCode::UnboundVariable, "missing assignment for " + name);
  std::vector<int> out;
  for (auto& id : it->second) {
    if (s == Sort::V) {
      out.push_back(g.require_vertex(id));
    } else {
      auto e = find_edge_label(g, id);
      if (!e) fail(ErrorCode::InvalidInput, "unknown temporal edge " + id);
      out.push_back(*e);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

inline bool oracle_verdict(const TemporalGraph& g, const std::string& problem, const Params& p, const Assignment& a) {
  const auto& info = problem_info(problem);
  check_ceiling(g);
  auto U = [&]() { return detail::vertex_arg(g, a, "u"); };
  auto Vv = [&]() { return detail::vertex_arg(g, a, "v"); };
  auto S = [&]() { return detail::vertex_arg(g, a, "s"); };
  auto Z = [&]() { return detail::vertex_arg(g, a, "z"); };
  auto X = [&]() { return detail::set_arg(g, a, "X", info.set_sort); };
  if (problem == "path" || problem == "path_fo") return oracle_reachable(g, U(), Vv());
  if (problem == "path_vertex") {
    PathRestriction r;
    r.vertices = vertex_mask(g, X());
    return oracle_reachable(g, U(), Vv(), r);
  }
  if (problem == "path_static_edge") {
    PathRestriction r;
    r.edges = edges_on_static(g, X());
    return oracle_reachable(g, U(), Vv(), r);
  }
  if (problem == "path_temporal_edge") {
    PathRestriction r;
    r.edges = edge_mask(g, X());
    return oracle_reachable(g, U(), Vv(), r);
  }
  if (problem == "restless") {
    PathRestriction r;
    r.max_wait = p.delta;
    return oracle_reachable(g, U(), Vv(), r);
  }
  if (problem == "disjoint_edge") return oracle_disjoint_paths(g, U(), Vv(), DisjointVariant::Edge);
  if (problem == "disjoint_vertex") return oracle_disjoint_paths(g, U(), Vv(), DisjointVariant::Vertex);
  if (problem == "disjoint_vertex_interior") return oracle_disjoint_paths(g, U(), Vv(), DisjointVariant::VertexInterior);
  if (problem == "component_open") return oracle_is_component(g, X(), ComponentVariant::Open);
  if (problem == "component_closed") return oracle_is_component(g, X(), ComponentVariant::Closed);
  if (problem == "component_unilateral_open") return oracle_is_component(g, X(), ComponentVariant::UnilateralOpen);
  if (problem == "component_unilateral_closed") return oracle_is_component(g, X(), ComponentVariant::UnilateralClosed);
  if (problem == "separator_vertex") return oracle_separator(g, S(), Z(), SeparatorVariant::Vertex, X());
  if (problem == "separator_static_edge") return oracle_separator(g, S(), Z(), SeparatorVariant::StaticEdge, X());
  if (problem == "separator_temporal_edge") return oracle_separator(g, S(), Z(), SeparatorVariant::TemporalEdge, X());
  if (problem == "spanner") return oracle_spanner(g, X());
  if (problem == "exploration_vertex") return oracle_exploration(g, ExplorationVariant::Vertex);
  if (problem == "exploration_edge") return oracle_exploration(g, ExplorationVariant::Edge);
  if (problem == "clique") return oracle_clique_is(g, X(), p.Delta, CliqueVariant::Clique);
  if (problem == "independent_set") return oracle_clique_is(g, X(), p.Delta, CliqueVariant::IndependentSet);
  if (problem == "feedback_temporal_edge") return oracle_feedback(g, X(), FeedbackVariant::TemporalEdge);
  if (problem == "feedback_connection") return oracle_feedback(g, X(), FeedbackVariant::Connection);
  if (problem == "colouring") return oracle_colouring(g, p.k);
  if (problem == "matching_delta") return oracle_matching(g, X(), MatchingVariant::Delta, p.Delta);
  if (problem == "matching_temporal") return oracle_matching(g, X(), MatchingVariant::Temporal);
  if (problem == "tpcover") return oracle_tpcover(g, p.k);
  CoverParams cp{p.k, p.l, p.Delta};
  std::optional<CoverVariant> cv;
  if (problem == "multistage_vc") cv = CoverVariant::Multistage;
  if (problem == "timeline_vc") cv = CoverVariant::TimelineVC;
  if (problem == "tvc") cv = CoverVariant::TVC;
  if (problem == "delta_tvc") cv = CoverVariant::DeltaTVC;
  if (problem == "snapshot_ds") cv = CoverVariant::SnapshotDS;
  if (problem == "timeline_ds") cv = CoverVariant::TimelineDS;
  if (cv) {
    std::vector<std::vector<int>> fam;
    for (auto& n : family_names(family_count(problem, g.lifetime(), p)))
      fam.push_back(detail::set_arg(g, a, n, Sort::V));
    return oracle_cover(g, *cv, cp, fam);
  }
  if (problem == "edge_cover") return oracle_cover(g, CoverVariant::EdgeCover, cp, {X()});
  if (problem == "overtime_ds") return oracle_cover(g, CoverVariant::OvertimeDS, cp, {X()});
  if (problem == "permanent_ds") return oracle_cover(g, CoverVariant::PermanentDS, cp, {X()});
  if (problem == "reach_ds") return oracle_cover(g, CoverVariant::ReachDS, cp, {X()});
  fail(ErrorCode::InvalidInput, "no oracle for problem '" + problem + "'");
}

// Element ids of a solution domain.
inline std::vector<std::string> domain_ids(const TemporalGraph& g, Sort s) {
  std::vector<std::string> out;
  if (s == Sort::V) return g.vertices();
  for (auto& e : g.edges()) out.push_back(edge_label(g, e));
  return out;
}

// Best |X| over sets accepted by the oracle, with other variables from base.
inline OracleReport oracle_optimum(const TemporalGraph& g, const std::string& problem, const Params& p,
                                   const Assignment& base = {}) {
  const auto& info = problem_info(problem);
  if (!info.objective || (info.kind != ProblemKind::Set && info.kind != ProblemKind::PairSet))
    fail(ErrorCode::InvalidInput, problem + " has no single-set objective");
  check_ceiling(g);
  auto ids = domain_ids(g, info.set_sort);
  auto rep = oracle_optimize_subset(
      static_cast<int>(ids.size()), *info.objective == Direction::Max,
      [&](const std::vector<int>& xs) {
        Assignment a = base;
        auto& s = a.sets["X"];
        s.clear();
        for (int x : xs) s.insert(ids[static_cast<std::size_t>(x)]);
        return oracle_verdict(g, problem, p, a);
      },
      [&](int i) { return ids[static_cast<std::size_t>(i)]; });
  return rep;
}

// ---------------------------------------------------------------------------
// Harness

struct VerifyConfig {
  std::string problem;
  Encoding encoding = Encoding::Lifetime;
  int trials = 50;
  std::uint64_t seed = 0;
  int n_max = 5;
  int lifetime_max = 4;
  std::vector<double> densities{0.2, 0.5};
  std::optional<bool> directed;
  std::optional<bool> strict;
  std::optional<Params> params;  // fixed parameters; otherwise drawn per trial
  int edge_cap = 0;              // 0 = per-problem default
  int candidates = 0;            // 0 = per-problem default
  bool optimize = false;         // also compare optimum values
};

struct Disagreement {
  std::uint64_t seed = 0;
  std::string instance;
  std::string assignment;
  bool formula = false;
  bool oracle = false;
  std::string detail;
};

struct VerifyReport {
  std::string problem;
  std::string encoding;
  int trials = 0;
  int agreements = 0;
  std::vector<Disagreement> disagreements;
  std::uint64_t checks = 0;
  double wall_time = 0;
};

inline int default_edge_cap(const std::string& problem) {
  if (problem == "component_closed" || problem == "component_unilateral_closed" || problem == "tpcover") return 6;
  if (problem.rfind("disjoint", 0) == 0 || problem.rfind("feedback", 0) == 0 || problem == "spanner") return 7;
  if (problem.rfind("path", 0) == 0 || problem.rfind("separator", 0) == 0 || problem.rfind("component", 0) == 0 ||
      problem == "restless" || problem == "reach_ds")
    return 8;
  return 10;
}

inline int default_candidates(const std::string& problem) {
  if (problem == "component_closed" || problem == "component_unilateral_closed" || problem == "spanner") return 6;
  return 12;
}

inline std::string assignment_text(const Assignment& a) {
  std::ostringstream out;
  bool first = true;
  for (auto& [k, v] : a.elements) {
    out << (first ? "" : " ") << k << '=' << v;
    first = false;
  }
  for (auto& [k, v] : a.sets) {
    out << (first ? "" : " ") << k << "={";
    bool f2 = true;
    for (auto& x : v) {
      out << (f2 ? "" : ",") << x;
      f2 = false;
    }
    out << '}';
    first = false;
  }
  return out.str();
}

namespace detail {

inline Params draw_params(const std::string& problem, int lifetime, CounterRng& rng) {
  Params p;
  if (problem == "colouring") p.k = 1 + rng.below(3);
  if (problem == "tpcover") p.k = 1 + rng.below(2);
  if (problem == "timeline_vc" || problem == "timeline_ds") {
    p.k = 1 + rng.below(2);
    p.l = 1 + rng.below(3);
  }
  if (problem == "multistage_vc") p.l = 1 + rng.below(2);
  if (problem == "clique" || problem == "independent_set") p.Delta = 1 + rng.below(2);
  if (problem == "matching_delta" || problem == "delta_tvc") p.Delta = 1 + rng.below(3);
  if (problem == "restless") {
    int pick = rng.below(3);
    p.delta = pick == 0 ? 1 : pick == 1 ? 2 : std::max(1, lifetime);
  }
  return p;
}

inline std::set<std::string> random_subset(const std::vector<std::string>& ids, CounterRng& rng) {
  std::set<std::string> out;
  for (auto& id : ids)
    if (rng.below(2)) out.insert(id);
  return out;
}

inline std::vector<std::set<std::string>> candidate_sets(const std::vector<std::string>& ids, int limit, CounterRng& rng) {
  std::vector<std::set<std::string>> out;
  if (ids.size() < 63 && (std::uint64_t{1} << ids.size()) <= static_cast<std::uint64_t>(limit)) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << ids.size()); ++m) {
      std::set<std::string> s;
      for (std::size_t i = 0; i < ids.size(); ++i)
        if ((m >> i) & 1u) s.insert(ids[i]);
      out.push_back(s);
    }
    return out;
  }
  out.push_back({});
  out.push_back(std::set<std::string>(ids.begin(), ids.end()));
  while (static_cast<int>(out.size()) < limit) out.push_back(random_subset(ids, rng));
  return out;
}

}  // namespace detail

// Draws one instance and checks formula against oracle on its candidates.
// Everything is derived from trial_seed, so a logged seed replays alone.
inline bool run_trial(const VerifyConfig& cfg, std::uint64_t trial_seed, VerifyReport& rep) {
  const auto& info = problem_info(cfg.problem);
  CounterRng rng(trial_seed);
  const int cap = cfg.edge_cap > 0 ? cfg.edge_cap : default_edge_cap(cfg.problem);
  RandomConfig rc;
  TemporalGraph g;
  // Over-dense draws are redrawn from scratch; the edge cap keeps the set
  // quantifiers small.
  for (int tries = 0;; ++tries) {
    rc.n = 2 + rng.below(std::max(1, cfg.n_max - 1));
    rc.lifetime = 1 + rng.below(std::max(1, cfg.lifetime_max));
    rc.p = cfg.densities[static_cast<std::size_t>(rng.below(static_cast<int>(cfg.densities.size())))];
    rc.directed = cfg.directed ? *cfg.directed : rng.below(2) == 1;
    if (cfg.strict) {
      rc.strict = *cfg.strict;
    } else if (info.strict && info.nonstrict) {
      rc.strict = rng.below(2) == 1;
    } else {
      rc.strict = info.strict;
    }
    rc.seed = rng.next();
    g = random_instance(rc);
    if (g.num_edges() <= cap) break;
    if (tries > 10000) fail(ErrorCode::TooLarge, "cannot draw an instance under the edge cap");
  }
  const Params params = cfg.params ? *cfg.params : detail::draw_params(cfg.problem, g.lifetime(), rng);
  const Tag tag = tag_for(g, cfg.encoding);
  Built built = build_problem(tag, cfg.problem, params);
  RelationalStructure rs = encode(g, cfg.encoding);
  EvalOptions opt;
  opt.budget = 0;
  Evaluator ev(rs, built.formula, opt);

  std::vector<Assignment> cands;
  const int limit = cfg.candidates > 0 ? cfg.candidates : default_candidates(cfg.problem);
  const auto& vs = g.vertices();
  switch (info.kind) {
    case ProblemKind::Sentence: cands.push_back({}); break;
    case ProblemKind::Pair:
      for (auto& a : vs)
        for (auto& b : vs) cands.push_back({{{"u", a}, {"v", b}}, {}});
      break;
    case ProblemKind::PairSet: {
      const bool sep = cfg.problem.rfind("separator", 0) == 0;
      auto ids = domain_ids(g, info.set_sort);
      const int pairs = std::min(4, static_cast<int>(vs.size() * vs.size()));
      for (int i = 0; i < pairs; ++i) {
        auto a = vs[static_cast<std::size_t>(rng.below(static_cast<int>(vs.size())))];
        auto b = vs[static_cast<std::size_t>(rng.below(static_cast<int>(vs.size())))];
        std::map<std::string, std::string> el = sep ? std::map<std::string, std::string>{{"s", a}, {"z", b}}
                                                    : std::map<std::string, std::string>{{"u", a}, {"v", b}};
        for (auto& s : detail::candidate_sets(ids, std::max(2, limit / 2), rng)) cands.push_back({el, {{"X", s}}});
      }
      break;
    }
    case ProblemKind::Set: {
      auto ids = domain_ids(g, info.set_sort);
      for (auto& s : detail::candidate_sets(ids, limit, rng)) cands.push_back({{}, {{"X", s}}});
      break;
    }
    case ProblemKind::Family: {
      auto names = family_names(family_count(cfg.problem, g.lifetime(), params));
      Assignment none, full;
      for (auto& n : names) {
        none.sets[n] = {};
        full.sets[n] = std::set<std::string>(vs.begin(), vs.end());
      }
      cands.push_back(none);
      cands.push_back(full);
      while (static_cast<int>(cands.size()) < limit) {
        Assignment a;
        // Mostly-full random families, so that valid covers show up often.
        for (auto& n : names) {
          auto& s = a.sets[n];
          for (auto& v : vs)
            if (rng.below(4) != 0) s.insert(v);
        }
        cands.push_back(a);
      }
      break;
    }
  }

  bool ok = true;
  auto record = [&](const Assignment& a, bool fv, bool ov, const std::string& detail) {
    // One entry per failing trial, so agreements + disagreements = trials.
    if (ok) rep.disagreements.push_back({trial_seed, print_tg(g), assignment_text(a), fv, ov, detail});
    ok = false;
  };
  for (auto& a : cands) {
    bool fv = ev.evaluate(a);
    bool ov = oracle_verdict(g, cfg.problem, params, a);
    ++rep.checks;
    if (fv != ov) record(a, fv, ov, "verdict");
  }
  if (cfg.optimize && info.objective && (info.kind == ProblemKind::Set || info.kind == ProblemKind::PairSet)) {
    Assignment base;
    if (info.kind == ProblemKind::PairSet && !cands.empty()) base.elements = cands.front().elements;
    auto orc = oracle_optimum(g, cfg.problem, params, base);
    std::optional<long long> fval;
    try {
      auto r = optimize_affine(rs, built.formula, built.solution_vars, {1}, 0, *info.objective, base, opt);
      fval = r.value;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Infeasible) throw;
    }
    ++rep.checks;
    if (fval != orc.value)
      record(base, fval.has_value(), orc.value.has_value(),
             "optimum formula=" + (fval ? std::to_string(*fval) : std::string("none")) +
                 " oracle=" + (orc.value ? std::to_string(*orc.value) : std::string("none")));
  }
  return ok;
}

inline std::uint64_t trial_seed(std::uint64_t seed, int i) {
  return splitmix64(seed * 0x100000001b3ull + static_cast<std::uint64_t>(i));
}

inline VerifyReport verify_problem(const VerifyConfig& cfg) {
  const auto& info = problem_info(cfg.problem);
  VerifyReport rep;
  rep.problem = cfg.problem;
  rep.encoding = encoding_name(cfg.encoding);
  if (std::find(info.encodings.begin(), info.encodings.end(), cfg.encoding) == info.encodings.end())
    fail(ErrorCode::UnsupportedCombination,
         cfg.problem + " is not available for encoding " + encoding_name(cfg.encoding));
  auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < cfg.trials; ++i) {
    ++rep.trials;
    if (run_trial(cfg, trial_seed(cfg.seed, i), rep)) ++rep.agreements;
  }
  rep.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

inline nlohmann::json to_json(const VerifyReport& r) {
  nlohmann::json d = nlohmann::json::array();
  for (auto& x : r.disagreements)
    d.push_back({{"seed", x.seed},
                 {"instance", x.instance},
                 {"assignment", x.assignment},
                 {"formula", x.formula},
                 {"oracle", x.oracle},
                 {"detail", x.detail}});
  return {{"problem", r.problem},           {"encoding", r.encoding},
          {"trials", r.trials},             {"agreements", r.agreements},
          {"disagreements", d},             {"disagreement_count", r.trials - r.agreements},
          {"checks", r.checks},             {"wall_time", r.wall_time}};
}

}  // namespace tempo
