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

// tempo: command-line front end.
//
// Exit codes: 0 true/success, 1 false/infeasible, 2 error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <map>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "tempo/cookbook.hpp"
#include "tempo/decomp.hpp"
#include "tempo/encodings.hpp"
#include "tempo/error.hpp"
#include "tempo/eval.hpp"
#include "tempo/formula.hpp"
#include "tempo/gaifman.hpp"
#include "tempo/oracles.hpp"
#include "tempo/tg_format.hpp"
#include "tempo/verify.hpp"

namespace {

using nlohmann::json;
using namespace tempo;

constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kError = 2;

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

std::string read_text(const std::string& path) {
  std::ifstream f(path);
  if (!f) fail(ErrorCode::InvalidInput, "cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

json id_list(const std::vector<std::string>& names, const std::vector<int>& xs) {
  json a = json::array();
  for (int x : xs) a.push_back(names[static_cast<std::size_t>(x)]);
  return a;
}

// "X={a,b}", "X=a,b" and "X=" bind sets; anything else binds an element.
// Set-ness comes from the variable's declared order when known.
Assignment parse_assignments(const std::vector<std::string>& items, const std::vector<Variable>& vars) {
  Assignment a;
  for (auto& item : items) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) fail(ErrorCode::InvalidInput, "expected NAME=VALUE, got '" + item + "'");
    std::string name = item.substr(0, eq), value = item.substr(eq + 1);
    bool is_set = !value.empty() && value.front() == '{';
    for (auto& v : vars)
      if (v.name == name) is_set = v.order == Order::Set;
    if (!is_set) {
      a.elements[name] = value;
      continue;
    }
    if (!value.empty() && value.front() == '{') {
      if (value.back() != '}') fail(ErrorCode::InvalidInput, "unterminated set in '" + item + "'");
      value = value.substr(1, value.size() - 2);
    }
    auto& s = a.sets[name];
    std::stringstream ss(value);
    for (std::string id; std::getline(ss, id, ',');)
      if (!id.empty()) s.insert(id);
  }
  return a;
}

json assignment_json(const Assignment& a) {
  json j = json::object();
  for (auto& [k, v] : a.elements) j[k] = v;
  for (auto& [k, v] : a.sets) j[k] = json(std::vector<std::string>(v.begin(), v.end()));
  return j;
}

bool bound(const Assignment& a, const std::string& name) {
  return a.elements.count(name) > 0 || a.sets.count(name) > 0;
}

EvalOptions eval_options(double budget) {
  EvalOptions o;
  if (budget >= 0) o.budget = budget;
  return o;
}

struct ParamFlags {
  int k = 1, l = 1, Delta = 1, delta = 1;
  void add(CLI::App* cmd) {
    cmd->add_option("--k", k, "Number of paths or colours");
    cmd->add_option("--l", l, "Window or change bound");
    cmd->add_option("--Delta", Delta, "Clique, matching or cover window");
    cmd->add_option("--delta", delta, "Restless waiting bound");
  }
  Params get() const { return Params{k, l, Delta, delta}; }
};

json params_json(const ProblemInfo& info, const Params& p) {
  json j = json::object();
  for (auto& n : info.params) j[n] = n == "k" ? p.k : n == "l" ? p.l : n == "Delta" ? p.Delta : p.delta;
  return j;
}

// ---------------------------------------------------------------------------

int cmd_encode(const std::string& file, const std::string& enc, const std::string& out, bool as_json) {
  auto g = read_tg_file(file);
  auto rs = encode(g, parse_encoding(enc));
  json j = to_json(rs);
  if (!out.empty()) {
    std::ofstream f(out);
    if (!f) fail(ErrorCode::InvalidInput, "cannot write " + out);
    f << j.dump(2) << '\n';
  }
  if (as_json) {
    emit(j);
  } else {
    auto st = structure_stats(rs);
    std::cout << "encoding " << rs.encoding << '\n';
    for (auto& [s, n] : st.sort_sizes) std::cout << "sort " << s << ' ' << n << '\n';
    for (auto& [r, n] : st.tuple_counts) std::cout << "relation " << r << ' ' << n << '\n';
  }
  return kTrue;
}

int cmd_decompose(const std::string& file, const std::string& kind, bool as_json) {
  auto g = read_tg_file(file);
  const auto& names = g.vertices();
  json j{{"kind", kind}};
  Verdict v;
  if (kind == "vim") {
    auto d = vim_decomposition(g);
    json bags = json::array();
    for (std::size_t t = 0; t < d.bags.size(); ++t)
      bags.push_back({{"time", t + 1}, {"vertices", id_list(names, d.bags[t])}});
    j["bags"] = bags;
    j["width"] = d.width();
  } else if (kind == "tim") {
    auto d = tim_decomposition(g);
    v = validate_tim(g, d);
    json bags = json::array();
    std::vector<std::string> ids;
    std::map<int, int> per_time;
    for (int i = 0; i < d.size(); ++i) {
      int t = d.tau[static_cast<std::size_t>(i)];
      ids.push_back(tim_bag_id(t, per_time[t]++));
      bags.push_back({{"id", ids.back()}, {"time", t}, {"vertices", id_list(names, d.bags[static_cast<std::size_t>(i)])}});
    }
    json edges = json::array();
    for (auto [later, earlier] : d.tree_edges)
      edges.push_back({ids[static_cast<std::size_t>(earlier)], ids[static_cast<std::size_t>(later)]});
    j["bags"] = bags;
    j["tree_edges"] = edges;
    j["width"] = d.width();
    j["components"] = d.components();
  } else if (kind == "tree") {
    auto fp = footprint(g);
    auto d = tree_decomposition_footprint(fp);
    v = validate_tree_decomposition(fp, d);
    json bags = json::array();
    for (auto& b : d.bags) bags.push_back(id_list(fp.names(), b));
    json edges = json::array();
    for (auto [a, b] : d.tree) edges.push_back({a, b});
    j["bags"] = bags;
    j["tree_edges"] = edges;
    j["width"] = d.width();
  } else {
    fail(ErrorCode::InvalidInput, "--kind must be vim, tim or tree");
  }
  j["valid"] = v.ok;
  if (!v.ok) j["violation"] = v.clause + ": " + v.detail;
  if (as_json) {
    emit(j);
  } else {
    std::cout << kind << " width " << j["width"].get<int>() << '\n';
    for (auto& b : j["bags"]) std::cout << b.dump() << '\n';
    if (!v.ok) std::cout << "invalid: " << v.clause << ": " << v.detail << '\n';
  }
  return v.ok ? kTrue : kFalse;
}

int cmd_gaifman(const std::string& file, const std::string& enc_name, bool stats, bool do_export,
                const std::string& format, bool transfer, bool as_json) {
  auto g = read_tg_file(file);
  Encoding enc = parse_encoding(enc_name);
  auto rs = encode(g, enc);
  auto h = gaifman_graph(rs);
  if (!stats && !do_export && !transfer) stats = true;
  json j{{"encoding", encoding_name(enc)}};
  int code = kTrue;
  if (stats) {
    auto td = tree_decomposition_footprint(h);
    j["stats"] = {{"vertices", h.size()},
                  {"edges", h.edges().size()},
                  {"max_degree", h.max_degree()},
                  {"treewidth_upper", td.width()}};
    if (enc == Encoding::Degree) {
      auto d = degree_bound_check(g);
      j["stats"]["degree_bound"] = {{"max_degree", d.max_gaifman_degree}, {"bound", d.bound}, {"holds", d.holds}};
      if (!d.holds) code = kFalse;
    }
  }
  if (transfer) {
    TransferResult r;
    switch (enc) {
      case Encoding::Lifetime: r = transfer_td_lifetime(g, tree_decomposition_footprint(footprint(g))); break;
      case Encoding::Degree: r = transfer_td_degree(g, tree_decomposition_footprint(footprint(g))); break;
      case Encoding::Vim: r = transfer_pd_vim(g); break;
      case Encoding::Tim: r = transfer_td_tim(g, tim_decomposition(g)); break;
    }
    json bags = json::array();
    for (int i = 0; i < r.td.size(); ++i) {
      auto& b = r.bags[static_cast<std::size_t>(i)];
      bags.push_back({{"elements", id_list(r.host.names(), r.td.bags[static_cast<std::size_t>(i)])},
                      {"size", b.size},
                      {"bound", b.bound},
                      {"holds", b.holds}});
    }
    j["transfer"] = {{"valid", r.validation.ok}, {"bounds_hold", r.bounds_hold()}, {"width", r.td.width()}, {"bags", bags}};
    if (!r.validation.ok) j["transfer"]["violation"] = r.validation.clause + ": " + r.validation.detail;
    if (!r.ok()) code = kFalse;
  }
  if (do_export) {
    if (format != "dot" && format != "edges") fail(ErrorCode::InvalidInput, "--format must be dot or edges");
    j["export"] = format == "dot" ? export_dot(h) : export_edge_list(h);
  }
  if (as_json) {
    emit(j);
    return code;
  }
  if (j.contains("stats"))
    for (auto& [k, v] : j["stats"].items()) std::cout << k << ' ' << v.dump() << '\n';
  if (j.contains("transfer")) {
    auto& t = j["transfer"];
    std::cout << "transfer valid " << t["valid"].dump() << " bounds_hold " << t["bounds_hold"].dump() << " width "
              << t["width"].dump() << '\n';
  }
  if (j.contains("export")) std::cout << j["export"].get<std::string>();
  return code;
}

int cmd_check(const std::string& file, const std::string& enc, const std::string& formula_file,
              const std::vector<std::string>& assigns, double budget, bool as_json) {
  auto g = read_tg_file(file);
  auto rs = encode(g, parse_encoding(enc));
  auto f = parse_formula(read_text(formula_file));
  auto a = parse_assignments(assigns, free_variables(*f));
  bool verdict = evaluate(rs, f, a, eval_options(budget));
  if (as_json)
    emit({{"encoding", rs.encoding}, {"formula", print_formula(f)}, {"assignment", assignment_json(a)}, {"verdict", verdict}});
  else
    std::cout << (verdict ? "true" : "false") << '\n';
  return verdict ? kTrue : kFalse;
}

int cmd_cookbook(const std::string& file, const std::string& problem, const std::string& enc_name,
                 const Params& params, const std::string& mode, const std::vector<std::string>& assigns,
                 double budget, bool print_only, bool as_json) {
  auto g = read_tg_file(file);
  Encoding enc = parse_encoding(enc_name);
  const auto& info = problem_info(problem);
  auto built = build_problem(tag_for(g, enc), problem, params);
  auto a = parse_assignments(assigns, built.free_vars);
  json j{{"problem", problem},
         {"encoding", encoding_name(enc)},
         {"mode", mode},
         {"params", params_json(info, params)},
         {"assignment", assignment_json(a)}};
  if (print_only) {
    j["formula"] = print_formula(built.formula);
    j["closed"] = print_formula(built.closed);
    if (as_json)
      emit(j);
    else
      std::cout << print_formula(built.formula) << '\n';
    return kTrue;
  }
  auto rs = encode(g, enc);
  auto opt = eval_options(budget);
  std::vector<Variable> open;
  for (auto& v : built.free_vars)
    if (!bound(a, v.name)) open.push_back(v);
  int code = kTrue;
  if (mode == "check") {
    FormulaPtr f = built.formula;
    if (!open.empty()) {
      bool all_solution = open.size() == built.solution_vars.size();
      for (auto& v : open)
        if (std::none_of(built.solution_vars.begin(), built.solution_vars.end(),
                         [&](const Variable& s) { return s.name == v.name; }))
          all_solution = false;
      if (!all_solution) fail(ErrorCode::UnboundVariable, "free variable " + open.front().name + " needs --assign");
      f = built.closed;
    }
    bool verdict = evaluate(rs, f, a, opt);
    j["verdict"] = verdict;
    code = verdict ? kTrue : kFalse;
    if (!as_json) std::cout << (verdict ? "true" : "false") << '\n';
  } else if (mode == "count") {
    auto n = count_satisfying(rs, built.formula, open, a, opt);
    json vars = json::array();
    for (auto& v : open) vars.push_back(v.name);
    j["variables"] = vars;
    j["count"] = n;
    code = n > 0 ? kTrue : kFalse;
    if (!as_json) std::cout << n << '\n';
  } else if (mode == "optimize") {
    if (!info.objective) fail(ErrorCode::InvalidInput, problem + " has no objective");
    for (auto& v : built.solution_vars)
      if (bound(a, v.name)) fail(ErrorCode::InvalidInput, "solution variable " + v.name + " must not be assigned");
    std::vector<long long> coeff(built.solution_vars.size(), 1);
    try {
      auto r = optimize_affine(rs, built.formula, built.solution_vars, coeff, 0, *info.objective, a, opt);
      json w = json::object();
      for (std::size_t i = 0; i < r.witness.size(); ++i) w[built.solution_vars[i].name] = r.witness[i];
      j["objective"] = *info.objective == Direction::Min ? "min" : "max";
      j["value"] = r.value;
      j["witness"] = w;
      if (!as_json) std::cout << r.value << ' ' << w.dump() << '\n';
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Infeasible) throw;
      j["value"] = nullptr;
      code = kFalse;
      if (!as_json) std::cout << "infeasible\n";
    }
  } else {
    fail(ErrorCode::InvalidInput, "--mode must be check, count or optimize");
  }
  if (as_json) emit(j);
  return code;
}

int cmd_oracle(const std::string& file, const std::string& problem, const Params& params,
               const std::vector<std::string>& assigns, bool as_json) {
  auto g = read_tg_file(file);
  const auto& info = problem_info(problem);
  std::vector<Variable> vars;
  if (info.kind == ProblemKind::Set || info.kind == ProblemKind::PairSet)
    vars.push_back({"X", Order::Set, info.set_sort});
  if (info.kind == ProblemKind::Family)
    for (auto& n : family_names(family_count(problem, g.lifetime(), params))) vars.push_back({n, Order::Set, Sort::V});
  auto a = parse_assignments(assigns, vars);
  json j{{"problem", problem}, {"params", params_json(info, params)}, {"assignment", assignment_json(a)}};
  int code = kTrue;
  const bool want_opt = (info.kind == ProblemKind::Set || info.kind == ProblemKind::PairSet) && !bound(a, "X");
  if (want_opt) {
    if (!info.objective) fail(ErrorCode::UnboundVariable, "X needs --assign");
    auto rep = oracle_optimum(g, problem, params, a);
    j["objective"] = *info.objective == Direction::Min ? "min" : "max";
    j["value"] = rep.value ? json(*rep.value) : json(nullptr);
    j["witness"] = rep.witness;
    j["explored"] = rep.explored;
    code = rep.value ? kTrue : kFalse;
    if (!as_json) std::cout << (rep.value ? std::to_string(*rep.value) + " " + json(rep.witness).dump() : "infeasible") << '\n';
  } else {
    bool verdict = oracle_verdict(g, problem, params, a);
    j["verdict"] = verdict;
    code = verdict ? kTrue : kFalse;
    if (!as_json) std::cout << (verdict ? "true" : "false") << '\n';
  }
  if (as_json) emit(j);
  return code;
}

int cmd_verify(const std::string& problem, bool all, const std::vector<std::string>& encodings, int trials,
               std::uint64_t seed, int n, int lifetime, const std::vector<double>& densities, bool optimize,
               bool as_json) {
  if (all == !problem.empty()) fail(ErrorCode::InvalidInput, "give exactly one of --problem or --all");
  if (trials < 1 || n < 1 || lifetime < 1) fail(ErrorCode::InvalidInput, "--trials, --n and --lifetime must be positive");
  for (double p : densities)
    if (p < 0 || p > 1) fail(ErrorCode::InvalidInput, "--density must lie in [0,1]");
  std::vector<std::string> problems;
  if (all)
    for (auto& info : problem_registry()) problems.push_back(info.name);
  else
    problems.push_back(problem_info(problem).name);
  std::vector<Encoding> wanted;
  for (auto& e : encodings) wanted.push_back(parse_encoding(e));
  json reports = json::array();
  int code = kTrue;
  for (auto& name : problems) {
    const auto& info = problem_info(name);
    for (Encoding e : info.encodings) {
      if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), e) == wanted.end()) continue;
      VerifyConfig cfg;
      cfg.problem = name;
      cfg.encoding = e;
      cfg.trials = trials;
      cfg.seed = seed;
      cfg.n_max = n;
      cfg.lifetime_max = lifetime;
      if (!densities.empty()) cfg.densities = densities;
      cfg.optimize = optimize && info.objective && (info.kind == ProblemKind::Set || info.kind == ProblemKind::PairSet);
      auto rep = verify_problem(cfg);
      if (rep.agreements != rep.trials) code = kFalse;
      if (as_json) {
        reports.push_back(to_json(rep));
      } else {
        std::cout << rep.problem << ' ' << rep.encoding << ' ' << rep.agreements << '/' << rep.trials
                  << " agreements, " << rep.checks << " checks, " << rep.wall_time << "s\n";
        for (auto& d : rep.disagreements)
          std::cout << "  disagreement seed=" << d.seed << ' ' << d.assignment << " formula=" << d.formula
                    << " oracle=" << d.oracle << (d.detail.empty() ? "" : " " + d.detail) << '\n'
                    << d.instance;
      }
    }
  }
  if (reports.empty() && !wanted.empty()) fail(ErrorCode::UnsupportedCombination, "no requested encoding is supported");
  if (as_json) emit(all ? json{{"reports", reports}} : (reports.size() == 1 ? reports[0] : json{{"reports", reports}}));
  return code;
}

int cmd_problems(bool as_json) {
  json arr = json::array();
  for (auto& p : problem_registry()) {
    json encs = json::array();
    for (auto e : p.encodings) encs.push_back(encoding_name(e));
    arr.push_back({{"name", p.name},
                   {"kind", problem_kind_name(p.kind)},
                   {"encodings", encs},
                   {"strict", p.strict},
                   {"nonstrict", p.nonstrict},
                   {"params", p.params},
                   {"objective", p.objective ? json(*p.objective == Direction::Min ? "min" : "max") : json(nullptr)},
                   {"summary", p.summary}});
  }
  if (as_json) {
    emit(arr);
  } else {
    for (auto& p : arr)
      std::cout << p["name"].get<std::string>() << " [" << p["kind"].get<std::string>() << "] "
                << p["summary"].get<std::string>() << '\n';
  }
  return kTrue;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tempo: temporal graph encodings, decompositions and logic"};
  app.require_subcommand(1);
  double budget = -1;
  app.add_option("--budget", budget, "Evaluator assignment budget (0 = unlimited; default TEMPO_BUDGET or 2^20)");

  std::string graph, encoding = "lifetime", out, kind, format = "dot", formula_file, problem, mode = "check";
  std::vector<std::string> assigns, encodings;
  bool as_json = false, stats = false, do_export = false, transfer = false, all = false, optimize = false,
       print_only = false;
  ParamFlags pf;
  int trials = 50, n = 5, lifetime = 4;
  std::uint64_t seed = 0;
  std::vector<double> densities;

  auto* enc_cmd = app.add_subcommand("encode", "Encode a temporal graph as a relational structure");
  enc_cmd->add_option("graph", graph, "Graph file (.tg)")->required();
  enc_cmd->add_option("--encoding", encoding, "lifetime, degree, vim or tim");
  enc_cmd->add_option("--out", out, "Write the structure as JSON to this file");
  enc_cmd->add_flag("--json", as_json, "Print the structure as JSON");

  auto* dec_cmd = app.add_subcommand("decompose", "Build a VIM, TIM or footprint tree decomposition");
  dec_cmd->add_option("graph", graph, "Graph file (.tg)")->required();
  dec_cmd->add_option("--kind", kind, "vim, tim or tree")->required();
  dec_cmd->add_flag("--json", as_json, "JSON output");

  auto* gf_cmd = app.add_subcommand("gaifman", "Gaifman graph statistics, export and width transfer");
  gf_cmd->add_option("graph", graph, "Graph file (.tg)")->required();
  gf_cmd->add_option("--encoding", encoding, "lifetime, degree, vim or tim");
  gf_cmd->add_flag("--stats", stats, "Size, degree and treewidth upper bound");
  gf_cmd->add_flag("--export", do_export, "Export the graph");
  gf_cmd->add_option("--format", format, "Export format: dot or edges");
  gf_cmd->add_flag("--transfer", transfer, "Build and validate the transferred decomposition");
  gf_cmd->add_flag("--json", as_json, "JSON output");

  auto* chk_cmd = app.add_subcommand("check", "Evaluate a formula file on an encoded graph");
  chk_cmd->add_option("graph", graph, "Graph file (.tg)")->required();
  chk_cmd->add_option("--encoding", encoding, "lifetime, degree, vim or tim");
  chk_cmd->add_option("--formula", formula_file, "Formula file")->required();
  chk_cmd->add_option("--assign", assigns, "Free variable bindings NAME=ID or NAME={ID,...}");
  chk_cmd->add_flag("--json", as_json, "JSON output");

  auto* cb_cmd = app.add_subcommand("cookbook", "Build and run a cookbook formula");
  cb_cmd->add_option("graph", graph, "Graph file (.tg)")->required();
  cb_cmd->add_option("--problem", problem, "Problem name (see 'tempo problems')")->required();
  cb_cmd->add_option("--encoding", encoding, "lifetime, degree, vim or tim");
  pf.add(cb_cmd);
  cb_cmd->add_option("--mode", mode, "check, count or optimize");
  cb_cmd->add_option("--assign", assigns, "Free variable bindings NAME=ID or NAME={ID,...}");
  cb_cmd->add_flag("--print", print_only, "Print the formula instead of evaluating it");
  cb_cmd->add_flag("--json", as_json, "JSON output");

  auto* or_cmd = app.add_subcommand("oracle", "Run the brute-force oracle for a problem");
  or_cmd->add_option("graph", graph, "Graph file (.tg)")->required();
  or_cmd->add_option("--problem", problem, "Problem name")->required();
  pf.add(or_cmd);
  or_cmd->add_option("--assign", assigns, "Bindings NAME=ID or NAME={ID,...}; omit X to optimize");
  or_cmd->add_flag("--json", as_json, "JSON output");

  auto* vf_cmd = app.add_subcommand("verify", "Cross-check formulas against oracles on random instances");
  vf_cmd->add_option("--problem", problem, "Problem name");
  vf_cmd->add_flag("--all", all, "Every registered problem");
  vf_cmd->add_option("--encoding", encodings, "Restrict to these encodings");
  vf_cmd->add_option("--trials", trials, "Trials per problem and encoding");
  vf_cmd->add_option("--seed", seed, "Base seed");
  vf_cmd->add_option("--n", n, "Maximum number of vertices");
  vf_cmd->add_option("--lifetime", lifetime, "Maximum lifetime");
  vf_cmd->add_option("--density", densities, "Edge densities to draw from");
  vf_cmd->add_flag("--optimize", optimize, "Also compare optimum values");
  vf_cmd->add_flag("--json", as_json, "JSON output");

  auto* pr_cmd = app.add_subcommand("problems", "List the problem registry");
  pr_cmd->add_flag("--json", as_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  }

  try {
    if (*enc_cmd) return cmd_encode(graph, encoding, out, as_json);
    if (*dec_cmd) return cmd_decompose(graph, kind, as_json);
    if (*gf_cmd) return cmd_gaifman(graph, encoding, stats, do_export, format, transfer, as_json);
    if (*chk_cmd) return cmd_check(graph, encoding, formula_file, assigns, budget, as_json);
    if (*cb_cmd) return cmd_cookbook(graph, problem, encoding, pf.get(), mode, assigns, budget, print_only, as_json);
    if (*or_cmd) return cmd_oracle(graph, problem, pf.get(), assigns, as_json);
    if (*vf_cmd) return cmd_verify(problem, all, encodings, trials, seed, n, lifetime, densities, optimize, as_json);
    if (*pr_cmd) return cmd_problems(as_json);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}
