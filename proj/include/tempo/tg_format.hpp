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

// Plain-text temporal graph files:
//
//   tg 1
//   undirected strict
//   vertex d
//   edge a b 1 3
//
// "#" starts a comment. An edge line with several labels expands to one
// temporal edge per label.

#pragma once

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "tempo/error.hpp"
#include "tempo/tgraph.hpp"

namespace tempo {

namespace detail {

[[noreturn]] inline void tg_fail(ErrorCode c, int line, const std::string& what) {
  fail(c, "line " + std::to_string(line) + ": " + what);
}

inline int parse_label(const std::string& s, int line) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    tg_fail(ErrorCode::SyntaxError, line, "time label '" + s + "' is not a positive integer");
  int t = 0;
  try {
    t = std::stoi(s);
  } catch (const std::exception&) {
    tg_fail(ErrorCode::SyntaxError, line, "time label '" + s + "' out of range");
  }
  if (t < 1) tg_fail(ErrorCode::SyntaxError, line, "time labels start at 1");
  return t;
}

}  // namespace detail

inline TemporalGraph parse_tg(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  bool header = false, flags = false;
  bool directed = false, strict = true;
  std::vector<std::string> declared;
  std::set<std::string> names;
  std::vector<EdgeSpec> edges;
  while (std::getline(in, raw)) {
    ++line;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    for (std::string w; ls >> w;) tok.push_back(w);
    if (tok.empty()) continue;
    if (tok[0] == "tg") {
      if (header) detail::tg_fail(ErrorCode::DuplicateHeader, line, "second 'tg' header");
      if (tok.size() != 2 || tok[1] != "1") detail::tg_fail(ErrorCode::SyntaxError, line, "expected 'tg 1'");
      header = true;
      continue;
    }
    if (!header) detail::tg_fail(ErrorCode::SyntaxError, line, "file must start with 'tg 1'");
    const bool is_flag = tok[0] == "directed" || tok[0] == "undirected" || tok[0] == "strict" || tok[0] == "nonstrict";
    if (is_flag) {
      if (flags) detail::tg_fail(ErrorCode::DuplicateHeader, line, "second flags line");
      bool dir_seen = false, strict_seen = false;
      for (auto& w : tok) {
        if (w == "directed" || w == "undirected") {
          if (dir_seen) detail::tg_fail(ErrorCode::SyntaxError, line, "conflicting direction flags");
          dir_seen = true;
          directed = w == "directed";
        } else if (w == "strict" || w == "nonstrict") {
          if (strict_seen) detail::tg_fail(ErrorCode::SyntaxError, line, "conflicting strictness flags");
          strict_seen = true;
          strict = w == "strict";
        } else {
          detail::tg_fail(ErrorCode::SyntaxError, line, "unknown flag '" + w + "'");
        }
      }
      if (!dir_seen || !strict_seen)
        detail::tg_fail(ErrorCode::SyntaxError, line, "flags line needs directed|undirected and strict|nonstrict");
      flags = true;
      continue;
    }
    if (!flags) detail::tg_fail(ErrorCode::SyntaxError, line, "second line must give the graph flags");
    if (tok[0] == "vertex") {
      if (tok.size() != 2) detail::tg_fail(ErrorCode::SyntaxError, line, "expected 'vertex NAME'");
      if (!valid_vertex_name(tok[1])) detail::tg_fail(ErrorCode::SyntaxError, line, "bad vertex name '" + tok[1] + "'");
      if (names.insert(tok[1]).second) declared.push_back(tok[1]);
      continue;
    }
    if (tok[0] == "edge") {
      if (tok.size() < 4) detail::tg_fail(ErrorCode::SyntaxError, line, "expected 'edge U V T [T2 ...]'");
      if (tok[1] == tok[2]) detail::tg_fail(ErrorCode::SelfLoop, line, "edge " + tok[1] + " " + tok[2]);
      for (int i : {1, 2})
        if (!valid_vertex_name(tok[static_cast<std::size_t>(i)]))
          detail::tg_fail(ErrorCode::SyntaxError, line, "bad vertex name '" + tok[static_cast<std::size_t>(i)] + "'");
      for (std::size_t i = 3; i < tok.size(); ++i) edges.push_back({tok[1], tok[2], detail::parse_label(tok[i], line)});
      for (int i : {1, 2})
        if (names.insert(tok[static_cast<std::size_t>(i)]).second) declared.push_back(tok[static_cast<std::size_t>(i)]);
      continue;
    }
    detail::tg_fail(ErrorCode::SyntaxError, line, "unknown directive '" + tok[0] + "'");
  }
  if (!header) fail(ErrorCode::SyntaxError, "line 1: missing 'tg 1' header");
  if (!flags) fail(ErrorCode::SyntaxError, "line 2: missing flags line");
  return TemporalGraph(declared, edges, directed, strict);
}

inline TemporalGraph read_tg_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) fail(ErrorCode::InvalidInput, "cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_tg(ss.str());
}

inline std::string print_tg(const TemporalGraph& g) {
  std::ostringstream out;
  out << "tg 1\n" << (g.directed() ? "directed" : "undirected") << ' ' << (g.strict() ? "strict" : "nonstrict") << '\n';
  for (auto& v : g.vertices()) out << "vertex " << v << '\n';
  std::map<std::pair<int, int>, std::vector<int>> labels;
  for (auto& e : g.edges()) labels[{e.u, e.v}].push_back(e.t);
  for (auto& [uv, ts] : labels) {
    out << "edge " << g.name(uv.first) << ' ' << g.name(uv.second);
    for (int t : ts) out << ' ' << t;
    out << '\n';
  }
  return out.str();
}

}  // namespace tempo
