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
#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tempo/decomp.hpp"
#include "tempo/error.hpp"

namespace tempo {

enum class Sort { V, TE, L, B };

inline constexpr std::array<Sort, 4> kAllSorts{Sort::V, Sort::TE, Sort::L, Sort::B};

inline const char* sort_name(Sort s) {
  switch (s) {
    case Sort::V: return "V";
    case Sort::TE: return "TE";
    case Sort::L: return "L";
    case Sort::B: return "B";
  }
  return "?";
}

inline std::optional<Sort> parse_sort(const std::string& s) {
  for (Sort x : kAllSorts)
    if (s == sort_name(x)) return x;
  return std::nullopt;
}

struct Relation {
  int arity = 0;
  std::vector<std::vector<int>> tuples;  // element indices, kept sorted and unique
};

class RelationalStructure {
 public:
  std::string encoding;  // "lifetime", "degree", "vim", "tim" or empty

  int add_element(const std::string& id, Sort sort) {
    if (index_.count(id)) fail(ErrorCode::InvalidInput, "duplicate element id " + id);
    int i = static_cast<int>(ids_.size());
    ids_.push_back(id);
    sorts_.push_back(sort);
    index_[id] = i;
    return i;
  }

  void declare(const std::string& rel, int arity) {
    auto& r = relations_[rel];
    if (r.arity != 0 && r.arity != arity)
      fail(ErrorCode::SignatureMismatch, "relation " + rel + " redeclared with another arity");
    r.arity = arity;
  }

  void add_tuple(const std::string& rel, std::vector<int> tuple) {
    declare(rel, static_cast<int>(tuple.size()));
    relations_[rel].tuples.push_back(std::move(tuple));
  }

  void add_tuple_ids(const std::string& rel, const std::vector<std::string>& ids) {
    std::vector<int> t;
    for (auto& id : ids) {
      auto i = find(id);
      if (!i) fail(ErrorCode::InvalidInput, "tuple of " + rel + " references missing element " + id);
      t.push_back(*i);
    }
    add_tuple(rel, std::move(t));
  }

  // Sorts tuples and drops duplicates; encoders call this once at the end.
  void normalize() {
    for (auto& [name, r] : relations_) {
      std::sort(r.tuples.begin(), r.tuples.end());
      r.tuples.erase(std::unique(r.tuples.begin(), r.tuples.end()), r.tuples.end());
    }
  }

  int size() const { return static_cast<int>(ids_.size()); }
  const std::string& id(int i) const { return ids_.at(i); }
  Sort sort_of(int i) const { return sorts_.at(i); }
  const std::vector<std::string>& ids() const { return ids_; }
  std::optional<int> find(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  std::vector<int> members(Sort s) const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
      if (sorts_[i] == s) out.push_back(i);
    return out;
  }
  const std::map<std::string, Relation>& relations() const { return relations_; }
  const Relation* relation(const std::string& name) const {
    auto it = relations_.find(name);
    return it == relations_.end() ? nullptr : &it->second;
  }
  bool holds(const std::string& rel, const std::vector<int>& tuple) const {
    auto* r = relation(rel);
    return r && std::binary_search(r->tuples.begin(), r->tuples.end(), tuple);
  }

 private:
  std::vector<std::string> ids_;
  std::vector<Sort> sorts_;
  std::unordered_map<std::string, int> index_;
  std::map<std::string, Relation> relations_;
};

struct StructureStats {
  std::map<std::string, int> sort_sizes;
  std::map<std::string, int> tuple_counts;
};

inline StructureStats structure_stats(const RelationalStructure& rs) {
  StructureStats s;
  for (Sort x : kAllSorts) s.sort_sizes[sort_name(x)] = static_cast<int>(rs.members(x).size());
  for (auto& [name, r] : rs.relations()) s.tuple_counts[name] = static_cast<int>(r.tuples.size());
  return s;
}

// Argument sorts of every relation an encoder may emit.
inline std::optional<std::vector<Sort>> relation_signature(const std::string& encoding,
                                                           const std::string& rel) {
  Sort time = encoding == "lifetime" ? Sort::L : Sort::B;
  if (rel == "inc" || rel == "source" || rel == "target") return std::vector{Sort::TE, Sort::V};
  if (rel == "pres") return std::vector{Sort::TE, time};
  if (rel == "ltT") return std::vector{Sort::L, Sort::L};
  if (rel == "psuc") return std::vector{Sort::TE, Sort::TE};
  if (rel == "bag") return std::vector{Sort::V, Sort::B};
  if (rel == "next") return std::vector{Sort::B, Sort::B};
  return std::nullopt;
}

inline Verdict validate_structure(const RelationalStructure& rs) {
  for (auto& [name, r] : rs.relations()) {
    auto sig = relation_signature(rs.encoding, name);
    for (auto& t : r.tuples) {
      if (static_cast<int>(t.size()) != r.arity)
        return Verdict::reject("arity", name + " tuple has wrong length");
      for (std::size_t k = 0; k < t.size(); ++k) {
        if (t[k] < 0 || t[k] >= rs.size())
          return Verdict::reject("element", name + " tuple references a missing element");
        if (sig && (sig->size() != t.size() || (*sig)[k] != rs.sort_of(t[k])))
          return Verdict::reject("signature", name + " tuple violates its sort signature");
      }
    }
  }
  const auto te = rs.members(Sort::TE);
  auto count_first = [&](const std::string& rel, int e) {
    auto* r = rs.relation(rel);
    int c = 0;
    if (r)
      for (auto& t : r->tuples)
        if (t[0] == e) ++c;
    return c;
  };
  const bool directed = rs.relation("source") != nullptr || rs.relation("target") != nullptr;
  for (int e : te) {
    if (directed) {
      if (count_first("source", e) != 1 || count_first("target", e) != 1)
        return Verdict::reject("incidence", rs.id(e) + " needs one source and one target");
    } else if (count_first("inc", e) != 2) {
      return Verdict::reject("incidence", rs.id(e) + " needs two endpoints");
    }
  }
  const std::string& enc = rs.encoding;
  if (enc == "lifetime" || enc == "vim" || enc == "tim") {
    for (int e : te)
      if (count_first("pres", e) != 1)
        return Verdict::reject("pres", rs.id(e) + " must be present exactly once");
  }
  if (enc == "lifetime") {
    auto l = rs.members(Sort::L);
    for (int a : l)
      for (int b : l) {
        bool ab = rs.holds("ltT", {a, b});
        bool ba = rs.holds("ltT", {b, a});
        if (a == b && ab) return Verdict::reject("order", "ltT is not irreflexive");
        if (a != b && ab == ba) return Verdict::reject("order", "ltT is not a strict total order");
        for (int c : l)
          if (ab && rs.holds("ltT", {b, c}) && !rs.holds("ltT", {a, c}))
            return Verdict::reject("order", "ltT is not transitive");
      }
  }
  if (enc == "degree") {
    if (auto* r = rs.relation("psuc"))
      for (auto& t : r->tuples)
        if (t[0] == t[1]) return Verdict::reject("psuc", "psuc is not irreflexive");
  }
  if (enc == "vim" || enc == "tim") {
    auto b = rs.members(Sort::B);
    std::map<int, int> local;
    for (int x : b) local[x] = static_cast<int>(local.size());
    std::vector<std::pair<int, int>> edges;
    std::vector<int> indeg(b.size(), 0), outdeg(b.size(), 0);
    if (auto* r = rs.relation("next"))
      for (auto& t : r->tuples) {
        edges.push_back({local[t[0]], local[t[1]]});
        ++outdeg[local[t[0]]];
        ++indeg[local[t[1]]];
      }
    if (!detail::find_cycle(static_cast<int>(b.size()), edges).empty())
      return Verdict::reject("next", "next graph has a cycle");
    if (enc == "vim") {
      if (!b.empty() && static_cast<int>(edges.size()) != static_cast<int>(b.size()) - 1)
        return Verdict::reject("next", "next is not a path over all bags");
      for (std::size_t i = 0; i < b.size(); ++i)
        if (indeg[i] > 1 || outdeg[i] > 1)
          return Verdict::reject("next", "next is not a simple path");
    }
  }
  return Verdict::accept();
}

inline nlohmann::json to_json(const RelationalStructure& rs) {
  nlohmann::json j;
  j["sorts"] = nlohmann::json::object();
  for (Sort s : kAllSorts) {
    auto arr = nlohmann::json::array();
    for (int i : rs.members(s)) arr.push_back(rs.id(i));
    j["sorts"][sort_name(s)] = arr;
  }
  j["relations"] = nlohmann::json::object();
  for (auto& [name, r] : rs.relations()) {
    auto tuples = nlohmann::json::array();
    for (auto& t : r.tuples) {
      auto row = nlohmann::json::array();
      for (int x : t) row.push_back(rs.id(x));
      tuples.push_back(row);
    }
    j["relations"][name] = {{"arity", r.arity}, {"tuples", tuples}};
  }
  if (!rs.encoding.empty()) j["encoding"] = rs.encoding;
  return j;
}

inline RelationalStructure structure_from_json(const nlohmann::json& j) {
  RelationalStructure rs;
  try {
    if (j.contains("encoding")) rs.encoding = j.at("encoding").get<std::string>();
    for (Sort s : kAllSorts) {
      if (!j.at("sorts").contains(sort_name(s))) continue;
      for (auto& id : j.at("sorts").at(sort_name(s))) rs.add_element(id.get<std::string>(), s);
    }
    for (auto& [name, r] : j.at("relations").items()) {
      int arity = r.at("arity").get<int>();
      rs.declare(name, arity);
      for (auto& t : r.at("tuples")) {
        std::vector<std::string> ids;
        for (auto& x : t) ids.push_back(x.get<std::string>());
        if (static_cast<int>(ids.size()) != arity)
          fail(ErrorCode::InvalidInput, "tuple length differs from arity in " + name);
        rs.add_tuple_ids(name, ids);
      }
    }
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::InvalidInput, std::string("malformed structure JSON: ") + e.what());
  }
  rs.normalize();
  return rs;
}

}  // namespace tempo
