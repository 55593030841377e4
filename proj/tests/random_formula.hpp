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

// Random formulas over the relations of a structure, for property tests.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tempo/formula.hpp"
#include "tempo/oracles.hpp"
#include "tempo/structure.hpp"

namespace tempo::testing {

class FormulaGen {
 public:
  FormulaGen(const RelationalStructure& rs, std::uint64_t seed) : rng_(seed) {
    for (auto& [name, r] : rs.relations()) rels_.push_back({name, r.arity});
  }

  // A formula whose free variables are among elems and sets.
  FormulaPtr gen(int depth, std::vector<std::string> elems, std::vector<std::string> sets) {
    if (depth <= 0) return atom(elems, sets);
    switch (rng_.below(9)) {
      case 0: return atom(elems, sets);
      case 1: return fm::neg(gen(depth - 1, elems, sets));
      case 2: return fm::conj({gen(depth - 1, elems, sets), gen(depth - 1, elems, sets)});
      case 3: return fm::disj({gen(depth - 1, elems, sets), gen(depth - 1, elems, sets)});
      case 4: return fm::implies(gen(depth - 1, elems, sets), gen(depth - 1, elems, sets));
      case 5: return fm::iff(gen(depth - 1, elems, sets), gen(depth - 1, elems, sets));
      case 6:
      case 7: {
        auto x = "x" + std::to_string(counter_++);
        auto g = guard();
        elems.push_back(x);
        auto body = gen(depth - 1, elems, sets);
        return rng_.below(2) ? fm::exists(x, g, body) : fm::forall(x, g, body);
      }
      default: {
        auto s = "S" + std::to_string(counter_++);
        auto g = rng_.below(2) ? Sort::V : Sort::L;
        sets.push_back(s);
        auto body = gen(depth - 1, elems, sets);
        return rng_.below(2) ? fm::exists_set(s, g, body) : fm::forall_set(s, g, body);
      }
    }
  }

  std::optional<Sort> guard() {
    switch (rng_.below(5)) {
      case 0: return std::nullopt;
      case 1: return Sort::TE;
      case 2: return Sort::L;
      default: return Sort::V;
    }
  }

  int below(int n) { return rng_.below(n); }

 private:
  const std::string& pick(const std::vector<std::string>& xs) { return xs[static_cast<std::size_t>(rng_.below(static_cast<int>(xs.size())))]; }

  FormulaPtr atom(const std::vector<std::string>& elems, const std::vector<std::string>& sets) {
    if (elems.empty()) return fm::truth(rng_.below(2) == 0);
    switch (rng_.below(6)) {
      case 0: return fm::eq(pick(elems), pick(elems));
      case 1: {
        static const char* sorts[] = {"V", "TE", "L"};
        return fm::rel(sorts[rng_.below(3)], {pick(elems)});
      }
      case 2:
        if (!sets.empty()) return fm::mem(pick(elems), pick(sets));
        [[fallthrough]];
      default: {
        if (rels_.empty()) return fm::eq(pick(elems), pick(elems));
        auto& [name, arity] = rels_[static_cast<std::size_t>(rng_.below(static_cast<int>(rels_.size())))];
        std::vector<std::string> args;
        for (int i = 0; i < arity; ++i) args.push_back(pick(elems));
        return fm::rel(name, args);
      }
    }
  }

  CounterRng rng_;
  std::vector<std::pair<std::string, int>> rels_;
  int counter_ = 0;
};

}  // namespace tempo::testing
