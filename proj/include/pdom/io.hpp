// Copyright 2026 The pdom Authors
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

#include <json.hpp>

#include "pdom/constructions.hpp"
#include "pdom/domination.hpp"
#include "pdom/solve_result.hpp"

// JSON forms shared by the CLI and by downstream consumers.

namespace pdom {

using json = nlohmann::ordered_json;

inline json to_json(const std::vector<Violation>& vs) {
  json out = json::array();
  for (const auto& v : vs) {
    out.push_back({{"vertex", to_string(v.vertex)}, {"count", v.count}, {"bound", to_string(v.bound)}});
  }
  return out;
}

/// {"x": {"2": 3}, "y": {}} with string keys for component orders.
inline json to_json(const ComponentCensus& c) {
  json x = json::object(), y = json::object();
  for (const auto& [l, cnt] : c.paths) x[std::to_string(l)] = cnt;
  for (const auto& [l, cnt] : c.cycles) y[std::to_string(l)] = cnt;
  return {{"x", x}, {"y", y}};
}

inline json to_json(const Inequality& q) { return {{"lhs", q.lhs}, {"rhs", q.rhs}, {"ok", q.ok}}; }

inline json to_json(const CensusReport& r) {
  return {{"eq2", to_json(r.eq2)}, {"eq3", to_json(r.eq3)}, {"eq4", to_json(r.eq4)},
          {"eq5", to_json(r.eq5)}};
}

inline json to_json(const SolveResult& r, bool with_witness = true) {
  json out = {{"n", r.n}, {"k", 2}, {"kind", to_string(r.kind)}, {"minimum", r.minimum},
              {"method", to_string(r.method)}};
  if (with_witness) out["witness"] = vertex_names(r.witness);
  return out;
}

inline json to_json(const Construction& c) {
  return {{"n", c.recipe.n}, {"kind", to_string(c.recipe.kind)}, {"size", c.set.size()},
          {"set", vertex_names(c.set)}, {"source", to_string(c.recipe.source)}};
}

}  // namespace pdom
