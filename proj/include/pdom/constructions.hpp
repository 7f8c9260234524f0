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

#include <cstdint>
#include <string>

#include "pdom/domination.hpp"
#include "pdom/formulas.hpp"

// Explicit witness sets of size f(n) ([1,2]-domination) and g(n)
// ([1,2]-total domination) for P(n,2).
//
// Layout, with all indices mod n:
//   n = 0,3 (mod 6)  pairs {u_i, v_i} for i = 1 (mod 3)
//   n = 4   (mod 6)  the same pairs up to n-3, plus the pair at n-2
//   n = 2,5 (mod 6)  the same pairs up to n-4, plus v_{n-2}, v_{n-1}
//   n = 1   (mod 6)  period-6 blocks {u_0, v_1, v_2, u_4} followed by the
//                    seven-column window {u_0, v_1, v_2, v_3, u_4} shifted to
//                    start at n-7 (exactly S_7 when n = 7)
// The total variant reuses the above except for n = 5 (one fixed set) and
// n = 1 (mod 6), where it takes the pairs up to n-3 plus the pair at n-2.

namespace pdom {

enum class RecipeSource : std::uint8_t {
  SmallCaseTable,
  PeriodicPattern,
  SplicedPattern,
  SolverDerived
};

inline std::string to_string(RecipeSource s) {
  switch (s) {
    case RecipeSource::SmallCaseTable: return "small-case-table";
    case RecipeSource::PeriodicPattern: return "periodic-pattern";
    case RecipeSource::SplicedPattern: return "spliced-pattern";
    case RecipeSource::SolverDerived: return "solver-derived";
  }
  return "?";
}

struct ConstructionRecipe {
  int n = 0;
  DominationKind kind = DominationKind::OneTwo;
  RecipeSource source = RecipeSource::PeriodicPattern;
};

struct Construction {
  ConstructionRecipe recipe;
  VertexSet set;
};

/// The minimum [1,2]-dominating sets S_5 .. S_11 listed for the small cases.
inline VertexSet small_case_set(int n) {
  auto u = [](int i) { return Vertex{Ring::Outer, i}; };
  auto v = [](int i) { return Vertex{Ring::Inner, i}; };
  switch (n) {
    case 5: return VertexSet(n, {u(1), v(1), v(3), v(4)});
    case 6: return VertexSet(n, {u(1), v(1), u(4), v(4)});
    case 7: return VertexSet(n, {u(0), v(1), v(2), v(3), u(4)});
    case 8: return VertexSet(n, {u(1), v(1), u(4), v(4), v(6), v(7)});
    case 9: return VertexSet(n, {u(1), v(1), u(4), v(4), u(7), v(7)});
    case 10: return VertexSet(n, {u(1), v(1), u(4), v(4), u(7), v(7), u(8), v(8)});
    case 11: return VertexSet(n, {u(1), v(1), u(4), v(4), u(7), v(7), v(9), v(10)});
    default:
      throw ParameterError("small_case_set requires 5 <= n <= 11 (got " + std::to_string(n) + ")");
  }
}

namespace detail {

inline void add_pair(VertexSet& s, int i) {
  s.insert({Ring::Outer, i});
  s.insert({Ring::Inner, i});
}

// Pairs at 1, 4, 7, ... not exceeding `last`.
inline void add_middle_pairs(VertexSet& s, int last) {
  for (int i = 1; i <= last; i += 3) add_pair(s, i);
}

inline Construction checked(Construction c) {
  const PetersenGraph g(c.recipe.n, 2);
  const int want = c.recipe.kind == DominationKind::OneTwo ? f_one_two(c.recipe.n)
                                                           : g_one_two_total(c.recipe.n);
  if (c.set.size() != want) {
    throw InternalError("construction for n=" + std::to_string(c.recipe.n) + " (" +
                        to_string(c.recipe.kind) + ") has size " +
                        std::to_string(c.set.size()) + ", expected " + std::to_string(want));
  }
  const auto report = is_valid(g, c.set, c.recipe.kind);
  if (!report.valid) {
    throw InternalError("construction for n=" + std::to_string(c.recipe.n) + " (" +
                        to_string(c.recipe.kind) + ") fails validation at " +
                        to_string(report.violations.front().vertex));
  }
  return c;
}

}  // namespace detail

/// Validated [1,2]-dominating set of size f(n), with its recipe tag.
inline Construction construct(int n, DominationKind kind) {
  if (kind != DominationKind::OneTwo && kind != DominationKind::OneTwoTotal) {
    throw ParameterError("constructions exist for one-two and one-two-total only");
  }
  detail::require_n_at_least_5(n, "construct");
  Construction c{{n, kind, RecipeSource::PeriodicPattern}, VertexSet(n)};
  auto& s = c.set;

  if (kind == DominationKind::OneTwoTotal) {
    if (n == 5) {
      c.recipe.source = RecipeSource::SolverDerived;
      s = VertexSet(n, {{Ring::Outer, 0}, {Ring::Outer, 1}, {Ring::Inner, 0},
                        {Ring::Inner, 1}, {Ring::Inner, 3}});
      return detail::checked(std::move(c));
    }
    if (n % 6 == 1) {
      c.recipe.source = RecipeSource::SplicedPattern;
      detail::add_middle_pairs(s, n - 3);
      detail::add_pair(s, n - 2);
      return detail::checked(std::move(c));
    }
    c.set = construct(n, DominationKind::OneTwo).set;
    return detail::checked(std::move(c));
  }

  switch (n % 6) {
    case 0:
    case 3:
      detail::add_middle_pairs(s, n - 1);
      break;
    case 4:
      detail::add_middle_pairs(s, n - 3);
      detail::add_pair(s, n - 2);
      break;
    case 2:
    case 5:
      detail::add_middle_pairs(s, n - 4);
      s.insert({Ring::Inner, n - 2});
      s.insert({Ring::Inner, n - 1});
      break;
    case 1: {
      if (n == 7) {
        c.recipe.source = RecipeSource::SmallCaseTable;
        c.set = small_case_set(7);
        break;
      }
      c.recipe.source = RecipeSource::SplicedPattern;
      for (int base = 0; base + 7 < n; base += 6) {
        s.insert({Ring::Outer, base});
        s.insert({Ring::Inner, base + 1});
        s.insert({Ring::Inner, base + 2});
        s.insert({Ring::Outer, base + 4});
      }
      const int w = n - 7;
      s.insert({Ring::Outer, w});
      for (int d = 1; d <= 3; ++d) s.insert({Ring::Inner, w + d});
      s.insert({Ring::Outer, w + 4});
      break;
    }
  }
  return detail::checked(std::move(c));
}

inline VertexSet construct_one_two(int n) { return construct(n, DominationKind::OneTwo).set; }

inline VertexSet construct_one_two_total(int n) {
  return construct(n, DominationKind::OneTwoTotal).set;
}

}  // namespace pdom
