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

#include <numeric>
#include <string>
#include <vector>

#include "pdom/formulas.hpp"

namespace pdom {

/// x_i = |{u_i, v_i} ∩ S| for every column i.
struct PairProfile {
  std::vector<int> x;

  friend bool operator==(const PairProfile&, const PairProfile&) = default;
  friend auto operator<=>(const PairProfile&, const PairProfile&) = default;
};

inline PairProfile pair_profile(const PetersenGraph& g, const VertexSet& s) {
  require_k2(g, "pair_profile");
  PairProfile p;
  p.x.reserve(g.n());
  for (int i = 0; i < g.n(); ++i) p.x.push_back(gamma_s(s, pair_at(g, i).vertices));
  return p;
}

/// The pair-profile system for a hypothetical [1,2]-dominating set smaller
/// than f(n) with no singleton block:
///   0 <= x_i <= 2,   x_i + x_{i+1} + x_{i+2} >= 2 (cyclic),   sum x_i < f(n).
struct Eq1Check {
  bool bounds_ok = false;
  bool window_ok = false;
  bool sum_ok = false;

  bool all() const { return bounds_ok && window_ok && sum_ok; }
};

inline Eq1Check check_eq1(const PairProfile& p, int n) {
  if (static_cast<int>(p.x.size()) != n) {
    throw ParameterError("profile length " + std::to_string(p.x.size()) + " != n=" +
                         std::to_string(n));
  }
  Eq1Check c;
  c.bounds_ok = std::all_of(p.x.begin(), p.x.end(), [](int v) { return v >= 0 && v <= 2; });
  c.window_ok = true;
  for (int i = 0; i < n; ++i) {
    if (p.x[i] + p.x[(i + 1) % n] + p.x[(i + 2) % n] < 2) c.window_ok = false;
  }
  c.sum_ok = std::accumulate(p.x.begin(), p.x.end(), 0LL) < f_one_two(n);
  return c;
}

inline constexpr int kEq1MaxN = 20;

/// Every solution of the pair-profile system, in lexicographic order.
inline std::vector<PairProfile> enumerate_eq1(int n) {
  if (n < 5 || n > kEq1MaxN) {
    throw ParameterError("enumerate_eq1 requires 5 <= n <= " + std::to_string(kEq1MaxN) +
                         " (got " + std::to_string(n) + ")");
  }
  const int bound = f_one_two(n);  // sum must stay strictly below
  std::vector<PairProfile> out;
  std::vector<int> x(n, 0);
  auto rec = [&](auto&& self, int i, int sum) -> void {
    if (i == n) {
      if (x[n - 2] + x[n - 1] + x[0] >= 2 && x[n - 1] + x[0] + x[1] >= 2) {
        out.push_back({x});
      }
      return;
    }
    for (int v = 0; v <= 2; ++v) {
      if (sum + v >= bound) break;
      x[i] = v;
      if (i >= 2 && x[i - 2] + x[i - 1] + v < 2) continue;
      self(self, i + 1, sum + v);
    }
    x[i] = 0;
  };
  rec(rec, 0, 0);
  return out;
}

}  // namespace pdom
