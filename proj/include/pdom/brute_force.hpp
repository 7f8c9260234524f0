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

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pdom/solve_result.hpp"

namespace pdom {

namespace detail {

class BruteForceSearch {
 public:
  BruteForceSearch(const PetersenGraph& g, DominationKind kind)
      : kind_(kind), size_(g.vertex_count()), nbr_(size_), ready_(size_) {
    // Positions follow the column order, so the first set found by an
    // include-first search is the tie-break winner.
    auto pos = [](const Vertex& v) { return 2 * v.index + (v.ring == Ring::Inner); };
    for (int p = 0; p < size_; ++p) {
      const Vertex v = column_order_vertex(p);
      int last = p;
      for (const auto& w : g.neighbors(v)) {
        nbr_[p] |= 1u << pos(w);
        last = std::max(last, pos(w));
      }
      ready_[last].push_back(p);
    }
  }

  /// Lexicographically first valid set with at most `limit` members.
  std::optional<std::uint32_t> search(int limit) {
    limit_ = limit;
    if (dfs(0, 0u, 0)) return found_;
    return std::nullopt;
  }

 private:
  bool applies(std::uint32_t mask, int p) const {
    return constrains_members(kind_) || !((mask >> p) & 1u);
  }

  bool consistent(std::uint32_t mask, int q) const {
    for (int p : ready_[q]) {
      if (!applies(mask, p)) continue;
      const int cnt = std::popcount(mask & nbr_[p]);
      if (cnt < 1 || (has_upper_bound(kind_) && cnt > 2)) return false;
    }
    if (has_upper_bound(kind_) && ((mask >> q) & 1u)) {
      // Adding q may overload a neighbour that is already fully decided
      // (or, for total kinds, any neighbour at all).
      for (int p = 0; p < size_; ++p) {
        if (!((nbr_[q] >> p) & 1u)) continue;
        if (!constrains_members(kind_) && (p > q || ((mask >> p) & 1u))) continue;
        if (std::popcount(mask & nbr_[p]) > 2) return false;
      }
    }
    return true;
  }

  bool dfs(int q, std::uint32_t mask, int used) {
    if (q == size_) {
      found_ = mask;
      return true;
    }
    if (used < limit_) {
      const std::uint32_t with = mask | (1u << q);
      if (consistent(with, q) && dfs(q + 1, with, used + 1)) return true;
    }
    return consistent(mask, q) && dfs(q + 1, mask, used);
  }

  DominationKind kind_;
  int size_;
  int limit_ = 0;
  std::uint32_t found_ = 0;
  std::vector<std::uint32_t> nbr_;
  std::vector<std::vector<int>> ready_;
};

}  // namespace detail

inline constexpr int kBruteForceMaxVertices = 26;

/// Exact minimum by exhaustive search over subsets of increasing size.
/// With a budget, only sets of at most that many vertices are considered
/// and InfeasibleError is raised if none is valid.
inline SolveResult brute_force_min(const PetersenGraph& g, DominationKind kind,
                                   std::optional<int> budget = std::nullopt) {
  if (g.vertex_count() > kBruteForceMaxVertices) {
    throw SizeLimitError("brute force is limited to 2n <= " +
                         std::to_string(kBruteForceMaxVertices) + " (got n=" +
                         std::to_string(g.n()) + ")");
  }
  const int cap = budget ? std::min(*budget, g.vertex_count()) : g.vertex_count();
  detail::BruteForceSearch search(g, kind);
  for (int limit = 0; limit <= cap; ++limit) {
    if (auto mask = search.search(limit)) {
      VertexSet s(g.n());
      for (int p = 0; p < g.vertex_count(); ++p) {
        if ((*mask >> p) & 1u) s.insert(column_order_vertex(p));
      }
      return make_result(g, kind, std::move(s), SolveMethod::BruteForce);
    }
  }
  throw InfeasibleError("no valid " + to_string(kind) + " set of P(" + std::to_string(g.n()) +
                        "," + std::to_string(g.k()) + ") with at most " + std::to_string(cap) +
                        " vertices");
}

}  // namespace pdom
