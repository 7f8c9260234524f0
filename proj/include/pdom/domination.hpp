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
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pdom/graph.hpp"

namespace pdom {

/// Plain:       every v outside S has >= 1 neighbour in S.
/// Total:       every v has >= 1 neighbour in S.
/// OneTwo:      every v outside S has 1 or 2 neighbours in S.
/// OneTwoTotal: every v has 1 or 2 neighbours in S.
enum class DominationKind : std::uint8_t { Plain, Total, OneTwo, OneTwoTotal };

inline constexpr DominationKind kAllKinds[] = {DominationKind::Plain, DominationKind::Total,
                                               DominationKind::OneTwo,
                                               DominationKind::OneTwoTotal};

/// Whether members of S are themselves subject to the neighbour-count bound.
constexpr bool constrains_members(DominationKind k) {
  return k == DominationKind::Total || k == DominationKind::OneTwoTotal;
}
constexpr bool has_upper_bound(DominationKind k) {
  return k == DominationKind::OneTwo || k == DominationKind::OneTwoTotal;
}

inline std::string to_string(DominationKind k) {
  switch (k) {
    case DominationKind::Plain: return "plain";
    case DominationKind::Total: return "total";
    case DominationKind::OneTwo: return "one-two";
    case DominationKind::OneTwoTotal: return "one-two-total";
  }
  return "?";
}

inline DominationKind parse_kind(std::string_view s) {
  for (auto k : kAllKinds) {
    if (to_string(k) == s) return k;
  }
  throw ParameterError("unknown domination kind '" + std::string(s) + "'");
}

enum class Bound : std::uint8_t { TooFew, TooMany };

inline std::string to_string(Bound b) { return b == Bound::TooFew ? "TooFew" : "TooMany"; }

struct Violation {
  Vertex vertex;
  int count = 0;
  Bound bound = Bound::TooFew;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  bool valid = true;
  std::vector<Violation> violations;  // canonical vertex order
};

inline int domination_count(const PetersenGraph& g, const VertexSet& s, const Vertex& v) {
  int c = 0;
  for (const auto& w : g.neighbors(v)) c += s.contains(w);
  return c;
}

/// Checks every vertex; all offenders are reported, not just the first.
inline ValidationReport is_valid(const PetersenGraph& g, const VertexSet& s, DominationKind kind) {
  if (s.n() != g.n()) throw ParameterError("vertex set size does not match graph");
  ValidationReport r;
  for (int c = 0; c < g.vertex_count(); ++c) {
    const Vertex v = g.vertex_at(c);
    if (!constrains_members(kind) && s.contains(v)) continue;
    const int cnt = domination_count(g, s, v);
    if (cnt < 1) {
      r.violations.push_back({v, cnt, Bound::TooFew});
    } else if (has_upper_bound(kind) && cnt > 2) {
      r.violations.push_back({v, cnt, Bound::TooMany});
    }
  }
  r.valid = r.violations.empty();
  return r;
}

template <typename Range>
int gamma_s(const VertexSet& s, const Range& u) {
  int c = 0;
  for (const auto& v : u) c += s.contains(v);
  return c;
}

inline int gamma_s(const VertexSet& s, const VertexSet& u) { return gamma_s(s, u.members()); }

/// Buckets the n overlapping blocks of P(n,2) by |b ∩ S|. Only non-empty
/// buckets are present.
inline std::map<int, std::vector<Block>> blocks_by_count(const PetersenGraph& g,
                                                         const VertexSet& s) {
  std::map<int, std::vector<Block>> out;
  for (const auto& b : all_blocks(g)) out[gamma_s(s, b.vertices)].push_back(b);
  return out;
}

/// The member of S inside a block b with |b ∩ S| = 1. Letters are the figure
/// labels as far as they can be inferred from the lower-bound argument
/// (A: v_i, B: u_i, C: u_{i+1}, D: u_{i-1}); they are not authoritative.
enum class BlockType : std::uint8_t { CenterInner, CenterOuter, LeftOuter, RightOuter };

inline std::string to_string(BlockType t) {
  switch (t) {
    case BlockType::CenterInner: return "CenterInner";
    case BlockType::CenterOuter: return "CenterOuter";
    case BlockType::LeftOuter: return "LeftOuter";
    case BlockType::RightOuter: return "RightOuter";
  }
  return "?";
}

inline char inferred_label(BlockType t) {
  switch (t) {
    case BlockType::CenterInner: return 'A';
    case BlockType::CenterOuter: return 'B';
    case BlockType::RightOuter: return 'C';
    case BlockType::LeftOuter: return 'D';
  }
  return '?';
}

/// A singleton block whose member cannot dominate the block centre.
class ClassificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline BlockType classify_singleton_block(const PetersenGraph& g, const VertexSet& s,
                                          const Block& b) {
  require_k2(g, "classify_singleton_block");
  const int count = gamma_s(s, b.vertices);
  if (count != 1) {
    throw ParameterError("block " + std::to_string(b.center) + " has " +
                         std::to_string(count) + " members of S, expected 1");
  }
  const int i = b.center;
  if (s.contains(g.inner(i))) return BlockType::CenterInner;
  if (s.contains(g.outer(i))) return BlockType::CenterOuter;
  if (s.contains(g.outer(i - 1))) return BlockType::LeftOuter;
  if (s.contains(g.outer(i + 1))) return BlockType::RightOuter;
  throw ClassificationError("block " + std::to_string(i) +
                            ": only member is an off-centre inner vertex, so u_" +
                            std::to_string(i) + " is undominated");
}

/// Connected component of G[S]; vertices in canonical order.
struct Component {
  std::vector<Vertex> vertices;
  bool is_cycle = false;

  int order() const { return static_cast<int>(vertices.size()); }
};

struct ComponentCensus {
  std::map<int, int> paths;   // x_l: order -> number of path components
  std::map<int, int> cycles;  // y_l: order -> number of cycle components
  std::vector<Component> components;

  int x(int l) const { auto it = paths.find(l); return it == paths.end() ? 0 : it->second; }
  int y(int l) const { auto it = cycles.find(l); return it == cycles.end() ? 0 : it->second; }
};

/// G[S] has a vertex of degree 0 or 3, so S cannot be [1,2]-total.
class CensusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline ComponentCensus component_census(const PetersenGraph& g, const VertexSet& s) {
  if (s.n() != g.n()) throw ParameterError("vertex set size does not match graph");
  const int total = g.vertex_count();
  std::vector<int> comp(total, -1);
  ComponentCensus out;
  for (int c = 0; c < total; ++c) {
    if (!s.contains_canonical(c) || comp[c] >= 0) continue;
    const int id = static_cast<int>(out.components.size());
    std::vector<int> stack{c};
    std::vector<int> members;
    comp[c] = id;
    bool all_deg2 = true;
    while (!stack.empty()) {
      const int cur = stack.back();
      stack.pop_back();
      members.push_back(cur);
      const Vertex v = g.vertex_at(cur);
      int deg = 0;
      for (const auto& w : g.neighbors(v)) {
        if (!s.contains(w)) continue;
        ++deg;
        const int wc = g.canonical_index(w);
        if (comp[wc] < 0) {
          comp[wc] = id;
          stack.push_back(wc);
        }
      }
      if (deg == 0 || deg == 3) {
        throw CensusError("vertex " + to_string(v) + " has induced degree " +
                          std::to_string(deg));
      }
      all_deg2 = all_deg2 && deg == 2;
    }
    std::sort(members.begin(), members.end());
    Component k;
    for (int m : members) k.vertices.push_back(g.vertex_at(m));
    k.is_cycle = all_deg2;
    ++(k.is_cycle ? out.cycles : out.paths)[k.order()];
    out.components.push_back(std::move(k));
  }
  return out;
}

/// |N[C]|: distinct vertices dominated by the component.
inline int closed_neighborhood_size(const PetersenGraph& g, const Component& c) {
  VertexSet seen(g.n());
  for (const auto& v : c.vertices) {
    seen.insert(v);
    for (const auto& w : g.neighbors(v)) seen.insert(w);
  }
  return seen.size();
}

struct Inequality {
  long long lhs = 0;
  long long rhs = 0;
  bool ok = false;
};

/// Counting inequalities satisfied by the component census of any
/// [1,2]-total dominating set of size s:
///   eq2: sum (2l+2) x_l + 2l y_l >= 2n
///   eq3: sum l (x_l + y_l)       == s
///   eq4: s + sum x_l             >= n
///   eq5: sum l x_l               >= 2 sum x_l
struct CensusReport {
  Inequality eq2, eq3, eq4, eq5;

  bool all_ok() const { return eq2.ok && eq3.ok && eq4.ok && eq5.ok; }
};

inline CensusReport census_inequalities(const ComponentCensus& c, long long n, long long s) {
  long long dom = 0, order_sum = 0, path_count = 0, path_order = 0;
  for (const auto& [l, x] : c.paths) {
    dom += (2LL * l + 2) * x;
    order_sum += 1LL * l * x;
    path_count += x;
    path_order += 1LL * l * x;
  }
  for (const auto& [l, y] : c.cycles) {
    dom += 2LL * l * y;
    order_sum += 1LL * l * y;
  }
  CensusReport r;
  r.eq2 = {dom, 2 * n, dom >= 2 * n};
  r.eq3 = {order_sum, s, order_sum == s};
  r.eq4 = {s + path_count, n, s + path_count >= n};
  r.eq5 = {path_order, 2 * path_count, path_order >= 2 * path_count};
  return r;
}

}  // namespace pdom
