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

#include <array>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "pdom/solve_result.hpp"

// Exact minimisation over P(n,2) by a column-by-column transfer-matrix DP.
//
// Column j holds u_j and v_j. Every edge joins columns at distance <= 2
// (u_j-u_{j+1}, u_j-v_j, v_j-v_{j+2}), so once column j is placed only three
// vertices still miss a neighbour: u_j (needs u_{j+1}), v_{j-1} (needs
// v_{j+1}) and v_j (needs v_{j+2}). The DP state after column j is one local
// code per pending vertex:
//
//   code = 3 * in_S + count        count = S-neighbours seen so far
//
// normalised per kind: a vertex exempt from the bound (a member of S for
// plain / one-two) always has count 0; kinds without an upper bound keep
// count in {0, 1} (meaning ">= 1"); kinds with an upper bound drop any state
// whose count reaches 3. That leaves at most 6^3 = 216 states.
//
// Placing column j+1 with membership (bu, bv) from state (u_j, v_{j-1}, v_j):
//
//   u_j      += bu         -> complete, must satisfy its bound
//   v_{j-1}  += bv         -> complete, must satisfy its bound
//   u_{j+1}   = (bu, in(u_j) + bv)
//   v_{j+1}   = (bv, in(v_{j-1}) + bu)
//   next state  (u_{j+1}, v_j, v_{j+1})
//
// The cycle is closed by enumerating 64 seeds: the membership of u_{n-1},
// v_{n-2}, v_{n-1} (placed as a virtual state before column 0, whose
// completions at columns 0 and 1 are not checked) and of u_0, v_0, v_1
// (forced while placing columns 0 and 1). After column n-1 the pending
// vertices must match the seed, receive their wrap-around neighbours u_0,
// v_0, v_1 and satisfy their bounds.
//
// For each seed a backward pass computes the minimum number of members still
// needed from every (column, state); a forward pass then reconstructs the
// witness, at each column preferring (1,1), (1,0), (0,1), (0,0). That yields
// the same tie-break as brute_force_min.

namespace pdom {

namespace detail {

class TransferDp {
 public:
  static constexpr int kCodes = 6;
  static constexpr int kStates = kCodes * kCodes * kCodes;
  static constexpr int kDead = -1;
  static constexpr std::uint16_t kInf = std::numeric_limits<std::uint16_t>::max();

  enum Mode { kColumn0 = 0, kColumn1 = 1, kGeneral = 2 };

  explicit TransferDp(DominationKind kind) : kind_(kind) {
    for (int mode = 0; mode < 3; ++mode) {
      for (int s = 0; s < kStates; ++s) {
        for (int choice = 0; choice < 4; ++choice) {
          table_[mode][s][choice] = static_cast<std::int16_t>(
              step(s, choice >> 1, choice & 1, mode != kColumn0, mode == kGeneral));
        }
      }
    }
  }

  int norm(int in, int count) const {
    if (!constrains_members(kind_) && in) return 3 * in;
    if (has_upper_bound(kind_)) {
      if (count > 2) return kDead;
    } else {
      count = std::min(count, 1);
    }
    return 3 * in + count;
  }
  static int member(int code) { return code / 3; }
  int add(int code, int bit) const { return norm(member(code), code % 3 + bit); }
  bool complete(int code) const {
    if (code == kDead) return false;
    if (!constrains_members(kind_) && member(code)) return true;
    return code % 3 >= 1;
  }

  static int pack(int cu, int cvp, int cv) { return cu + kCodes * cvp + kCodes * kCodes * cv; }

  int step(int s, int bu, int bv, bool check_u, bool check_vprev) const {
    const int cu = s % kCodes;
    const int cvp = (s / kCodes) % kCodes;
    const int cv = s / (kCodes * kCodes);
    if (check_u && !complete(add(cu, bu))) return kDead;
    if (check_vprev && !complete(add(cvp, bv))) return kDead;
    const int nu = norm(bu, member(cu) + bv);
    const int nv = norm(bv, member(cvp) + bu);
    if (nu == kDead || nv == kDead) return kDead;
    return pack(nu, cv, nv);
  }

  struct Seed {
    int a, b, c;  // u_{n-1}, v_{n-2}, v_{n-1}
    int p, q, r;  // u_0, v_0, v_1
  };

  bool end_ok(int s, const Seed& seed) const {
    const int cu = s % kCodes;
    const int cvp = (s / kCodes) % kCodes;
    const int cv = s / (kCodes * kCodes);
    if (member(cu) != seed.a || member(cvp) != seed.b || member(cv) != seed.c) return false;
    return complete(add(cu, seed.p)) && complete(add(cvp, seed.q)) && complete(add(cv, seed.r));
  }

  static bool allowed(int column, int choice, const Seed& seed) {
    const int bu = choice >> 1, bv = choice & 1;
    if (column == 0) return bu == seed.p && bv == seed.q;
    if (column == 1) return bv == seed.r;
    return true;
  }

  int transition(int column, int s, int choice) const {
    const int mode = column == 0 ? kColumn0 : column == 1 ? kColumn1 : kGeneral;
    return table_[mode][s][choice];
  }

  /// Minimum for one seed, with its tie-break witness (column order) written
  /// to `bits`. Returns kInf when the seed admits no valid set.
  int solve_seed(int n, const Seed& seed, std::vector<std::uint16_t>& ctg,
                 std::vector<std::uint8_t>& bits) const {
    ctg.assign(static_cast<std::size_t>(n + 1) * kStates, kInf);
    auto at = [&](int layer, int s) -> std::uint16_t& {
      return ctg[static_cast<std::size_t>(layer) * kStates + s];
    };
    for (int s = 0; s < kStates; ++s) {
      if (end_ok(s, seed)) at(n, s) = 0;
    }
    // Layer L is the state before column L is placed.
    for (int layer = n - 1; layer >= 0; --layer) {
      for (int s = 0; s < kStates; ++s) {
        int best = kInf;
        for (int choice = 0; choice < 4; ++choice) {
          if (!allowed(layer, choice, seed)) continue;
          const int next = transition(layer, s, choice);
          if (next == kDead || at(layer + 1, next) == kInf) continue;
          best = std::min(best, (choice >> 1) + (choice & 1) + at(layer + 1, next));
        }
        at(layer, s) = static_cast<std::uint16_t>(best);
      }
    }
    const int init = pack(norm(seed.a, 0), norm(seed.b, 0), norm(seed.c, 0));
    const int total = at(0, init);
    if (total == kInf) return kInf;

    bits.assign(static_cast<std::size_t>(2 * n), 0);
    int s = init;
    for (int layer = 0; layer < n; ++layer) {
      bool moved = false;
      for (int choice : {3, 2, 1, 0}) {
        if (!allowed(layer, choice, seed)) continue;
        const int next = transition(layer, s, choice);
        if (next == kDead || at(layer + 1, next) == kInf) continue;
        if ((choice >> 1) + (choice & 1) + at(layer + 1, next) != at(layer, s)) continue;
        bits[2 * layer] = static_cast<std::uint8_t>(choice >> 1);
        bits[2 * layer + 1] = static_cast<std::uint8_t>(choice & 1);
        s = next;
        moved = true;
        break;
      }
      if (!moved) throw InternalError("transfer DP reconstruction lost its path");
    }
    return total;
  }

 private:
  DominationKind kind_;
  std::array<std::array<std::array<std::int16_t, 4>, kStates>, 3> table_{};
};

}  // namespace detail

inline constexpr int kDpMaxN = 30000;

/// Exact minimum for P(n,2) by transfer-matrix DP; O(n) time per seed.
inline SolveResult dp_min(int n, DominationKind kind) {
  if (n < 5) throw ParameterError("dp_min requires n >= 5 (got " + std::to_string(n) + ")");
  // Costs (at most 2n) are stored in 16 bits.
  if (n > kDpMaxN) {
    throw SizeLimitError("dp_min is limited to n <= " + std::to_string(kDpMaxN));
  }
  const PetersenGraph g(n, 2);
  const detail::TransferDp dp(kind);
  std::vector<std::uint16_t> ctg;
  std::vector<std::uint8_t> bits, best_bits;
  int best = detail::TransferDp::kInf;
  for (int code = 0; code < 64; ++code) {
    const detail::TransferDp::Seed seed{(code >> 5) & 1, (code >> 4) & 1, (code >> 3) & 1,
                                        (code >> 2) & 1, (code >> 1) & 1, code & 1};
    const int value = dp.solve_seed(n, seed, ctg, bits);
    if (value == detail::TransferDp::kInf) continue;
    if (value < best || (value == best && bits > best_bits)) {
      best = value;
      best_bits = bits;
    }
  }
  if (best == detail::TransferDp::kInf) {
    throw InfeasibleError("no valid " + to_string(kind) + " set of P(" + std::to_string(n) +
                          ",2)");
  }
  VertexSet s(n);
  for (int p = 0; p < 2 * n; ++p) {
    if (best_bits[p]) s.insert(column_order_vertex(p));
  }
  auto result = make_result(g, kind, std::move(s), SolveMethod::TransferDP);
  if (result.minimum != best) throw InternalError("transfer DP witness size mismatch");
  return result;
}

}  // namespace pdom
