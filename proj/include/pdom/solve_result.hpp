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

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "pdom/domination.hpp"

namespace pdom {

enum class SolveMethod : std::uint8_t { BruteForce, TransferDP };

inline std::string to_string(SolveMethod m) {
  return m == SolveMethod::BruteForce ? "brute-force" : "transfer-dp";
}

/// No valid set exists within the requested cardinality budget.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Instance too large for exhaustive search.
class SizeLimitError : public ParameterError {
 public:
  using ParameterError::ParameterError;
};

/// Vertices of P(n,k) listed column by column: u_0, v_0, u_1, v_1, ...
/// Both exact solvers return, among all minimum sets, the one whose sorted
/// member list is lexicographically smallest in this order.
inline Vertex column_order_vertex(int pos) {
  return {pos % 2 == 0 ? Ring::Outer : Ring::Inner, pos / 2};
}

inline std::vector<std::uint8_t> column_order_bits(const VertexSet& s) {
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(2 * s.n()));
  for (int p = 0; p < 2 * s.n(); ++p) bits[p] = s.contains(column_order_vertex(p));
  return bits;
}

/// True if `a` precedes `b` under the witness tie-break (same cardinality).
inline bool tie_break_before(const VertexSet& a, const VertexSet& b) {
  // Smaller sorted member list <=> larger characteristic vector.
  return column_order_bits(a) > column_order_bits(b);
}

struct SolveResult {
  int n = 0;
  DominationKind kind = DominationKind::Plain;
  int minimum = 0;
  VertexSet witness;
  SolveMethod method = SolveMethod::BruteForce;
};

/// Builds a result after checking the witness against the validator.
inline SolveResult make_result(const PetersenGraph& g, DominationKind kind, VertexSet witness,
                               SolveMethod method) {
  const auto report = is_valid(g, witness, kind);
  if (!report.valid) {
    throw InternalError(to_string(method) + " produced an invalid " + to_string(kind) +
                        " witness for n=" + std::to_string(g.n()));
  }
  SolveResult r;
  r.n = g.n();
  r.kind = kind;
  r.minimum = witness.size();
  r.witness = std::move(witness);
  r.method = method;
  return r;
}

}  // namespace pdom
