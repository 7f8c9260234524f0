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

#include <string>

#include "pdom/domination.hpp"

// Closed-form domination numbers of P(n,2).

namespace pdom {

namespace detail {
inline void require_n_at_least_5(int n, const char* what) {
  if (n < 5) {
    throw ParameterError(std::string(what) + " requires n >= 5 (got " + std::to_string(n) + ")");
  }
}
}  // namespace detail

/// [1,2]-domination number of P(n,2).
inline int f_one_two(int n) {
  detail::require_n_at_least_5(n, "f_one_two");
  switch (n % 6) {
    case 0:
    case 3: return 2 * n / 3;
    case 1: return 2 * (n / 3) + 1;
    default: return 2 * (n / 3) + 2;
  }
}

/// [1,2]-total domination number of P(n,2).
inline int g_one_two_total(int n) {
  detail::require_n_at_least_5(n, "g_one_two_total");
  if (n == 5) return 5;
  if (n % 6 == 0 || n % 6 == 3) return 2 * n / 3;
  return 2 * (n / 3) + 2;
}

/// Domination number ⌈3n/5⌉.
inline int gamma_ref(int n) {
  if (n < 3) throw ParameterError("gamma_ref requires n >= 3");
  return (3 * n + 4) / 5;
}

/// Total domination number 2⌈n/3⌉.
inline int gamma_t_ref(int n) {
  if (n < 3) throw ParameterError("gamma_t_ref requires n >= 3");
  return 2 * ((n + 2) / 3);
}

struct FormulaValue {
  int n = 0;
  DominationKind kind = DominationKind::Plain;
  int value = 0;
};

inline FormulaValue formula_value(int n, DominationKind kind) {
  switch (kind) {
    case DominationKind::Plain: return {n, kind, gamma_ref(n)};
    case DominationKind::Total: return {n, kind, gamma_t_ref(n)};
    case DominationKind::OneTwo: return {n, kind, f_one_two(n)};
    case DominationKind::OneTwoTotal: return {n, kind, g_one_two_total(n)};
  }
  throw InternalError("unreachable kind");
}

}  // namespace pdom
