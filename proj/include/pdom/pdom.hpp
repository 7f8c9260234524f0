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

#include "pdom/brute_force.hpp"
#include "pdom/constructions.hpp"
#include "pdom/domination.hpp"
#include "pdom/formulas.hpp"
#include "pdom/graph.hpp"
#include "pdom/pair_profile.hpp"
#include "pdom/solve_result.hpp"
#include "pdom/transfer_dp.hpp"
