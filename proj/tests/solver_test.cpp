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

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pdom/brute_force.hpp"
#include "pdom/constructions.hpp"
#include "pdom/io.hpp"
#include "pdom/pair_profile.hpp"
#include "pdom/transfer_dp.hpp"

namespace pdom {
namespace {

Vertex U(int i) { return {Ring::Outer, i}; }
Vertex V(int i) { return {Ring::Inner, i}; }

oracle::Kind to_oracle(DominationKind k) {
  switch (k) {
    case DominationKind::Plain: return oracle::Kind::Plain;
    case DominationKind::Total: return oracle::Kind::Total;
    case DominationKind::OneTwo: return oracle::Kind::OneTwo;
    case DominationKind::OneTwoTotal: return oracle::Kind::OneTwoTotal;
  }
  return oracle::Kind::Plain;
}

std::vector<int> canonical_ids(const PetersenGraph& g, const VertexSet& s) {
  std::vector<int> out;
  for (const auto& v : s.members()) out.push_back(g.canonical_index(v));
  return out;
}

TEST(BruteForce, Examples) {
  EXPECT_EQ(brute_force_min(PetersenGraph(5, 2), DominationKind::OneTwo).minimum, 4);
  EXPECT_EQ(brute_force_min(PetersenGraph(5, 2), DominationKind::OneTwoTotal).minimum, 5);
  EXPECT_EQ(brute_force_min(PetersenGraph(7, 2), DominationKind::OneTwo).minimum, 5);
  EXPECT_EQ(brute_force_min(PetersenGraph(6, 2), DominationKind::Plain).minimum, 4);
}

TEST(BruteForce, Errors) {
  EXPECT_THROW(brute_force_min(PetersenGraph(14, 2), DominationKind::OneTwo), SizeLimitError);
  EXPECT_THROW(brute_force_min(PetersenGraph(5, 2), DominationKind::OneTwoTotal, 4),
               InfeasibleError);
  EXPECT_EQ(brute_force_min(PetersenGraph(5, 2), DominationKind::OneTwoTotal, 5).minimum, 5);
}

TEST(BruteForce, WorksForOtherSkips) {
  // P(n,1) is the prism; its [1,2]-domination number equals γ.
  const auto r = brute_force_min(PetersenGraph(6, 1), DominationKind::OneTwo);
  const auto p = brute_force_min(PetersenGraph(6, 1), DominationKind::Plain);
  EXPECT_EQ(r.minimum, p.minimum);
}

// Oracle: all 2^(2n) subsets, witness tie-broken independently.
TEST(ExactSolvers, MatchExhaustiveEnumeration) {
  for (int n = 5; n <= 9; ++n) {
    const PetersenGraph g(n, 2);
    for (auto kind : kAllKinds) {
      const auto want = oracle::exhaustive_min(n, to_oracle(kind));
      const auto bf = brute_force_min(g, kind);
      const auto dp = dp_min(n, kind);
      EXPECT_EQ(bf.minimum, want.size) << n << " " << to_string(kind);
      EXPECT_EQ(dp.minimum, want.size) << n << " " << to_string(kind);
      EXPECT_EQ(canonical_ids(g, bf.witness), want.witness) << n << " " << to_string(kind);
      EXPECT_EQ(canonical_ids(g, dp.witness), want.witness) << n << " " << to_string(kind);
    }
  }
}

TEST(TransferDp, Examples) {
  EXPECT_EQ(dp_min(12, DominationKind::OneTwo).minimum, 8);
  EXPECT_EQ(dp_min(13, DominationKind::OneTwo).minimum, 9);
  EXPECT_EQ(dp_min(13, DominationKind::OneTwoTotal).minimum, 10);
  EXPECT_EQ(dp_min(20, DominationKind::Plain).minimum, 12);
  EXPECT_EQ(dp_min(9, DominationKind::Total).minimum, 6);
  EXPECT_THROW(dp_min(4, DominationKind::OneTwo), ParameterError);
}

TEST(TransferDp, TheoremsAndReferenceFormulasUpToSixty) {
  for (int n = 5; n <= 60; ++n) {
    EXPECT_EQ(dp_min(n, DominationKind::OneTwo).minimum, f_one_two(n)) << n;
    EXPECT_EQ(dp_min(n, DominationKind::OneTwoTotal).minimum, g_one_two_total(n)) << n;
    EXPECT_EQ(dp_min(n, DominationKind::Plain).minimum, gamma_ref(n)) << n;
    EXPECT_EQ(dp_min(n, DominationKind::Total).minimum, gamma_t_ref(n)) << n;
  }
}

TEST(TransferDp, WitnessAgreesWithBruteForce) {
  for (int n = 5; n <= 12; ++n) {
    for (auto kind : kAllKinds) {
      const auto bf = brute_force_min(PetersenGraph(n, 2), kind);
      const auto dp = dp_min(n, kind);
      EXPECT_EQ(dp.minimum, bf.minimum) << n << " " << to_string(kind);
      EXPECT_EQ(dp.witness, bf.witness) << n << " " << to_string(kind);
      EXPECT_EQ(dp.method, SolveMethod::TransferDP);
      EXPECT_EQ(bf.method, SolveMethod::BruteForce);
    }
  }
}

TEST(TransferDp, LargeInstance) {
  const auto r = dp_min(3001, DominationKind::OneTwo);
  EXPECT_EQ(r.minimum, f_one_two(3001));
  EXPECT_TRUE(is_valid(PetersenGraph(3001, 2), r.witness, DominationKind::OneTwo).valid);
}

TEST(SolveResultJson, Shape) {
  const auto r = dp_min(6, DominationKind::OneTwo);
  const auto doc = to_json(r);
  EXPECT_EQ(doc["n"], 6);
  EXPECT_EQ(doc["k"], 2);
  EXPECT_EQ(doc["kind"], "one-two");
  EXPECT_EQ(doc["minimum"], 4);
  EXPECT_EQ(doc["method"], "transfer-dp");
  EXPECT_EQ(doc["witness"].size(), 4u);
  EXPECT_EQ(doc.dump().rfind(R"({"n":6,"k":2,"kind":"one-two","minimum":4,"method":"transfer-dp",)", 0), 0u);
}

TEST(PairProfile, Examples) {
  const PetersenGraph g(6, 2);
  EXPECT_EQ(pair_profile(g, VertexSet(6, {U(1), V(1), U(4), V(4)})).x,
            (std::vector<int>{0, 2, 0, 0, 2, 0}));
  EXPECT_EQ(pair_profile(g, VertexSet(6)).x, std::vector<int>(6, 0));
  EXPECT_EQ(pair_profile(g, VertexSet::all(6)).x, std::vector<int>(6, 2));
  EXPECT_THROW(pair_profile(PetersenGraph(9, 3), VertexSet(9)), ParameterError);
}

TEST(CheckEq1, Examples) {
  const auto a = check_eq1({{1, 1, 0, 1, 1, 0, 1, 1, 0, 1}}, 10);
  EXPECT_TRUE(a.bounds_ok && a.window_ok && a.sum_ok);
  const auto b = check_eq1({{0, 2, 0, 0, 2, 0}}, 6);
  EXPECT_TRUE(b.window_ok);
  EXPECT_FALSE(b.sum_ok);
  EXPECT_FALSE(check_eq1({std::vector<int>(7, 0)}, 7).window_ok);
  EXPECT_FALSE(check_eq1({{3, 0, 0, 3, 0, 0}}, 6).bounds_ok);
  EXPECT_THROW(check_eq1({{1, 1}}, 6), ParameterError);
}

TEST(EnumerateEq1, MatchesBase3Enumeration) {
  for (int n = 5; n <= 13; ++n) {
    const auto got = enumerate_eq1(n);
    const auto want = oracle::eq1_solutions(n, f_one_two(n));
    ASSERT_EQ(got.size(), want.size()) << n;
    for (std::size_t i = 0; i < got.size(); ++i) EXPECT_EQ(got[i].x, want[i]);
  }
}

TEST(EnumerateEq1, Examples) {
  EXPECT_TRUE(enumerate_eq1(12).empty());
  for (int n : {10, 16}) {
    const auto got = enumerate_eq1(n);
    const auto rot = oracle::rotations(oracle::one_one_zero_one(n));
    ASSERT_EQ(got.size(), static_cast<std::size_t>(n));
    ASSERT_EQ(rot.size(), static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < got.size(); ++i) EXPECT_EQ(got[i].x, rot[i]);
  }
  EXPECT_THROW(enumerate_eq1(21), ParameterError);
  EXPECT_THROW(enumerate_eq1(4), ParameterError);
}

TEST(PairProfile, WitnessesWithoutSingletonBlocksSatisfyWindows) {
  for (int n = 5; n <= 40; ++n) {
    const PetersenGraph g(n, 2);
    for (const auto& s : {dp_min(n, DominationKind::OneTwo).witness, construct_one_two(n)}) {
      if (blocks_by_count(g, s).count(1)) continue;
      const auto c = check_eq1(pair_profile(g, s), n);
      EXPECT_TRUE(c.bounds_ok) << n;
      EXPECT_TRUE(c.window_ok) << n;
      EXPECT_FALSE(c.sum_ok) << n;
    }
  }
}

}  // namespace
}  // namespace pdom
