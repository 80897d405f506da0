// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <random>

#include "stabrel/error.hpp"
#include "stabrel/fieldlin.hpp"
#include "support/pointset.hpp"

using namespace stabrel;

namespace {

FMatrix random_matrix(std::mt19937_64& rng, const Prime& p, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<Residue> val(0, p.value() - 1);
  FMatrix m(p, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = val(rng);
  return m;
}

}  // namespace

TEST(Prime, RejectsCompositesAndTwo) {
  EXPECT_THROW(Prime(2), CssUnsupportedError);
  EXPECT_THROW(Prime(9), ModulusError);
  EXPECT_THROW(Prime(1), ModulusError);
  EXPECT_THROW(Prime(-3), ModulusError);
  EXPECT_NO_THROW(Prime(101));
}

TEST(Prime, Half) {
  EXPECT_EQ(Prime(3).half(), 2u);
  EXPECT_EQ(Prime(5).half(), 3u);
  EXPECT_EQ(Prime(7).half(), 4u);
}

TEST(Prime, InverseAndPow) {
  const Prime p(11);
  for (Residue a = 1; a < 11; ++a) EXPECT_EQ(p.mul(a, p.inv(a)), 1u);
  EXPECT_EQ(p.pow(2, 10), 1u);
  EXPECT_EQ(p.reduce(-1), 10u);
}

TEST(Rref, Examples) {
  const Prime p(3);
  auto a = rref(FMatrix::from_rows(p, 1, {{2}}));
  EXPECT_EQ(a.reduced, FMatrix::from_rows(p, 1, {{1}}));
  EXPECT_EQ(a.pivots, std::vector<std::size_t>{0});

  auto b = rref(FMatrix::from_rows(p, 2, {{1, 2}, {2, 1}}));
  EXPECT_EQ(b.reduced, FMatrix::from_rows(p, 2, {{1, 2}, {0, 0}}));
  EXPECT_EQ(b.pivots, std::vector<std::size_t>{0});

  auto z = rref(FMatrix(p, 2, 3));
  EXPECT_TRUE(z.reduced.is_zero());
  EXPECT_TRUE(z.pivots.empty());
}

TEST(Rref, IdempotentAndRowSpacePreserved) {
  std::mt19937_64 rng(7);
  for (const auto pv : {3, 5, 7}) {
    const Prime p(pv);
    for (int t = 0; t < 40; ++t) {
      const FMatrix m = random_matrix(rng, p, 1 + rng() % 4, 1 + rng() % 4);
      const auto r = rref(m);
      EXPECT_EQ(rref(r.reduced).reduced, r.reduced);
      EXPECT_EQ(r.pivots.size(), rank(m));
      // Same row space: every original row reduces to zero against the RREF rows.
      FMatrix both = r.reduced;
      for (std::size_t i = 0; i < m.rows(); ++i) both.append_row(m.row(i));
      EXPECT_EQ(rank(both), rank(m));
    }
  }
}

TEST(Kernel, Examples) {
  const Prime p(3);
  EXPECT_EQ(kernel(FMatrix::from_rows(p, 2, {{1, 1}})), FMatrix::from_rows(p, 2, {{1, 2}}));
  EXPECT_EQ(kernel(FMatrix::identity(p, 2)).rows(), 0u);
  EXPECT_EQ(kernel(FMatrix::from_rows(p, 2, {{1, 2}, {2, 1}})), FMatrix::from_rows(p, 2, {{1, 1}}));
}

TEST(Kernel, MatchesEnumeration) {
  std::mt19937_64 rng(11);
  const Prime p(3);
  for (int t = 0; t < 40; ++t) {
    const std::size_t c = 1 + rng() % 4;
    const FMatrix m = random_matrix(rng, p, 1 + rng() % 3, c);
    const FMatrix k = kernel(m);
    std::size_t count = 0;
    for (const auto& v : pointset::all_vectors(p, c))
      if (is_zero(m.apply(v))) ++count;
    std::size_t expected = 1;
    for (std::size_t i = 0; i < k.rows(); ++i) expected *= 3;
    EXPECT_EQ(count, expected);
    for (std::size_t i = 0; i < k.rows(); ++i) EXPECT_TRUE(is_zero(m.apply(k.row(i))));
  }
}

TEST(Solve, Examples) {
  const Prime p(3);
  auto a = solve(FMatrix::from_rows(p, 1, {{1}}), FVector{2});
  ASSERT_TRUE(a);
  EXPECT_EQ(a->particular, (FVector{2}));
  EXPECT_EQ(a->kernel.rows(), 0u);

  EXPECT_FALSE(solve(FMatrix::from_rows(p, 1, {{0}}), FVector{1}));

  auto c = solve(FMatrix::from_rows(p, 2, {{1, 1}}), FVector{1});
  ASSERT_TRUE(c);
  EXPECT_EQ(c->particular, (FVector{1, 0}));
  EXPECT_EQ(c->kernel, FMatrix::from_rows(p, 2, {{1, 2}}));
}

TEST(Solve, AgreesWithBruteForce) {
  std::mt19937_64 rng(5);
  const Prime p(5);
  std::uniform_int_distribution<Residue> val(0, 4);
  for (int t = 0; t < 60; ++t) {
    const std::size_t r = 1 + rng() % 3, c = 1 + rng() % 3;
    const FMatrix m = random_matrix(rng, p, r, c);
    FVector b(r);
    for (auto& x : b) x = val(rng);
    bool any = false;
    for (const auto& v : pointset::all_vectors(p, c)) any = any || m.apply(v) == b;
    const auto s = solve(m, b);
    EXPECT_EQ(s.has_value(), any);
    if (s) EXPECT_EQ(m.apply(s->particular), b);
  }
}

TEST(Inverse, RoundTripAndSingular) {
  std::mt19937_64 rng(3);
  const Prime p(7);
  int checked = 0;
  while (checked < 20) {
    const FMatrix m = random_matrix(rng, p, 3, 3);
    if (rank(m) < 3) {
      EXPECT_THROW(inverse(m), DomainError);
      continue;
    }
    EXPECT_EQ(m * inverse(m), FMatrix::identity(p, 3));
    ++checked;
  }
}

TEST(FMatrix, ModulusMismatchIsRejected) {
  EXPECT_THROW(FMatrix::identity(Prime(3), 2) * FMatrix::identity(Prime(5), 2), ModulusError);
}
