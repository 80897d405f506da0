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

#include "stabrel/arq.hpp"
#include "stabrel/error.hpp"
#include "support/pointset.hpp"
#include "support/random_codes.hpp"

using namespace stabrel;
using pointset::points;

namespace {

// Coisotropic for -omega on the n1 domain wires and +omega on the n2 codomain wires.
ArqMorphism random_quantum(std::mt19937_64& rng, const Prime& p, std::size_t n1, std::size_t n2) {
  const auto c = pointset::random_coisotropic(rng, p, n1 + n2);
  FMatrix g = c.basis();
  FVector off = c.offset();
  for (std::size_t w = 0; w < n1; ++w) {
    for (std::size_t r = 0; r < g.rows(); ++r) g(r, 2 * w + 1) = p.neg(g(r, 2 * w + 1));
    off[2 * w + 1] = p.neg(off[2 * w + 1]);
  }
  return ArqMorphism(ObjectSignature::quantum(p, n1), ObjectSignature::quantum(p, n2),
                     AffineSubspace::canonicalize(g, off));
}

ArqMorphism random_classical(std::mt19937_64& rng, const Prime& p, std::size_t a, std::size_t b) {
  return ArqMorphism(ObjectSignature::classical(p, a), ObjectSignature::classical(p, b),
                     pointset::random_subspace(rng, p, a + b, 0.1));
}

}  // namespace

TEST(ObjectSignature, DimsAndOffsets) {
  const Prime p(3);
  const ObjectSignature s(p, {Sort::Q, Sort::C, Sort::QDual});
  EXPECT_EQ(s.dim(), 5u);
  EXPECT_EQ(s.offset(2), 3u);
  EXPECT_FALSE(s.quantum_only());
  EXPECT_EQ(s.dual().wires(), (std::vector<Sort>{Sort::QDual, Sort::C, Sort::Q}));
  EXPECT_EQ(sort_from_string(to_string(Sort::QDual)), Sort::QDual);
}

TEST(Splitting, MeasureAfterPrepareIsIdentity) {
  for (const auto pv : {3, 5, 7}) {
    const Prime p(pv);
    EXPECT_EQ(compose(mu_z_dag(p), mu_z(p)), identity(ObjectSignature::classical(p, 1)));
    EXPECT_EQ(compose(mu_z(p), mu_z_dag(p)), decoherence(p));
    EXPECT_EQ(compose(decoherence(p), decoherence(p)), decoherence(p));
    EXPECT_EQ(dagger(decoherence(p)), decoherence(p));
    EXPECT_FALSE(equal(decoherence(p), identity(ObjectSignature::quantum(p, 1))));
  }
}

TEST(Im, StateAndEffect) {
  const Prime p(3);
  const auto a = ObjectSignature::quantum(p, 1);
  EXPECT_EQ(im(a).body(), AffineSubspace::full(p, 2));
  EXPECT_EQ(compose(im(a), dagger(im(a))), identity(ObjectSignature(p)));
}

TEST(CompactStructure, Snake) {
  for (const auto pv : {3, 5}) {
    const Prime p(pv);
    for (std::size_t n = 1; n <= 2; ++n) {
      const auto a = ObjectSignature::quantum(p, n);
      const auto id = identity(a);
      EXPECT_EQ(compose(tensor(id, cup(a)), tensor(cap(a), id)), id);
      const auto ad = a.dual();
      EXPECT_EQ(compose(tensor(cup(a), identity(ad)), tensor(identity(ad), cap(a))), identity(ad));
    }
  }
}

TEST(Dagger, Involution) {
  std::mt19937_64 rng(1);
  const Prime p(3);
  for (int t = 0; t < 40; ++t) {
    const auto f = random_quantum(rng, p, rng() % 3, rng() % 3);
    EXPECT_EQ(dagger(dagger(f)), f);
    EXPECT_EQ(points(dagger(f)), pointset::converse(points(f), f.dom().dim()));
  }
}

TEST(Category, LawsAgainstPointSets) {
  std::mt19937_64 rng(2);
  const Prime p(3);
  for (int t = 0; t < 100; ++t) {
    const std::size_t a = 1 + rng() % 2, b = 1 + rng() % 2, c = 1 + rng() % 2, d = 1 + rng() % 2;
    const auto f = random_classical(rng, p, a, b);
    const auto g = random_classical(rng, p, b, c);
    const auto h = random_classical(rng, p, c, d);
    EXPECT_EQ(compose(compose(f, g), h), compose(f, compose(g, h)));
    EXPECT_EQ(points(compose(f, g)), pointset::compose(points(f), points(g), a, b));
    EXPECT_EQ(compose(identity(f.dom()), f), f);
    EXPECT_EQ(compose(f, identity(f.cod())), f);
    // Interchange: (f (x) g) then (g' (x) h') = (f then g') (x) (g then h') with matching shapes.
    const auto g2 = random_classical(rng, p, b, a);
    const auto h2 = random_classical(rng, p, c, b);
    EXPECT_EQ(compose(tensor(f, g), tensor(g2, h2)), tensor(compose(f, g2), compose(g, h2)));
  }
}

TEST(Category, QuantumCompositionStaysValid) {
  std::mt19937_64 rng(3);
  const Prime p(5);
  for (int t = 0; t < 60; ++t) {
    const auto f = random_quantum(rng, p, 1, 2);
    const auto g = random_quantum(rng, p, 2, 1);
    EXPECT_NO_THROW(compose(f, g));
    EXPECT_NO_THROW(tensor(f, g));
  }
}

TEST(Validation, RejectsBadQuantumMorphisms) {
  const Prime p(3);
  const auto q = ObjectSignature::quantum(p, 1);
  EXPECT_THROW(ArqMorphism(q, q, AffineSubspace::point(p, {0, 0, 0, 0})), DomainError);
  EXPECT_THROW(ArqMorphism(q, q, AffineSubspace::full(p, 3)), ShapeError);
  EXPECT_THROW(compose(mu_z(p), mu_z(p)), ShapeError);
}

TEST(IsTotal, Examples) {
  const Prime p(3);
  EXPECT_TRUE(is_total(mu_z(p)));
  EXPECT_TRUE(is_total(mu_z_dag(p)));
  // The state cup is total; the effect cap only covers the diagonal of its domain.
  EXPECT_TRUE(is_total(cup(ObjectSignature::quantum(p, 1))));
  EXPECT_FALSE(is_total(cap(ObjectSignature::quantum(p, 1))));
  EXPECT_TRUE(is_total(mul_relation(p)));
  const auto c = ObjectSignature::classical(p, 1);
  EXPECT_FALSE(is_total(ArqMorphism(c, c, AffineSubspace::empty_set(p, 2))));
}

TEST(Equal, ScrambledPresentations) {
  const Prime p(5);
  const auto q = ObjectSignature::quantum(p, 1);
  const auto a = AffineSubspace::canonicalize(FMatrix::from_rows(p, 4, {{1, 0, 1, 0}, {0, 1, 0, 1}}), FVector{0, 0, 0, 0});
  const auto b = AffineSubspace::canonicalize(FMatrix::from_rows(p, 4, {{1, 1, 1, 1}, {2, 3, 2, 3}}), FVector{1, 2, 1, 2});
  EXPECT_TRUE(equal(ArqMorphism(q, q, a), ArqMorphism(q, q, b)));
  EXPECT_TRUE(equal(ArqMorphism(q, q, a), identity(q)));
}

TEST(Mul, Relation) {
  const Prime p(3);
  const auto m = mul_relation(p);
  EXPECT_EQ(m.bodies().size(), 3u);
  EXPECT_EQ(m.dom().size(), 2u);
  EXPECT_EQ(m.cod().size(), 1u);
  const auto pts = points(m);
  EXPECT_TRUE(pts.count(FVector{2, 2, 1}));
  EXPECT_EQ(pts.size(), 9u);
  for (const auto& v : pts) EXPECT_EQ(v[2], p.mul(v[0], v[1]));

  const auto c1 = ObjectSignature::classical(p, 1);
  const ArqMorphism copy(c1, ObjectSignature::classical(p, 2),
                         AffineSubspace::linear_span(FMatrix::from_rows(p, 3, {{1, 1, 1}})));
  const auto sq = compose(copy, m);
  EXPECT_EQ(points(sq), (pointset::Set{{0, 0}, {1, 1}, {2, 1}}));
  EXPECT_TRUE(equal(sq, join(sq, sq)));
}

TEST(Equal, UnionsCompareAsSets) {
  const Prime p(3);
  const auto c = ObjectSignature::classical(p, 1);
  // {x = 0} u {x = 1} u {x = 2} as three points vs the full line.
  std::vector<AffineSubspace> pieces;
  for (Residue a = 0; a < 3; ++a)
    pieces.push_back(AffineSubspace::canonicalize(FMatrix::from_rows(p, 2, {{0, 1}}), FVector{a, 0}));
  EXPECT_TRUE(equal(ArqMorphism(c, c, pieces), ArqMorphism(c, c, AffineSubspace::full(p, 2))));
  pieces.pop_back();
  EXPECT_FALSE(equal(ArqMorphism(c, c, pieces), ArqMorphism(c, c, AffineSubspace::full(p, 2))));
}

TEST(Json, RoundTrip) {
  std::mt19937_64 rng(4);
  const Prime p(3);
  for (int t = 0; t < 20; ++t) {
    const auto f = random_quantum(rng, p, 1, 1);
    EXPECT_EQ(morphism_from_json(to_json(f)), f);
  }
  EXPECT_EQ(morphism_from_json(to_json(mul_relation(p))), mul_relation(p));
}
