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
#include "stabrel/oracle/channel.hpp"
#include "stabrel/qec.hpp"
#include "support/pointset.hpp"
#include "support/qec_oracle.hpp"
#include "support/random_codes.hpp"

using namespace stabrel;
namespace orc = stabrel::oracle;

namespace {

StabiliserCode zero_line(const Prime& p) {
  return StabiliserCode(AffineSubspace::linear_span(FMatrix::from_rows(p, 2, {{0, 1}})));
}

StabiliserCode repetition(const Prime& p) {
  return StabiliserCode::from_group(StabGroup(p, 3, {parse_pauli("Z0 Z1^2", p, 3), parse_pauli("Z1 Z2^2", p, 3)}));
}

}  // namespace

TEST(StabiliserCode, RejectsNonCoisotropic) {
  const Prime p(3);
  EXPECT_THROW(StabiliserCode(AffineSubspace::point(p, {0, 0})), DomainError);
  EXPECT_NO_THROW(StabiliserCode(AffineSubspace::empty_set(p, 2)));
}

TEST(StabiliserCode, LogicalCount) {
  const Prime p(3);
  EXPECT_EQ(zero_line(p).logical_qupits(), 0u);
  EXPECT_EQ(repetition(p).logical_qupits(), 1u);
  EXPECT_EQ(StabiliserCode(AffineSubspace::full(p, 6)).logical_qupits(), 3u);
}

TEST(ClassifyError, Examples) {
  const Prime p(3);
  const auto code = zero_line(p);
  EXPECT_EQ(classify_error(code, FVector{0, 0}), ErrorClass::Trivial);
  EXPECT_EQ(classify_error(code, FVector{0, 1}), ErrorClass::Trivial);
  EXPECT_EQ(classify_error(code, FVector{1, 0}), ErrorClass::Detectable);

  const StabiliserCode trivial(AffineSubspace::full(p, 4));
  for (const auto& e : pointset::all_vectors(p, 4))
    if (!is_zero(e)) EXPECT_EQ(classify_error(trivial, e), ErrorClass::Logical);
}

TEST(ClassifyError, MatchesProjectorSandwich) {
  std::mt19937_64 rng(1);
  const Prime p(3);
  for (int t = 0; t < 15; ++t) {
    const std::size_t n = 1 + rng() % 2;
    const StabiliserCode code(pointset::random_coisotropic(rng, p, n));
    const orc::CMatrix proj = orc::projector(code.generators());
    std::size_t counts[3] = {0, 0, 0};
    for (const auto& e : pointset::all_vectors(p, 2 * n)) {
      const auto cls = classify_error(code, e);
      EXPECT_EQ(cls, pointset::dense_classify(proj, PauliLabel::from_vector(p, 0, e)));
      ++counts[static_cast<int>(cls)];
    }
    std::size_t total = 1;
    for (std::size_t i = 0; i < 2 * n; ++i) total *= 3;
    EXPECT_EQ(counts[0] + counts[1] + counts[2], total);
  }
}

TEST(IsCorrectable, Examples) {
  const Prime p(3);
  const StabiliserCode trivial(AffineSubspace::full(p, 2));
  EXPECT_TRUE(is_correctable(trivial, {{1, 0}}));
  EXPECT_FALSE(is_correctable(trivial, {{0, 0}, {1, 0}}));
}

TEST(IsCorrectable, RandomWeightOneSets) {
  std::mt19937_64 rng(2);
  const Prime p(3);
  std::vector<FVector> weight_one;
  for (const auto& e : pointset::all_vectors(p, 6))
    if (support_weight(e) == 1) weight_one.push_back(e);
  for (int t = 0; t < 10; ++t) {
    const StabiliserCode code(pointset::random_coisotropic(rng, p, 3));
    const orc::CMatrix proj = orc::projector(code.generators());
    for (int k = 0; k < 10; ++k) {
      std::vector<FVector> errors;
      for (std::size_t i = 0; i < 1 + rng() % 4; ++i) errors.push_back(weight_one[rng() % weight_one.size()]);
      bool expected = true;
      for (std::size_t i = 0; i < errors.size(); ++i)
        for (std::size_t j = 0; j < errors.size(); ++j)
          if (errors[i] != errors[j]) {
            const auto diff = PauliLabel::from_vector(p, 0, sub(p, errors[j], errors[i]));
            expected = expected && pointset::dense_classify(proj, diff) != ErrorClass::Logical;
          }
      EXPECT_EQ(is_correctable(code, errors), expected);
    }
  }
}

TEST(Distance, Examples) {
  const Prime p(3);
  const auto lag = distance(zero_line(p));
  EXPECT_FALSE(lag.distance);
  EXPECT_EQ(lag.reason, "no logical operators");
  for (std::size_t n = 1; n <= 3; ++n) EXPECT_EQ(distance(StabiliserCode(AffineSubspace::full(p, 2 * n))).distance, 1u);
  EXPECT_EQ(distance(repetition(p)).distance, 1u);
}

TEST(Distance, ParallelSerialAndEnumerationAgree) {
  std::mt19937_64 rng(3);
  for (const auto pv : {3, 5}) {
    const Prime p(pv);
    for (int t = 0; t < 30; ++t) {
      const std::size_t n = 1 + rng() % (pv == 3 ? 3 : 2);
      const StabiliserCode code(pointset::random_coisotropic(rng, p, n));
      const auto a = distance(code), b = serial::distance(code);
      EXPECT_EQ(a.distance, b.distance);
      EXPECT_EQ(a.visited, b.visited);
      EXPECT_EQ(a.distance, pointset::enumerated_distance(code));
    }
  }
}

TEST(Distance, BudgetIsEnforced) {
  const Prime p(3);
  EXPECT_THROW(distance(StabiliserCode(AffineSubspace::full(p, 8)), 10), ResourceError);
  EXPECT_THROW(serial::distance(StabiliserCode(AffineSubspace::full(p, 8)), 10), ResourceError);
}

TEST(Encoder, Examples) {
  const Prime p(3);
  EXPECT_EQ(encoder(StabiliserCode(AffineSubspace::full(p, 2))), identity(ObjectSignature::quantum(p, 1)));
  const auto e = encoder(zero_line(p));
  EXPECT_EQ(e.dom().size(), 0u);
  EXPECT_EQ(e.body(), zero_line(p).subspace());
}

TEST(Encoder, ImageIsTheCode) {
  std::mt19937_64 rng(4);
  const Prime p(5);
  for (int t = 0; t < 30; ++t) {
    const StabiliserCode code(pointset::random_coisotropic(rng, p, 1 + rng() % 3));
    const auto e = encoder(code);
    EXPECT_EQ(e.dom().size(), code.logical_qupits());
    EXPECT_EQ(image(e.body(), e.dom().dim()), code.subspace());
    EXPECT_TRUE(is_lagrangian(e));
  }
}

TEST(Refines, Examples) {
  const Prime p(3);
  const auto line = zero_line(p);
  const StabiliserCode trivial(AffineSubspace::full(p, 2));
  EXPECT_TRUE(refines(line, line));
  EXPECT_TRUE(refines(line, trivial));
  EXPECT_FALSE(refines(trivial, line));
}

TEST(Refines, TrivialErrorsAreMonotone) {
  std::mt19937_64 rng(5);
  const Prime p(3);
  std::size_t related = 0;
  for (int t = 0; t < 300; ++t) {
    const StabiliserCode r(pointset::random_coisotropic(rng, p, 2));
    const StabiliserCode s(pointset::random_coisotropic(rng, p, 2));
    if (!refines(r, s)) continue;
    ++related;
    for (const auto& e : pointset::all_vectors(p, 4))
      if (classify_error(s, e) == ErrorClass::Trivial) EXPECT_EQ(classify_error(r, e), ErrorClass::Trivial);
  }
  EXPECT_GT(related, 0u);
}

TEST(ParseCode, TextAndJson) {
  const Prime p(3);
  const auto code = parse_code("p=3 n=3\n# repetition\nZ0 Z1^2\n\nZ1 Z2^2\n", p);
  EXPECT_EQ(code.subspace(), repetition(p).subspace());
  const auto again = parse_code(to_json(code.subspace()).dump(), p);
  EXPECT_EQ(again.subspace(), code.subspace());
  EXPECT_THROW(parse_code("p=5 n=1\nZ0\n", p), ModulusError);
  EXPECT_THROW(parse_code("p=3 n=1\nX0\nZ0\n", p), DomainError);
}

TEST(Json, ReportsGeneratorsAndLogicals) {
  const Prime p(3);
  const auto j = to_json(repetition(p));
  EXPECT_EQ(j["n"], 3);
  EXPECT_EQ(j["logical_qupits"], 1);
  EXPECT_EQ(j["generators"].size(), 2u);
  EXPECT_TRUE(to_json(StabiliserCode(AffineSubspace::empty_set(p, 2))).contains("zero_projector"));
}
