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

#include <cmath>
#include <random>

#include "stabrel/error.hpp"
#include "stabrel/oracle/channel.hpp"
#include "stabrel/spl/denote.hpp"
#include "stabrel/spl/parser.hpp"
#include "stabrel/spl/random_program.hpp"

using namespace stabrel;
namespace orc = stabrel::oracle;
using orc::CMatrix;
using orc::Complex;

namespace {

spl::Judgment typed(const std::string& src, const Prime& p, bool nl = false) {
  return spl::typecheck(spl::parse(src, {nl}), p);
}

double dist(const CMatrix& a, const CMatrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

CMatrix identity_choi(Eigen::Index d) {
  CMatrix j = CMatrix::Zero(d * d, d * d);
  for (Eigen::Index a = 0; a < d; ++a)
    for (Eigen::Index b = 0; b < d; ++b) j(a * d + a, b * d + b) = 1;
  return j;
}

const char* kTeleport =
    "input in:qpit; qinit x; qinit out; x *= F; (x, out) *= CX^-1;"
    "(in, x) *= CX; in *= F; meas in; meas x; ctrl[Z] in out; ctrl[X] x out; disc in; disc x";

}  // namespace

TEST(PauliMatrix, Examples) {
  const Prime p(3);
  EXPECT_LT(dist(orc::pauli_matrix(PauliLabel::identity(p, 2)), CMatrix::Identity(9, 9)), 1e-15);
  const CMatrix z = orc::pauli_matrix(parse_pauli("Z", p, 1));
  const double tau = 2 * std::acos(-1.0);
  CMatrix expected = CMatrix::Zero(3, 3);
  for (int j = 0; j < 3; ++j) expected(j, j) = std::polar(1.0, tau * j / 3);
  EXPECT_LT(dist(z, expected), 1e-12);
  // X shifts the computational basis.
  const CMatrix x = orc::pauli_matrix(parse_pauli("X", p, 1));
  EXPECT_NEAR(std::abs(x(1, 0)), 1.0, 1e-12);
}

TEST(Projector, Examples) {
  const Prime p(3);
  EXPECT_LT(dist(orc::projector(StabGroup(p, 1, {})), CMatrix::Identity(3, 3)), 1e-15);
  CMatrix zero = CMatrix::Zero(3, 3);
  zero(0, 0) = 1;
  EXPECT_LT(dist(orc::projector(StabGroup(p, 1, {parse_pauli("Z", p, 1)})), zero), 1e-12);
  CMatrix last = CMatrix::Zero(3, 3);
  last(2, 2) = 1;
  EXPECT_LT(dist(orc::projector(StabGroup(p, 1, {parse_pauli("w^1 Z", p, 1)})), last), 1e-12);
}

TEST(Projector, CapIsEnforced) {
  const Prime p(3);
  EXPECT_THROW(orc::projector(StabGroup(p, 7, {}), {729}), ResourceError);
  EXPECT_THROW(orc::run(typed("input a:qpit, b:qpit, c:qpit, d:qpit; skip", p), {729}), ResourceError);
}

TEST(CliffordUnitary, ConjugatesPaulisByTheAction) {
  // U pi(v) U^dagger = pi(S v) up to a phase for every generator gate.
  std::mt19937_64 rng(1);
  const Prime p(5);
  for (auto g : {spl::Gate::X, spl::Gate::Z, spl::Gate::F, spl::Gate::P, spl::Gate::CX, spl::Gate::SWAP}) {
    spl::Clifford c;
    c.gate = g;
    c.power = 1 + static_cast<std::int64_t>(rng() % 3);
    const std::size_t n = spl::gate_arity(g);
    const CMatrix u = orc::clifford_unitary(c, p);
    EXPECT_LT(dist(u * u.adjoint(), CMatrix::Identity(u.rows(), u.cols())), 1e-10);
    const auto act = spl::clifford_action(c, p);
    for (std::size_t k = 0; k < 2 * n; ++k) {
      FVector v(2 * n, 0);
      v[k] = 1;
      const CMatrix lhs = u * orc::pauli_matrix(PauliLabel::from_vector(p, 0, v)) * u.adjoint();
      const CMatrix rhs = orc::pauli_matrix(PauliLabel::from_vector(p, 0, act.s.apply(v)));
      // Equal up to the scalar read off the largest entry.
      Eigen::Index r = 0, col = 0;
      rhs.cwiseAbs().maxCoeff(&r, &col);
      EXPECT_LT(dist(lhs, (lhs(r, col) / rhs(r, col)) * rhs), 1e-9) << spl::to_string(g) << " k=" << k;
    }
  }
}

TEST(AtomicChannel, Examples) {
  const Prime p(3);
  const auto skip = orc::atomic_channel({spl::Skip{}, {}}, spl::TypedEnv({{"q", spl::RegType::Qpit}}), p);
  EXPECT_LT(dist(skip.choi, identity_choi(3)), 1e-12);

  const auto meas = orc::atomic_channel({spl::Meas{"q"}, {}}, spl::TypedEnv({{"q", spl::RegType::Qpit}}), p);
  CMatrix expected = CMatrix::Zero(9, 9);
  for (int j = 0; j < 3; ++j) expected(4 * j, 4 * j) = 1;
  EXPECT_LT(dist(meas.choi, expected), 1e-12);
  EXPECT_EQ(meas.outputs[0].sort, Sort::C);
}

TEST(Run, Examples) {
  const Prime p(3);
  const auto tel = orc::run(typed(kTeleport, p));
  EXPECT_LT(dist(tel.choi, identity_choi(3)), 1e-9);

  const auto q = orc::run(typed("qinit x", p));
  CMatrix zero = CMatrix::Zero(3, 3);
  zero(0, 0) = 1;
  EXPECT_LT(dist(q.choi, zero), 1e-12);

  const auto qm = orc::run(typed("qinit x; meas x", p));
  EXPECT_LT(dist(qm.choi, zero), 1e-12);
  EXPECT_EQ(qm.outputs[0].sort, Sort::C);

  const auto ctrl0 = orc::run(typed("input q:qpit; init c; ctrl[X] c q; disc c", p));
  EXPECT_LT(dist(ctrl0.choi, identity_choi(3)), 1e-12);
}

TEST(Run, LiteralQubitTeleportIsDepolarising) {
  const Prime p(3);
  const auto c = orc::run(typed(
      "input in:qpit; qinit x; qinit out; x *= F; (x, out) *= CX;"
      "(in, x) *= CX; in *= F; meas in; meas x; ctrl[Z] in out; ctrl[X] x out; disc in; disc x",
      p));
  EXPECT_LT(dist(c.choi, CMatrix::Identity(9, 9) / 3.0), 1e-9);
}

TEST(Run, OutputsAreCptp) {
  std::mt19937_64 rng(2);
  const Prime p(3);
  for (int t = 0; t < 30; ++t) {
    spl::RandomProgramOptions o;
    o.input_qupits = 1;
    o.input_pits = rng() % 2;
    o.max_qupits = 2;
    o.max_pits = 1;
    o.max_live = 3;
    o.statements = 1 + rng() % 6;
    const auto c = orc::run(spl::typecheck(spl::random_program(rng, o, p), p));
    EXPECT_TRUE(orc::is_cptp(c, 1e-8));
  }
}

TEST(RelationToChannel, Examples) {
  const Prime p(3);
  const auto id = orc::relation_to_channel(identity(ObjectSignature::quantum(p, 1)));
  EXPECT_LT(dist(id.choi, identity_choi(3)), 1e-12);

  const auto ez = orc::relation_to_channel(decoherence(p));
  const auto mp = orc::run(typed("input q:qpit; meas q; qinit r; ctrl[X] q r; disc q", p));
  EXPECT_LT(dist(ez.choi, mp.choi), 1e-12);
  EXPECT_FALSE(orc::channels_equal(id, ez));
  EXPECT_TRUE(orc::channels_equal(id, id));

  EXPECT_THROW(orc::relation_to_channel(mul_relation(p)), DomainError);
  const auto c = ObjectSignature::classical(p, 1);
  EXPECT_THROW(orc::relation_to_channel(ArqMorphism(c, c, AffineSubspace::point(p, {0, 0}))), DomainError);
}

TEST(RelationToChannel, AgreesWithSimulation) {
  std::mt19937_64 rng(3);
  for (const auto pv : {3, 5}) {
    const Prime p(pv);
    for (int t = 0; t < 25; ++t) {
      spl::RandomProgramOptions o;
      o.input_qupits = 1;
      o.input_pits = pv == 3 ? rng() % 2 : 0;
      o.max_qupits = pv == 3 ? 2 : 1;
      o.max_pits = 1;
      o.max_live = pv == 3 ? 3 : 2;
      o.statements = 1 + rng() % 6;
      const auto j = spl::typecheck(spl::random_program(rng, o, p), p);
      const auto sim = orc::run(j);
      const auto syn = orc::relation_to_channel(spl::denote(j));
      EXPECT_LT(orc::choi_distance(sim, syn), 1e-9) << spl::format(j.program);
    }
  }
}

TEST(SameSupport, SeparatesDifferentOutcomeSets) {
  const Prime p(3);
  const auto a = orc::run(typed("input q:qpit; meas q", p));
  const auto b = orc::run(typed("input q:qpit; q *= F; meas q", p));
  const auto c = orc::run(typed("input q:qpit; q *= Z; meas q", p));
  EXPECT_FALSE(orc::same_support(a, b));
  EXPECT_TRUE(orc::same_support(a, c));
}

TEST(Json, Deterministic) {
  const Prime p(3);
  const auto c = orc::run(typed(kTeleport, p));
  EXPECT_EQ(orc::to_json(c).dump(), orc::to_json(orc::run(typed(kTeleport, p))).dump());
}
