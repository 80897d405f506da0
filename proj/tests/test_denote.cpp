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
#include "stabrel/spl/denote.hpp"
#include "stabrel/spl/parser.hpp"
#include "stabrel/spl/random_program.hpp"
#include "support/pointset.hpp"

using namespace stabrel;
using namespace stabrel::spl;

namespace {

Judgment typed(const std::string& src, const Prime& p, bool nl = false) { return typecheck(parse(src, {nl}), p); }
ArqMorphism den(const std::string& src, const Prime& p, bool nl = false) { return denote(typed(src, p, nl)); }

Verdict verdict(const std::string& a, const std::string& b, const Prime& p, bool positional = false, bool nl = false) {
  EquivOptions o;
  o.positional = positional;
  return equivalent(typed(a, p, nl), typed(b, p, nl), o).verdict;
}

const char* kTeleport =
    "input in:qpit; qinit x; qinit out; x *= F; (x, out) *= CX^-1;"
    "(in, x) *= CX; in *= F; meas in; meas x; ctrl[Z] in out; ctrl[X] x out; disc in; disc x";

}  // namespace

TEST(Denote, SkipIsIdentity) {
  const Prime p(3);
  const ObjectSignature s(p, {Sort::C, Sort::Q});
  EXPECT_EQ(den("input c:pit, q:qpit; skip", p), identity(s));
  EXPECT_EQ(den("skip", p), identity(ObjectSignature(p)));
}

TEST(Denote, PrepareThenMeasureIsZero) {
  const Prime p(3);
  const auto m = den("qinit x; meas x", p);
  EXPECT_EQ(m.cod(), ObjectSignature::classical(p, 1));
  EXPECT_EQ(m.body(), AffineSubspace::point(p, {0}));
}

TEST(Denote, TeleportationIsIdentity) {
  for (const auto pv : {3, 5, 7}) {
    const Prime p(pv);
    EXPECT_EQ(den(kTeleport, p).body(), identity(ObjectSignature::quantum(p, 1)).body());
    EXPECT_EQ(verdict(kTeleport, "input in:qpit; skip", p, true), Verdict::Equivalent);
  }
}

TEST(Denote, AtomicRelations) {
  const Prime p(3);
  EXPECT_EQ(den("input q:qpit; meas q", p), mu_z(p));
  EXPECT_EQ(den("input c:pit; disc c", p).body(), AffineSubspace::full(p, 1));
  EXPECT_EQ(den("input q:qpit; meas q; qinit r; ctrl[X] q r; disc q", p).body(), decoherence(p).body());
}

TEST(Denote, AffineKeepsInputs) {
  const Prime p(5);
  const auto m = den("input x:pit; y = [[2]]+[1] * x", p);
  EXPECT_EQ(m.cod(), ObjectSignature::classical(p, 2));
  for (const auto& v : pointset::points(m)) {
    EXPECT_EQ(v[1], v[0]);
    EXPECT_EQ(v[2], p.add(p.mul(2, v[0]), 1));
  }
}

TEST(Denote, OutputsSortedByName) {
  const Prime p(3);
  const auto m = den("input b:qpit; init a", p);
  EXPECT_EQ(m.cod().wires(), (std::vector<Sort>{Sort::C, Sort::Q}));
}

TEST(Denote, RandomProgramsAreTotal) {
  std::mt19937_64 rng(1);
  const Prime p(3);
  for (int t = 0; t < 150; ++t) {
    RandomProgramOptions o;
    o.input_qupits = rng() % 3;
    o.input_pits = rng() % 2;
    o.statements = 1 + rng() % 12;
    o.nl = rng() % 4 == 0;
    const auto prog = random_program(rng, o, p);
    EXPECT_TRUE(is_total(denote(typecheck(prog, p)))) << format(prog);
  }
}

TEST(Denote, EquivalentVariantsAreEquivalent) {
  std::mt19937_64 rng(2);
  const Prime p(5);
  for (int t = 0; t < 100; ++t) {
    RandomProgramOptions o;
    o.input_qupits = 1 + rng() % 2;
    o.statements = 2 + rng() % 8;
    const auto prog = random_program(rng, o, p);
    const auto var = equivalent_variant(rng, prog, p);
    EXPECT_EQ(equivalent(typecheck(prog, p), typecheck(var, p)).verdict, Verdict::Equivalent)
        << format(prog) << "\nvs\n" << format(var);
  }
}

TEST(Equivalent, Examples) {
  const Prime p(3);
  EXPECT_EQ(verdict("input q:qpit; meas q", "input q:qpit; skip", p), Verdict::InterfaceMismatch);
  EXPECT_EQ(verdict("qinit x; meas x; disc x", "skip", p), Verdict::Equivalent);
  EXPECT_EQ(verdict("input q:qpit; q *= F^4", "input q:qpit; skip", p), Verdict::Equivalent);
  EXPECT_EQ(verdict("input q:qpit; q *= F^2", "input q:qpit; skip", p), Verdict::Inequivalent);
  EXPECT_EQ(verdict("input q:qpit; q *= X; meas q", "input q:qpit; meas q; r = [[1]]+[1] * q; disc q", p),
            Verdict::InterfaceMismatch);
}

TEST(Equivalent, PositionalMatchesRenamedWires) {
  const Prime p(3);
  EXPECT_EQ(verdict("input a:qpit; a *= X", "input b:qpit; b *= X", p), Verdict::InterfaceMismatch);
  EXPECT_EQ(verdict("input a:qpit; a *= X", "input b:qpit; b *= X", p, true), Verdict::Equivalent);
}

TEST(Nonlinear, MulTable) {
  const Prime p(3);
  const auto m = den("input x:pit, y:pit; mul z x y; disc x; disc y", p, true);
  EXPECT_EQ(m.cod(), ObjectSignature::classical(p, 1));
  const auto pts = pointset::points(m);
  EXPECT_TRUE(pts.count(FVector{2, 2, 1}));
  EXPECT_EQ(pts.size(), 9u);
}

TEST(Nonlinear, PinnedOperands) {
  const Prime p(3);
  EXPECT_EQ(verdict("input x:pit; init o; y = [[0]]+[1] * o; disc o; mul z x y; disc y", "input x:pit; z = [[1]] * x",
                    p, false, true),
            Verdict::Equivalent);
  EXPECT_EQ(verdict("input y:pit; init x; mul z x y; disc x", "input y:pit; init z", p, false, true),
            Verdict::Equivalent);
  EXPECT_EQ(verdict("input x:pit; init o; y = [[0]]+[2] * o; disc o; mul z x y; disc y", "input x:pit; z = [[1]] * x",
                    p, false, true),
            Verdict::Inequivalent);
}

TEST(Nonlinear, ResultIsMarkedConjectural) {
  const Prime p(3);
  const auto a = typed("input x:pit, y:pit; mul z x y", p, true);
  EXPECT_TRUE(equivalent(a, a).conjectural);
  const auto b = typed("input x:pit; skip", p);
  EXPECT_FALSE(equivalent(b, b).conjectural);
}
