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

#include <fstream>
#include <random>
#include <sstream>

#include "stabrel/error.hpp"
#include "stabrel/spl/lexer.hpp"
#include "stabrel/spl/parser.hpp"
#include "stabrel/spl/random_program.hpp"
#include "stabrel/spl/typecheck.hpp"

using namespace stabrel;
using namespace stabrel::spl;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* kTeleport =
    "input in:qpit;\n"
    "qinit x; qinit out;\n"
    "x *= F; (x, out) *= CX^-1;\n"
    "(in, x) *= CX; in *= F; meas in; meas x;\n"
    "ctrl[Z] in out; ctrl[X] x out;\n"
    "disc in; disc x\n";

}  // namespace

TEST(Lexer, TokensAndComments) {
  const auto t = tokenize("x *= CX^-1; % comment\n# another\ny = [[1]] * x");
  std::vector<Tok> kinds;
  for (const auto& k : t) kinds.push_back(k.kind);
  EXPECT_EQ(kinds, (std::vector<Tok>{Tok::Ident, Tok::StarAssign, Tok::Ident, Tok::Caret, Tok::Minus, Tok::Int,
                                     Tok::Semi, Tok::Ident, Tok::Assign, Tok::LBracket, Tok::LBracket, Tok::Int,
                                     Tok::RBracket, Tok::RBracket, Tok::Star, Tok::Ident, Tok::End}));
  EXPECT_EQ(t[7].line, 3u);
  EXPECT_EQ(t[7].col, 1u);
}

TEST(Lexer, RejectsStrayCharacters) { EXPECT_THROW(tokenize("x $ y"), SyntaxError); }

TEST(Parser, Skip) {
  const auto p = parse("skip");
  ASSERT_EQ(p.body.size(), 1u);
  EXPECT_TRUE(std::holds_alternative<Skip>(p.body[0].kind));
}

TEST(Parser, TeleportationHasTwelveStatements) {
  const auto p = parse(kTeleport);
  EXPECT_EQ(p.body.size(), 12u);
  EXPECT_EQ(p.inputs, (std::vector<std::pair<std::string, RegType>>{{"in", RegType::Qpit}}));
  const auto& cx = std::get<Clifford>(p.body[3].kind);
  EXPECT_EQ(cx.gate, Gate::CX);
  EXPECT_EQ(cx.power, -1);
  EXPECT_EQ(cx.regs, (std::vector<std::string>{"x", "out"}));
  const auto& ctrl = std::get<Ctrl>(p.body[8].kind);
  EXPECT_EQ(ctrl.pauli, "Z");
  EXPECT_EQ(ctrl.control, "in");
  EXPECT_EQ(ctrl.target, "out");
}

TEST(Parser, ParsingIsTypeAgnostic) { EXPECT_NO_THROW(parse("meas q; meas q")); }

TEST(Parser, AffineAndCliffLiterals) {
  const auto p = parse("input a:pit, b:pit; c = [[1,2]]+[1] * (a, b); q *= cliff [[1,1],[0,1]]+[0,2]", {});
  const auto& a = std::get<Affine>(p.body[0].kind);
  EXPECT_EQ(a.outputs, std::vector<std::string>{"c"});
  EXPECT_EQ(a.inputs, (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(a.matrix, (IntMatrix{{1, 2}}));
  EXPECT_EQ(a.offset, (IntVector{1}));
  const auto& c = std::get<Clifford>(p.body[1].kind);
  EXPECT_EQ(c.gate, Gate::Cliff);
  EXPECT_EQ(c.offset, (IntVector{0, 2}));
}

TEST(Parser, MulNeedsNonlinearMode) {
  EXPECT_THROW(parse("mul z x y"), SyntaxError);
  const auto p = parse("mul z x y", {true});
  EXPECT_EQ(std::get<Mul>(p.body[0].kind).out, "z");
}

TEST(Parser, ErrorsCarryPositions) {
  try {
    parse("qinit x;\nx *= H");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 6u);
  }
  EXPECT_THROW(parse("qinit"), SyntaxError);
  EXPECT_THROW(parse("input x:int; skip"), SyntaxError);
}

TEST(Parser, FormatRoundTrips) {
  std::mt19937_64 rng(1);
  const Prime p(5);
  for (int t = 0; t < 50; ++t) {
    RandomProgramOptions o;
    o.input_pits = rng() % 2;
    o.nl = rng() % 2;
    const auto prog = random_program(rng, o, p);
    const auto again = parse(format(prog), {prog.nl});
    EXPECT_EQ(format(again), format(prog));
  }
}

TEST(Typecheck, Teleportation) {
  const auto j = typecheck(parse(kTeleport), Prime(3));
  EXPECT_EQ(j.output.entries(), (std::vector<std::pair<std::string, RegType>>{{"out", RegType::Qpit}}));
  EXPECT_EQ(j.trace.size(), 12u);
}

TEST(Typecheck, RuleNamesInErrors) {
  const Prime p(3);
  auto rule_of = [&](const std::string& src) {
    try {
      typecheck(parse(src, {true}), p);
    } catch (const TypeError& e) {
      return e.rule();
    }
    return std::string("none");
  };
  EXPECT_EQ(rule_of("input q:qpit; disc q"), "disc");
  EXPECT_EQ(rule_of("init x; init x"), "init");
  EXPECT_EQ(rule_of("input c:pit; meas c"), "meas");
  EXPECT_EQ(rule_of("input q:qpit; q *= CX"), "clifford");
  EXPECT_EQ(rule_of("input a:qpit, b:qpit; (a, a) *= CX"), "clifford");
  EXPECT_EQ(rule_of("input c:pit, q:qpit; ctrl[Z] q c"), "ctrl");
  EXPECT_EQ(rule_of("input x:pit; mul z x x"), "mul");
  EXPECT_EQ(rule_of("input q:qpit; q *= cliff [[1,1],[1,1]]"), "clifford");
  EXPECT_EQ(rule_of("input x:pit; y = [[1]] * x"), "none");
}

TEST(Typecheck, AffineKeepsInputs) {
  const auto j = typecheck(parse("input x:pit; y = [[2]] * x"), Prime(3));
  EXPECT_TRUE(j.output.contains("x"));
  EXPECT_TRUE(j.output.contains("y"));
}

TEST(GateAction, KnownMatrices) {
  const Prime p(5);
  EXPECT_EQ(gate_action(Gate::F, p).s, FMatrix::from_rows(p, 2, {{0, 1}, {-1, 0}}));
  EXPECT_EQ(gate_action(Gate::P, p).s, FMatrix::from_rows(p, 2, {{1, 0}, {-1, 1}}));
  EXPECT_EQ(gate_action(Gate::X, p).t, (FVector{1, 0}));
  EXPECT_EQ(gate_action(Gate::Z, p).t, (FVector{0, 1}));
  const SympSpace sp(p, 2);
  for (auto g : {Gate::CX, Gate::SWAP}) {
    const auto a = gate_action(g, p);
    EXPECT_EQ(a.s.transpose() * sp.gram() * a.s, sp.gram());
  }
}

TEST(GateAction, OrdersAreOrders) {
  const Prime p(7);
  for (auto g : {Gate::X, Gate::Z, Gate::F, Gate::P, Gate::CX, Gate::SWAP}) {
    Clifford c;
    c.gate = g;
    c.power = gate_order(g, p);
    const auto a = clifford_action(c, p);
    EXPECT_EQ(a.s, FMatrix::identity(p, a.s.rows())) << to_string(g);
    EXPECT_TRUE(is_zero(a.t)) << to_string(g);
  }
}

TEST(RandomProgram, AlwaysWellTyped) {
  std::mt19937_64 rng(2);
  const Prime p(3);
  for (int t = 0; t < 200; ++t) {
    RandomProgramOptions o;
    o.input_qupits = rng() % 3;
    o.input_pits = rng() % 2;
    o.nl = rng() % 3 == 0;
    o.statements = 1 + rng() % 10;
    const auto prog = random_program(rng, o, p);
    EXPECT_EQ(prog.body.size(), o.statements);
    Judgment j = typecheck(prog, p);
    EXPECT_NO_THROW(typecheck(equivalent_variant(rng, prog, p), p));
    EXPECT_NO_THROW(typecheck(mutate(rng, prog, p), p));
    // Variants keep the interface.
    const auto v = typecheck(equivalent_variant(rng, prog, p), p);
    EXPECT_TRUE(same_bindings(v.output, j.output));
  }
}

TEST(Programs, ShippedSourcesParse) {
  const std::string dir = STABREL_PROGRAMS;
  for (const char* f : {"teleport.spl", "teleport_literal.spl", "identity.spl"})
    EXPECT_NO_THROW(typecheck(parse(slurp(dir + "/" + f)), Prime(3))) << f;
  EXPECT_THROW(typecheck(parse(slurp(dir + "/bad.spl")), Prime(3)), TypeError);
}
