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

#include "stabrel/spl/parser.hpp"

#include <sstream>

#include "stabrel/error.hpp"
#include "stabrel/spl/lexer.hpp"

namespace stabrel::spl {

std::string to_string(RegType t) { return t == RegType::Pit ? "pit" : "qpit"; }

std::string to_string(Gate g) {
  switch (g) {
    case Gate::X: return "X";
    case Gate::Z: return "Z";
    case Gate::F: return "F";
    case Gate::P: return "P";
    case Gate::CX: return "CX";
    case Gate::SWAP: return "SWAP";
    case Gate::Cliff: return "cliff";
  }
  return "?";
}

std::size_t gate_arity(Gate g) { return (g == Gate::CX || g == Gate::SWAP) ? 2 : 1; }

namespace {

std::string join_regs(const std::vector<std::string>& regs) {
  if (regs.size() == 1) return regs[0];
  std::string s = "(";
  for (std::size_t i = 0; i < regs.size(); ++i) s += (i ? "," : "") + regs[i];
  return s + ")";
}

std::string format_vector(const IntVector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

std::string format_matrix(const IntMatrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + format_vector(m[i]);
  return s + "]";
}

bool all_zero(const IntVector& v) {
  for (auto x : v)
    if (x) return false;
  return true;
}

}  // namespace

std::string format(const Stmt& s) {
  struct V {
    std::string operator()(const Skip&) const { return "skip"; }
    std::string operator()(const Init& x) const { return "init " + x.reg; }
    std::string operator()(const QInit& x) const { return "qinit " + x.reg; }
    std::string operator()(const Disc& x) const { return "disc " + x.reg; }
    std::string operator()(const Meas& x) const { return "meas " + x.reg; }
    std::string operator()(const Affine& a) const {
      std::string s = join_regs(a.outputs) + " = " + format_matrix(a.matrix);
      if (!all_zero(a.offset)) s += "+" + format_vector(a.offset);
      return s + " * " + join_regs(a.inputs);
    }
    std::string operator()(const Clifford& c) const {
      std::string s = join_regs(c.regs) + " *= ";
      if (c.gate == Gate::Cliff) {
        s += "cliff " + format_matrix(c.matrix);
        if (!all_zero(c.offset)) s += "+" + format_vector(c.offset);
      } else {
        s += to_string(c.gate);
      }
      if (c.power != 1) s += "^" + std::to_string(c.power);
      return s;
    }
    std::string operator()(const Ctrl& c) const { return "ctrl[" + c.pauli + "] " + c.control + " " + c.target; }
    std::string operator()(const Mul& m) const { return "mul " + m.out + " " + m.left + " " + m.right; }
  };
  return std::visit(V{}, s.kind);
}

std::string format(const Program& p) {
  std::ostringstream os;
  if (!p.inputs.empty()) {
    os << "input ";
    for (std::size_t i = 0; i < p.inputs.size(); ++i)
      os << (i ? ", " : "") << p.inputs[i].first << ":" << to_string(p.inputs[i].second);
    os << ";\n";
  }
  for (std::size_t i = 0; i < p.body.size(); ++i) os << format(p.body[i]) << (i + 1 < p.body.size() ? ";\n" : "\n");
  return os.str();
}

namespace {

class Parser {
 public:
  Parser(std::string_view src, ParseOptions opt) : src_(src), toks_(tokenize(src)), opt_(opt) {}

  Program program() {
    Program prog;
    prog.nl = opt_.nl;
    if (is_keyword("input")) {
      next();
      if (!at(Tok::Semi)) {
        for (;;) {
          std::string name = ident("register name");
          expect(Tok::Colon);
          const Token& t = peek();
          const std::string ty = ident("type");
          if (ty == "pit") {
            prog.inputs.emplace_back(name, RegType::Pit);
          } else if (ty == "qpit") {
            prog.inputs.emplace_back(name, RegType::Qpit);
          } else {
            fail("unknown type '" + ty + "' (expected pit or qpit)", t);
          }
          if (!at(Tok::Comma)) break;
          next();
        }
      }
      expect(Tok::Semi);
    }
    prog.body.push_back(statement());
    while (at(Tok::Semi)) {
      next();
      if (at(Tok::End)) break;
      prog.body.push_back(statement());
    }
    if (!at(Tok::End)) fail("expected ';' or end of input, found " + describe(peek()), peek());
    return prog;
  }

 private:
  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool at(Tok k) const { return peek().kind == k; }
  bool is_keyword(const char* kw) const { return at(Tok::Ident) && peek().text == kw; }

  [[noreturn]] void fail(const std::string& msg, const Token& t) const { throw SyntaxError(msg, t.line, t.col); }

  static std::string describe(const Token& t) {
    if (t.kind == Tok::Ident || t.kind == Tok::Int) return to_string(t.kind) + " '" + t.text + "'";
    return to_string(t.kind);
  }

  const Token& expect(Tok k) {
    if (!at(k)) fail("expected " + to_string(k) + ", found " + describe(peek()), peek());
    return next();
  }

  std::string ident(const char* what) {
    if (!at(Tok::Ident)) fail(std::string("expected ") + what + ", found " + describe(peek()), peek());
    return next().text;
  }

  std::string reg() {
    const Token& t = peek();
    std::string name = ident("register name");
    static const char* reserved[] = {"input", "skip", "init", "qinit", "disc", "meas", "ctrl", "mul", "cliff"};
    for (auto r : reserved)
      if (name == r) fail("'" + name + "' is a keyword, not a register name", t);
    return name;
  }

  std::int64_t integer() {
    bool neg = false;
    if (at(Tok::Minus)) {
      next();
      neg = true;
    }
    const Token& t = expect(Tok::Int);
    return neg ? -t.value : t.value;
  }

  IntVector vector_literal() {
    IntVector v;
    expect(Tok::LBracket);
    v.push_back(integer());
    while (at(Tok::Comma)) {
      next();
      v.push_back(integer());
    }
    expect(Tok::RBracket);
    return v;
  }

  IntMatrix matrix_literal() {
    const Token& start = expect(Tok::LBracket);
    IntMatrix m;
    m.push_back(vector_literal());
    while (at(Tok::Comma)) {
      next();
      m.push_back(vector_literal());
    }
    expect(Tok::RBracket);
    for (const auto& row : m)
      if (row.size() != m[0].size()) fail("matrix rows have different lengths", start);
    return m;
  }

  std::vector<std::string> targets() {
    std::vector<std::string> regs;
    if (at(Tok::LParen)) {
      next();
      regs.push_back(reg());
      while (at(Tok::Comma)) {
        next();
        regs.push_back(reg());
      }
      expect(Tok::RParen);
    } else {
      regs.push_back(reg());
    }
    return regs;
  }

  Stmt statement() {
    const Token& first = peek();
    Pos pos{first.line, first.col};
    if (is_keyword("skip")) {
      next();
      return {Skip{}, pos};
    }
    if (is_keyword("init")) {
      next();
      return {Init{reg()}, pos};
    }
    if (is_keyword("qinit")) {
      next();
      return {QInit{reg()}, pos};
    }
    if (is_keyword("disc")) {
      next();
      return {Disc{reg()}, pos};
    }
    if (is_keyword("meas")) {
      next();
      return {Meas{reg()}, pos};
    }
    if (is_keyword("ctrl")) {
      next();
      const Token& open = expect(Tok::LBracket);
      while (!at(Tok::RBracket)) {
        if (at(Tok::End) || at(Tok::Semi)) fail("unterminated Pauli in ctrl[...]", open);
        next();
      }
      const Token& close = next();
      std::string pauli(src_.substr(open.end, close.begin - open.end));
      const auto b = pauli.find_first_not_of(" \t\r\n");
      const auto e = pauli.find_last_not_of(" \t\r\n");
      if (b == std::string::npos) fail("empty Pauli in ctrl[...]", open);
      pauli = pauli.substr(b, e - b + 1);
      std::string c = reg();
      std::string t = reg();
      return {Ctrl{pauli, c, t}, pos};
    }
    if (is_keyword("mul")) {
      if (!opt_.nl) fail("'mul' is a nonlinear (NLSPL) statement; enable NLSPL mode", first);
      next();
      std::string z = reg();
      std::string x = reg();
      std::string y = reg();
      return {Mul{z, x, y}, pos};
    }
    if (!at(Tok::Ident) && !at(Tok::LParen)) fail("expected a statement, found " + describe(peek()), peek());
    auto lhs = targets();
    if (at(Tok::StarAssign)) {
      next();
      Clifford c;
      c.regs = std::move(lhs);
      const Token& g = peek();
      const std::string name = ident("gate name");
      if (name == "cliff") {
        c.gate = Gate::Cliff;
        c.matrix = matrix_literal();
        if (at(Tok::Plus)) {
          next();
          c.offset = vector_literal();
        } else {
          c.offset.assign(c.matrix.size(), 0);
        }
      } else if (name == "X") {
        c.gate = Gate::X;
      } else if (name == "Z") {
        c.gate = Gate::Z;
      } else if (name == "F") {
        c.gate = Gate::F;
      } else if (name == "P") {
        c.gate = Gate::P;
      } else if (name == "CX") {
        c.gate = Gate::CX;
      } else if (name == "SWAP") {
        c.gate = Gate::SWAP;
      } else {
        fail("unknown Clifford gate '" + name + "' (expected X, Z, F, P, CX, SWAP or cliff)", g);
      }
      if (at(Tok::Caret)) {
        next();
        c.power = integer();
      }
      return {std::move(c), pos};
    }
    if (at(Tok::Assign)) {
      next();
      Affine a;
      a.outputs = std::move(lhs);
      a.matrix = matrix_literal();
      if (at(Tok::Plus)) {
        next();
        a.offset = vector_literal();
      } else {
        a.offset.assign(a.matrix.size(), 0);
      }
      expect(Tok::Star);
      a.inputs = targets();
      return {std::move(a), pos};
    }
    fail("expected '*=' or '=' after register list, found " + describe(peek()), peek());
  }

  std::string_view src_;
  std::vector<Token> toks_;
  ParseOptions opt_;
  std::size_t pos_ = 0;
};

}  // namespace

Program parse(std::string_view source, ParseOptions options) { return Parser(source, options).program(); }

}  // namespace stabrel::spl
