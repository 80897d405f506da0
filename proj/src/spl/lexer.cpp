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

#include "stabrel/spl/lexer.hpp"

#include <cctype>
#include <limits>

#include "stabrel/error.hpp"

namespace stabrel::spl {

std::string to_string(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Int: return "integer";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::Comma: return "','";
    case Tok::Semi: return "';'";
    case Tok::Colon: return "':'";
    case Tok::Assign: return "'='";
    case Tok::StarAssign: return "'*='";
    case Tok::Star: return "'*'";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Caret: return "'^'";
    case Tok::End: return "end of input";
  }
  return "?";
}

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0, line = 1, col = 1;
  auto advance = [&]() {
    if (src[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++i;
  };
  auto is_ident_start = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
  auto is_ident = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; };

  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance();
      continue;
    }
    if (c == '%' || c == '#') {
      while (i < src.size() && src[i] != '\n') advance();
      continue;
    }
    Token t{Tok::End, {}, 0, line, col, i, i};
    if (is_ident_start(c)) {
      while (i < src.size() && is_ident(src[i])) advance();
      t.kind = Tok::Ident;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::int64_t v = 0;
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
        if (v > (std::numeric_limits<std::int64_t>::max() - 9) / 10)
          throw SyntaxError("integer literal too large", t.line, t.col);
        v = v * 10 + (src[i] - '0');
        advance();
      }
      if (i < src.size() && is_ident_start(src[i]))
        throw SyntaxError("malformed number", t.line, t.col);
      t.kind = Tok::Int;
      t.value = v;
    } else {
      switch (c) {
        case '(': t.kind = Tok::LParen; break;
        case ')': t.kind = Tok::RParen; break;
        case '[': t.kind = Tok::LBracket; break;
        case ']': t.kind = Tok::RBracket; break;
        case ',': t.kind = Tok::Comma; break;
        case ';': t.kind = Tok::Semi; break;
        case ':': t.kind = Tok::Colon; break;
        case '=': t.kind = Tok::Assign; break;
        case '+': t.kind = Tok::Plus; break;
        case '-': t.kind = Tok::Minus; break;
        case '^': t.kind = Tok::Caret; break;
        case '*':
          if (i + 1 < src.size() && src[i + 1] == '=') {
            t.kind = Tok::StarAssign;
            advance();
          } else {
            t.kind = Tok::Star;
          }
          break;
        default:
          throw SyntaxError(std::string("unexpected character '") + c + "'", line, col);
      }
      advance();
    }
    t.end = i;
    t.text = std::string(src.substr(t.begin, t.end - t.begin));
    out.push_back(std::move(t));
  }
  out.push_back(Token{Tok::End, {}, 0, line, col, i, i});
  return out;
}

}  // namespace stabrel::spl
