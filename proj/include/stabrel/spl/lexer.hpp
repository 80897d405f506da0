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

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace stabrel::spl {

enum class Tok {
  Ident,
  Int,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Comma,
  Semi,
  Colon,
  Assign,    // =
  StarAssign,  // *=
  Star,
  Plus,
  Minus,
  Caret,
  End,
};

std::string to_string(Tok t);

struct Token {
  Tok kind;
  std::string text;
  std::int64_t value = 0;
  std::size_t line = 1;
  std::size_t col = 1;
  /// Byte offsets of the token in the source.
  std::size_t begin = 0;
  std::size_t end = 0;
};

/// Splits SPL source into tokens; '%' and '#' start comments running to end of line.
std::vector<Token> tokenize(std::string_view source);

}  // namespace stabrel::spl
