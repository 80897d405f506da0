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

#include <string_view>

#include "stabrel/spl/ast.hpp"

namespace stabrel::spl {

struct ParseOptions {
  /// Accept the nonlinear `mul` statement.
  bool nl = false;
};

/// Parses an optional `input x:qpit, c:pit;` header followed by ';'-separated
/// statements. Throws SyntaxError with line and column.
Program parse(std::string_view source, ParseOptions options = {});

}  // namespace stabrel::spl
