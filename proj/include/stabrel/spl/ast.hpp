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
#include <utility>
#include <variant>
#include <vector>

namespace stabrel::spl {

enum class RegType { Pit, Qpit };

std::string to_string(RegType t);

struct Pos {
  std::size_t line = 0;
  std::size_t col = 0;
};

using IntMatrix = std::vector<std::vector<std::int64_t>>;
using IntVector = std::vector<std::int64_t>;

struct Skip {};
struct Init {
  std::string reg;
};
struct QInit {
  std::string reg;
};
struct Disc {
  std::string reg;
};
struct Meas {
  std::string reg;
};
/// outputs = matrix * inputs + offset; the inputs stay live.
struct Affine {
  std::vector<std::string> outputs;
  std::vector<std::string> inputs;
  IntMatrix matrix;
  IntVector offset;
};

enum class Gate { X, Z, F, P, CX, SWAP, Cliff };

std::string to_string(Gate g);
/// Number of registers the gate acts on (Cliff: taken from its matrix).
std::size_t gate_arity(Gate g);

struct Clifford {
  std::vector<std::string> regs;
  Gate gate = Gate::X;
  std::int64_t power = 1;
  /// Only for Gate::Cliff: a 2k x 2k symplectic matrix and a translation.
  IntMatrix matrix;
  IntVector offset;
};
/// Applies pauli^c to target, c the value of the control pit.
struct Ctrl {
  std::string pauli;
  std::string control;
  std::string target;
};
/// out = left * right (nonlinear extension only).
struct Mul {
  std::string out;
  std::string left;
  std::string right;
};

using StmtKind = std::variant<Skip, Init, QInit, Disc, Meas, Affine, Clifford, Ctrl, Mul>;

struct Stmt {
  StmtKind kind;
  Pos pos;
};

struct Program {
  std::vector<std::pair<std::string, RegType>> inputs;
  std::vector<Stmt> body;
  bool nl = false;
};

/// Source text that parses back to the same program.
std::string format(const Stmt& s);
std::string format(const Program& p);

}  // namespace stabrel::spl
