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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stabrel/fieldlin.hpp"
#include "stabrel/pauli.hpp"
#include "stabrel/spl/ast.hpp"

namespace stabrel::spl {

/// Registers in binding order, each with one type.
class TypedEnv {
 public:
  TypedEnv() = default;
  explicit TypedEnv(std::vector<std::pair<std::string, RegType>> entries);

  std::optional<RegType> find(const std::string& name) const;
  bool contains(const std::string& name) const { return find(name).has_value(); }
  void bind(const std::string& name, RegType t);
  void erase(const std::string& name);
  void retype(const std::string& name, RegType t);

  const std::vector<std::pair<std::string, RegType>>& entries() const { return entries_; }
  /// Entries ordered by register name.
  std::vector<std::pair<std::string, RegType>> sorted() const;
  std::size_t size() const { return entries_.size(); }

  friend bool operator==(const TypedEnv&, const TypedEnv&) = default;

 private:
  std::vector<std::pair<std::string, RegType>> entries_;
};

/// Same registers with the same types, order ignored.
bool same_bindings(const TypedEnv& a, const TypedEnv& b);
std::string to_string(const TypedEnv& env);

struct Judgment {
  Prime p;
  Program program;
  TypedEnv input;
  TypedEnv output;
  /// Environment after each statement.
  std::vector<TypedEnv> trace;
};

/// Threads the formation rules through the program, starting from its header.
/// Throws TypeError naming the rule that failed.
Judgment typecheck(const Program& program, Prime p);
Judgment typecheck(const Program& program, const TypedEnv& gamma, Prime p);

/// v |-> s v + t on interleaved [x; z] coordinates of the gate's registers.
struct AffineSymplectic {
  FMatrix s;
  FVector t;
};

AffineSymplectic gate_action(Gate g, Prime p);
/// Gate action raised to the statement's power. A `cliff` literal must be symplectic.
AffineSymplectic clifford_action(const Clifford& c, Prime p);
/// The single-qupit Pauli of a ctrl statement.
PauliLabel ctrl_pauli(const Ctrl& c, Prime p);

}  // namespace stabrel::spl
