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

#include <string>

#include "stabrel/arq.hpp"
#include "stabrel/spl/typecheck.hpp"

namespace stabrel::spl {

struct DenoteOptions {
  std::size_t point_cap = kDefaultPointCap;
};

/// Relation of a typed program. Domain wires follow the input environment's order;
/// codomain wires are sorted by register name. Affine statements keep their inputs.
ArqMorphism denote(const Judgment& j, DenoteOptions options = {});

/// Relation of one statement as a morphism over its own registers: consumed
/// registers (in statement order) to produced registers (in statement order).
struct LocalRelation {
  std::vector<std::string> consumed;
  std::vector<std::pair<std::string, RegType>> produced;
  ArqMorphism relation;
};
LocalRelation local_relation(const Stmt& s, const TypedEnv& before, Prime p);

enum class Verdict { Equivalent, Inequivalent, InterfaceMismatch };

std::string to_string(Verdict v);

struct EquivOptions {
  /// Match wires by position (inputs in header order, outputs sorted by name)
  /// instead of by register name.
  bool positional = false;
  std::size_t point_cap = kDefaultPointCap;
};

struct EquivResult {
  Verdict verdict;
  std::string detail;
  /// Set when either program uses the nonlinear extension, where agreement with
  /// observational equivalence is conjectural.
  bool conjectural = false;
};

EquivResult equivalent(const Judgment& a, const Judgment& b, EquivOptions options = {});

}  // namespace stabrel::spl
