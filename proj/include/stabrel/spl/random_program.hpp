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
#include <random>

#include "stabrel/fieldlin.hpp"
#include "stabrel/spl/ast.hpp"

namespace stabrel::spl {

/// Shape of randomly generated well-typed programs.
struct RandomProgramOptions {
  std::size_t input_qupits = 1;
  std::size_t input_pits = 0;
  /// Upper bounds on simultaneously live registers of each type.
  std::size_t max_qupits = 3;
  std::size_t max_pits = 2;
  /// Bound on all live registers together; 0 means max_qupits + max_pits.
  std::size_t max_live = 0;
  std::size_t statements = 8;
  /// Allow init, affine, ctrl, disc (pit-level statements).
  bool classical = true;
  bool measurements = true;
  /// Allow single-qupit cliff literals.
  bool literals = true;
  /// Emit mul statements (nonlinear extension).
  bool nl = false;
};

using Rng = std::mt19937_64;

/// A well-typed program with exactly `statements` statements.
Program random_program(Rng& rng, const RandomProgramOptions& options, Prime p);

/// Rewrites that preserve the denotation and the output environment: gate powers
/// shifted by the gate's order, inserted U^k; U^-k pairs and skips, swapped
/// independent neighbours, and a measured-and-discarded scratch qupit.
/// `max_live` bounds the live registers of the result (0: no bound).
Program equivalent_variant(Rng& rng, const Program& prog, Prime p, std::size_t max_live = 0);

/// One type-preserving local change (gate power, Pauli, affine coefficient, gate
/// swapped for another of the same arity). The result may or may not be equivalent.
Program mutate(Rng& rng, const Program& prog, Prime p);

/// Multiplicative order of a generator gate (Cliff literals: 0, unknown).
std::int64_t gate_order(Gate g, Prime p);

}  // namespace stabrel::spl
