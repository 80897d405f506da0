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
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "stabrel/arq.hpp"
#include "stabrel/oracle/kernels.hpp"
#include "stabrel/pauli.hpp"
#include "stabrel/spl/typecheck.hpp"

namespace stabrel::oracle {

struct OracleOptions {
  /// Largest matrix dimension the oracle will materialize (density matrices
  /// include the reference copy of the inputs).
  std::size_t dim_cap = 729;
};

/// xi^k for k in [0, p), xi = exp(2 pi i / p).
std::vector<Complex> roots_of_unity(const Prime& p);

CMatrix pauli_matrix(const PauliLabel& g, OracleOptions options = {});
/// (1/|G|) sum of the group elements; zero when the phases are contradictory.
CMatrix projector(const StabGroup& g, OracleOptions options = {});

/// Unitary of a Clifford statement (gate, power, registers in statement order).
CMatrix clifford_unitary(const spl::Clifford& c, const Prime& p);
/// sum_u |u><u| (x) P^u on (control, target).
CMatrix ctrl_unitary(const PauliLabel& pauli);

struct ChannelWire {
  std::string name;
  Sort sort;

  friend bool operator==(const ChannelWire&, const ChannelWire&) = default;
};

/// Choi matrix J = sum_ij Phi(|i><j|) (x) |i><j|, output factor first. Output wires
/// are sorted by name; input wires follow the input environment.
struct DenseChannel {
  Prime p;
  std::vector<ChannelWire> inputs;
  std::vector<ChannelWire> outputs;
  CMatrix choi;

  std::size_t in_dim() const;
  std::size_t out_dim() const;
};

DenseChannel run(const spl::Judgment& j, OracleOptions options = {});
DenseChannel atomic_channel(const spl::Stmt& s, const spl::TypedEnv& gamma, const Prime& p, OracleOptions options = {});

/// Channel whose relation is m: classical wires are replaced by decohered qupits,
/// the name of the resulting coisotropic relation gives a stabiliser projector, and
/// the projector is rescaled to be trace preserving. m must be affine and total.
DenseChannel relation_to_channel(const ArqMorphism& m, OracleOptions options = {});

/// Same wire sorts and max-norm Choi distance at most tol.
bool channels_equal(const DenseChannel& a, const DenseChannel& b, double tol = 1e-9);
/// Max-norm distance between Choi matrices; throws ShapeError on signature mismatch.
double choi_distance(const DenseChannel& a, const DenseChannel& b);
/// Positive semidefinite Choi matrix whose output partial trace is the identity.
bool is_cptp(const DenseChannel& c, double tol = 1e-9);
/// Equal Choi ranges: the channels have the same possible outcomes on every input.
bool same_support(const DenseChannel& a, const DenseChannel& b, double tol = 1e-9);

nlohmann::ordered_json to_json(const DenseChannel& c);

}  // namespace stabrel::oracle
