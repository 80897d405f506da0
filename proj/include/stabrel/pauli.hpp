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
#include <string>
#include <string_view>
#include <vector>

#include "stabrel/affrel.hpp"
#include "stabrel/fieldlin.hpp"
#include "stabrel/symp.hpp"

namespace stabrel {

/// The Pauli operator xi^(a + z.x/2) X^x Z^z on n qupits, stored as (a, x, z).
struct PauliLabel {
  Prime p;
  Residue phase;
  FVector x;
  FVector z;

  static PauliLabel identity(Prime p, std::size_t n);
  /// Label from an interleaved vector [x_0, z_0, ...].
  static PauliLabel from_vector(Prime p, Residue phase, std::span<const Residue> v);

  std::size_t qupits() const { return x.size(); }
  /// Interleaved [x_0, z_0, x_1, z_1, ...].
  FVector vector() const;
  bool is_identity_up_to_phase() const { return is_zero(x) && is_zero(z); }
  std::size_t weight() const;

  friend bool operator==(const PauliLabel&, const PauliLabel&) = default;
};

PauliLabel multiply(const PauliLabel& g, const PauliLabel& h);
PauliLabel inverse(const PauliLabel& g);
PauliLabel power(const PauliLabel& g, std::int64_t e);
bool commutes(const PauliLabel& g, const PauliLabel& h);
/// omega_n on the symplectic parts.
Residue symplectic_product(const PauliLabel& g, const PauliLabel& h);

/// Commuting generators, none of which is a phase times the identity.
class StabGroup {
 public:
  StabGroup(Prime p, std::size_t n, std::vector<PauliLabel> generators);

  const Prime& prime() const { return p_; }
  std::size_t qupits() const { return n_; }
  const std::vector<PauliLabel>& generators() const { return gens_; }

 private:
  Prime p_;
  std::size_t n_;
  std::vector<PauliLabel> gens_;
};

/// The subspace C = L + a with L^omega spanned by the generators and omega(b_i, a) = a_i.
/// Contradictory phases give the empty subspace.
AffineSubspace group_to_subspace(const StabGroup& g);
/// Generators: RREF basis b_i of L^omega with phases omega(b_i, a).
StabGroup subspace_to_group(const AffineSubspace& c);

/// Grammar: whitespace-separated tokens "w^a", "X<i>^e", "Z<i>^e", "I"; the index may be
/// dropped when n = 1 and "^1" may be dropped everywhere.
PauliLabel parse_pauli(std::string_view text, Prime p, std::size_t n);
std::string print_pauli(const PauliLabel& g);

}  // namespace stabrel
