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
#include <vector>

#include "stabrel/affrel.hpp"
#include "stabrel/fieldlin.hpp"

namespace stabrel {

/// F_p^{2n} with interleaved coordinates [x_0, z_0, x_1, z_1, ...] and the form
/// sum_i sign_i (x_i z'_i - z_i x'_i). Domain wires of a morphism carry sign -1.
class SympSpace {
 public:
  /// n wires, all with sign +1.
  SympSpace(Prime p, std::size_t n);
  SympSpace(Prime p, std::vector<int> signs);

  const Prime& prime() const { return p_; }
  std::size_t wires() const { return signs_.size(); }
  std::size_t dim() const { return 2 * signs_.size(); }
  int sign(std::size_t wire) const { return signs_[wire]; }
  const std::vector<int>& signs() const { return signs_; }

  Residue omega(std::span<const Residue> u, std::span<const Residue> v) const;
  /// Gram matrix of the form.
  FMatrix gram() const;
  /// Row r(u) with r(u) . v = omega(u, v).
  FVector pairing_row(std::span<const Residue> u) const;

 private:
  Prime p_;
  std::vector<int> signs_;
};

enum class IsotropyClass { Isotropic, Coisotropic, Lagrangian, None };

std::string to_string(IsotropyClass c);

/// Symplectic complement of the linear component of s. Throws DomainError when s is empty.
AffineSubspace complement(const AffineSubspace& s, const SympSpace& sp);
/// Classification of the linear component; the empty set counts as Lagrangian.
IsotropyClass classify(const AffineSubspace& s, const SympSpace& sp);
inline bool is_coisotropic(IsotropyClass c) { return c == IsotropyClass::Coisotropic || c == IsotropyClass::Lagrangian; }
inline bool is_isotropic(IsotropyClass c) { return c == IsotropyClass::Isotropic || c == IsotropyClass::Lagrangian; }

/// Symplectic Gram-Schmidt. Returns M (2n x 2n, columns are basis vectors) with
/// M^T Omega M = Omega; columns 2i for i < k span the row space of `isotropic`
/// (k = its rank). Partners are found by sweeping standard basis vectors in order.
FMatrix extend_symplectic_basis(const FMatrix& isotropic, const SympSpace& sp);

struct Dilation {
  /// Relation from F_p^{2(n-k)} (domain first) to F_p^{2n}.
  AffineSubspace relation;
  std::size_t dom_wires;
  std::size_t cod_wires;
  /// The symplectic basis used for the construction.
  FMatrix basis;
};

/// Lagrangian isometry E : sp(n-k) -> sp(n) with image s, for s coisotropic in sp(n).
Dilation dilate(const AffineSubspace& s, const SympSpace& sp);

/// Image of a relation on A (+) B: its projection onto the B coordinates.
AffineSubspace image(const AffineSubspace& r, std::size_t dim_a);

}  // namespace stabrel
