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
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "stabrel/fieldlin.hpp"

namespace stabrel {

/// An affine subspace offset + span(basis) of F_p^d, or the empty set.
///
/// Values are always canonical: the basis is in RREF without zero rows and the
/// offset vanishes on every pivot column. Structural equality is therefore
/// subspace equality, and the JSON form is byte-identical for equal subspaces.
class AffineSubspace {
 public:
  static AffineSubspace empty_set(Prime p, std::size_t ambient_dim);
  static AffineSubspace point(Prime p, FVector v);
  static AffineSubspace full(Prime p, std::size_t ambient_dim);
  static AffineSubspace linear_span(const FMatrix& generators);
  /// offset + rowspace(generators); generators may be dependent or contain zero rows.
  static AffineSubspace canonicalize(const FMatrix& generators, std::span<const Residue> offset);

  const Prime& prime() const { return p_; }
  std::size_t ambient_dim() const { return dim_; }
  bool is_empty() const { return empty_; }
  /// Dimension of the linear component; 0 for the empty set as well (check is_empty()).
  std::size_t dimension() const { return basis_.rows(); }
  const FMatrix& basis() const { return basis_; }
  const FVector& offset() const { return offset_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(std::span<const Residue> v) const;
  /// True when v lies in the linear component.
  bool linear_contains(std::span<const Residue> v) const;
  /// Linear component (offset dropped). The empty set maps to itself.
  AffineSubspace linear_part() const;
  bool is_linear() const { return !empty_ && is_zero(offset_); }

  friend bool operator==(const AffineSubspace&, const AffineSubspace&) = default;

 private:
  AffineSubspace(Prime p, std::size_t dim, bool empty, FMatrix basis, FVector offset, std::vector<std::size_t> pivots)
      : p_(p), dim_(dim), empty_(empty), basis_(std::move(basis)), offset_(std::move(offset)), pivots_(std::move(pivots)) {}

  Prime p_;
  std::size_t dim_;
  bool empty_;
  FMatrix basis_;
  FVector offset_;
  std::vector<std::size_t> pivots_;
};

/// {(a,c) : exists b, (a,b) in r and (b,c) in s}; r lives on A (+) B and s on B (+) C.
AffineSubspace compose(const AffineSubspace& r, const AffineSubspace& s, std::size_t dim_a);

/// Composition through a subset of coordinates.
///
/// r lives on D (+) B with |D| = prefix. `window` lists coordinates of B (relative to
/// the start of B) that feed s; s lives on F_p^{|window|} (+) C. The result lives on
/// D (+) (B minus window, original order) (+) C. Equivalent to composing r with
/// s (+) id on the untouched coordinates, without materializing the identity.
AffineSubspace compose_window(const AffineSubspace& r, std::size_t prefix, std::span<const std::size_t> window,
                              const AffineSubspace& s);

AffineSubspace converse(const AffineSubspace& r, std::size_t dim_a);
AffineSubspace direct_sum(const AffineSubspace& r, const AffineSubspace& s);
AffineSubspace intersect(const AffineSubspace& r, const AffineSubspace& s);
/// Image under the coordinate projection onto `coords` (in the given order).
AffineSubspace project(const AffineSubspace& r, std::span<const std::size_t> coords);
/// Contiguous window [first, first+count).
AffineSubspace project(const AffineSubspace& r, std::size_t first, std::size_t count);
/// New coordinate i is old coordinate perm[i]; perm must be a permutation.
AffineSubspace permute(const AffineSubspace& r, std::span<const std::size_t> perm);
bool contains_point(const AffineSubspace& r, std::span<const Residue> v);
/// r is a subset of s.
bool includes(const AffineSubspace& r, const AffineSubspace& s);
/// Projection onto the first dim_a coordinates is all of F_p^{dim_a}.
bool is_total(const AffineSubspace& r, std::size_t dim_a);

/// Number of points as p^dimension, or 0 for the empty set; saturates at `limit`+1.
std::size_t point_count(const AffineSubspace& r, std::size_t limit);
/// Visits every point; the callback returns false to stop early.
void for_each_point(const AffineSubspace& r, const std::function<bool(std::span<const Residue>)>& visit);

/// Decides s subset of (union of parts) exactly. Enumerates s modulo the linear
/// directions shared by every piece s ∩ part; throws ResourceError when that
/// quotient exceeds `point_cap` points.
bool covered_by_union(const AffineSubspace& s, std::span<const AffineSubspace> parts, std::size_t point_cap);

nlohmann::ordered_json to_json(const AffineSubspace& s);
AffineSubspace subspace_from_json(const nlohmann::json& j);
std::string to_string(const AffineSubspace& s);

}  // namespace stabrel
