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
#include <vector>

#include "json.hpp"
#include "stabrel/affrel.hpp"
#include "stabrel/symp.hpp"

namespace stabrel {

/// Q: a qupit (two coordinates [x; z]); QDual: a qupit carrying the negated form
/// (the dual object used by cups and caps); C: a pit (one coordinate).
enum class Sort { Q, QDual, C };

std::string to_string(Sort s);
Sort sort_from_string(const std::string& s);

class ObjectSignature {
 public:
  ObjectSignature(Prime p, std::vector<Sort> wires = {});
  static ObjectSignature quantum(Prime p, std::size_t n);
  static ObjectSignature classical(Prime p, std::size_t n);

  const Prime& prime() const { return p_; }
  const std::vector<Sort>& wires() const { return wires_; }
  std::size_t size() const { return wires_.size(); }
  /// Total number of coordinates.
  std::size_t dim() const;
  /// First coordinate of wire i.
  std::size_t offset(std::size_t i) const;
  static std::size_t width(Sort s) { return s == Sort::C ? 1 : 2; }
  bool quantum_only() const;

  ObjectSignature dual() const;
  ObjectSignature concat(const ObjectSignature& other) const;

  friend bool operator==(const ObjectSignature&, const ObjectSignature&) = default;

 private:
  Prime p_;
  std::vector<Sort> wires_;
};

std::string to_string(const ObjectSignature& s);

/// A relation dom -> cod: a union of affine subspaces of F_p^{dim dom + dim cod}
/// with all domain coordinates first. A single body is the affine fragment.
///
/// Bodies are kept canonical: no empty components (unless the relation is empty),
/// no component contained in another, sorted by serialized form.
class ArqMorphism {
 public:
  ArqMorphism(ObjectSignature dom, ObjectSignature cod, std::vector<AffineSubspace> bodies);
  ArqMorphism(ObjectSignature dom, ObjectSignature cod, AffineSubspace body);

  const ObjectSignature& dom() const { return dom_; }
  const ObjectSignature& cod() const { return cod_; }
  const std::vector<AffineSubspace>& bodies() const { return bodies_; }
  const AffineSubspace& body() const;
  bool is_affine() const { return bodies_.size() == 1; }
  bool quantum_only() const { return dom_.quantum_only() && cod_.quantum_only(); }
  bool is_empty() const { return bodies_.size() == 1 && bodies_[0].is_empty(); }
  const Prime& prime() const { return dom_.prime(); }

  friend bool operator==(const ArqMorphism&, const ArqMorphism&) = default;

 private:
  ObjectSignature dom_;
  ObjectSignature cod_;
  std::vector<AffineSubspace> bodies_;
};

/// Drops empty and subsumed components and sorts the rest by serialized form.
/// An empty list (or only empty components) becomes the single empty subspace.
std::vector<AffineSubspace> normalize_union(std::vector<AffineSubspace> bodies, const Prime& p, std::size_t dim);

/// The form -omega_dom (+) omega_cod on a quantum-only morphism's ambient space.
SympSpace morphism_form(const ObjectSignature& dom, const ObjectSignature& cod);
/// Throws DomainError if f is an affine quantum-only morphism that is not coisotropic.
void validate_coisotropic(const ArqMorphism& f);
bool is_lagrangian(const ArqMorphism& f);

ArqMorphism identity(const ObjectSignature& sig);
/// f then g; requires cod(f) = dom(g).
ArqMorphism compose(const ArqMorphism& f, const ArqMorphism& g);
ArqMorphism tensor(const ArqMorphism& f, const ArqMorphism& g);
ArqMorphism dagger(const ArqMorphism& f);
ArqMorphism swap(const ObjectSignature& a, const ObjectSignature& b);
/// I -> dual(a) (x) a.
ArqMorphism cup(const ObjectSignature& a);
/// a (x) dual(a) -> I.
ArqMorphism cap(const ObjectSignature& a);
/// The total state I -> a.
ArqMorphism im(const ObjectSignature& a);
/// Z measurement Q -> C: {([x; z], x)}.
ArqMorphism mu_z(Prime p);
/// Z preparation C -> Q: {(x, [x; z])}.
ArqMorphism mu_z_dag(Prime p);
/// Z decoherence Q -> Q: {([x; z], [x; z'])}.
ArqMorphism decoherence(Prime p);
/// {((a, b), a b)} : C (x) C -> C as p affine lines.
ArqMorphism mul_relation(Prime p);

/// Union of a relation's components.
ArqMorphism join(const ArqMorphism& f, const ArqMorphism& g);

/// Coverage decisions enumerate at most this many points; beyond it ResourceError.
inline constexpr std::size_t kDefaultPointCap = std::size_t{1} << 22;

bool is_total(const ArqMorphism& f, std::size_t point_cap = kDefaultPointCap);
/// Semantic equality: structural for single bodies, mutual coverage for unions.
bool equal(const ArqMorphism& f, const ArqMorphism& g, std::size_t point_cap = kDefaultPointCap);

nlohmann::ordered_json to_json(const ArqMorphism& f);
ArqMorphism morphism_from_json(const nlohmann::json& j);

}  // namespace stabrel
