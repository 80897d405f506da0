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

// Relation -> channel: the stabiliser projector of a relation's name, rescaled.
#include "stabrel/error.hpp"
#include "stabrel/oracle/channel.hpp"

namespace stabrel::oracle {

namespace {

// Q on every wire, with mu_z (or mu_z_dag) standing in for each pit.
ArqMorphism classical_bridge(const ObjectSignature& sig, bool into) {
  const Prime& p = sig.prime();
  ArqMorphism acc = identity(ObjectSignature(p));
  for (auto s : sig.wires()) {
    if (s == Sort::QDual) throw DomainError("relation_to_channel: dual wires have no channel reading");
    const ArqMorphism piece =
        s == Sort::Q ? identity(ObjectSignature::quantum(p, 1)) : (into ? mu_z(p) : mu_z_dag(p));
    acc = tensor(acc, piece);
  }
  return acc;
}

std::vector<ChannelWire> anonymous_wires(const ObjectSignature& sig) {
  std::vector<ChannelWire> w;
  for (std::size_t i = 0; i < sig.size(); ++i) w.push_back({"w" + std::to_string(i), sig.wires()[i]});
  return w;
}

}  // namespace

DenseChannel relation_to_channel(const ArqMorphism& m, OracleOptions options) {
  if (!m.is_affine()) throw DomainError("relation_to_channel: only affine relations have a stabiliser channel");
  if (m.is_empty() || !is_total(m)) throw DomainError("relation_to_channel: relation is not total");
  const Prime& p = m.prime();
  const ArqMorphism q = compose(compose(classical_bridge(m.dom(), true), m), classical_bridge(m.cod(), false));
  const std::size_t nd = q.dom().size();
  const std::size_t dd = q.dom().dim(), dc = q.cod().dim();

  // Name on (cod, dom) with the domain's z coordinates negated.
  std::vector<std::size_t> perm;
  for (std::size_t i = 0; i < dc; ++i) perm.push_back(dd + i);
  for (std::size_t i = 0; i < dd; ++i) perm.push_back(i);
  const AffineSubspace moved = permute(q.body(), perm);
  FMatrix gens = moved.basis();
  FVector off = moved.offset();
  for (std::size_t w = 0; w < nd; ++w) {
    const std::size_t zc = dc + 2 * w + 1;
    for (std::size_t r = 0; r < gens.rows(); ++r) gens(r, zc) = p.neg(gens(r, zc));
    off[zc] = p.neg(off[zc]);
  }
  const AffineSubspace name = AffineSubspace::canonicalize(gens, off);

  DenseChannel c{p, anonymous_wires(m.dom()), anonymous_wires(m.cod()), projector(subspace_to_group(name), options)};
  const double tr = c.choi.trace().real();
  if (tr < 1e-9) throw DomainError("relation_to_channel: zero projector");
  std::size_t d_in = 1;
  for (std::size_t i = 0; i < nd; ++i) d_in *= p.value();
  c.choi *= static_cast<double>(d_in) / tr;
  return c;
}

}  // namespace stabrel::oracle
