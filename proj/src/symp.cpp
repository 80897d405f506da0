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

#include "stabrel/symp.hpp"

#include "stabrel/error.hpp"

namespace stabrel {

SympSpace::SympSpace(Prime p, std::size_t n) : p_(p), signs_(n, 1) {}

SympSpace::SympSpace(Prime p, std::vector<int> signs) : p_(p), signs_(std::move(signs)) {
  for (int s : signs_)
    if (s != 1 && s != -1) throw ShapeError("SympSpace: wire signs must be +1 or -1");
}

Residue SympSpace::omega(std::span<const Residue> u, std::span<const Residue> v) const {
  if (u.size() != dim() || v.size() != dim()) throw ShapeError("omega: vector length differs from 2n");
  const std::uint64_t pv = p_.value();
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < signs_.size(); ++i) {
    const std::uint64_t xz = static_cast<std::uint64_t>(u[2 * i]) * v[2 * i + 1] % pv;
    const std::uint64_t zx = static_cast<std::uint64_t>(u[2 * i + 1]) * v[2 * i] % pv;
    const std::uint64_t term = (xz + pv - zx) % pv;
    acc += signs_[i] > 0 ? term : (pv - term) % pv;
  }
  return static_cast<Residue>(acc % pv);
}

FMatrix SympSpace::gram() const {
  FMatrix g(p_, dim(), dim());
  for (std::size_t i = 0; i < signs_.size(); ++i) {
    const Residue one = signs_[i] > 0 ? 1 : p_.value() - 1;
    g(2 * i, 2 * i + 1) = one;
    g(2 * i + 1, 2 * i) = p_.neg(one);
  }
  return g;
}

FVector SympSpace::pairing_row(std::span<const Residue> u) const {
  if (u.size() != dim()) throw ShapeError("pairing_row: vector length differs from 2n");
  FVector r(dim());
  for (std::size_t i = 0; i < signs_.size(); ++i) {
    Residue a = p_.neg(u[2 * i + 1]);
    Residue b = u[2 * i] % p_.value();
    if (signs_[i] < 0) {
      a = p_.neg(a);
      b = p_.neg(b);
    }
    r[2 * i] = a;
    r[2 * i + 1] = b;
  }
  return r;
}

std::string to_string(IsotropyClass c) {
  switch (c) {
    case IsotropyClass::Isotropic: return "isotropic";
    case IsotropyClass::Coisotropic: return "coisotropic";
    case IsotropyClass::Lagrangian: return "Lagrangian";
    case IsotropyClass::None: return "none";
  }
  return "none";
}

namespace {

void require_ambient(const AffineSubspace& s, const SympSpace& sp, const char* where) {
  require_same_modulus(s.prime(), sp.prime(), where);
  if (s.ambient_dim() != sp.dim()) {
    throw ShapeError(std::string(where) + ": subspace lives in dimension " + std::to_string(s.ambient_dim()) +
                     ", symplectic space has dimension " + std::to_string(sp.dim()));
  }
}

}  // namespace

AffineSubspace complement(const AffineSubspace& s, const SympSpace& sp) {
  require_ambient(s, sp, "complement");
  if (s.is_empty()) throw DomainError("complement: the empty subspace has no symplectic complement");
  FMatrix rows(sp.prime(), 0, sp.dim());
  for (std::size_t i = 0; i < s.dimension(); ++i) rows.append_row(sp.pairing_row(s.basis().row(i)));
  return AffineSubspace::linear_span(kernel(rows));
}

IsotropyClass classify(const AffineSubspace& s, const SympSpace& sp) {
  require_ambient(s, sp, "classify");
  if (s.is_empty()) return IsotropyClass::Lagrangian;
  const auto lin = s.linear_part();
  const auto comp = complement(s, sp);
  const bool iso = includes(lin, comp);
  const bool coiso = includes(comp, lin);
  if (iso && coiso) return IsotropyClass::Lagrangian;
  if (iso) return IsotropyClass::Isotropic;
  if (coiso) return IsotropyClass::Coisotropic;
  return IsotropyClass::None;
}

FMatrix extend_symplectic_basis(const FMatrix& isotropic, const SympSpace& sp) {
  require_same_modulus(isotropic.prime(), sp.prime(), "extend_symplectic_basis");
  if (isotropic.cols() != sp.dim()) throw ShapeError("extend_symplectic_basis: generators have wrong length");
  const Prime& p = sp.prime();
  const std::size_t dim = sp.dim();
  const std::size_t n = sp.wires();

  FMatrix gens = isotropic;
  auto piv = rref_in_place(gens);
  gens.remove_rows_from(piv.size());
  for (std::size_t i = 0; i < gens.rows(); ++i)
    for (std::size_t j = i + 1; j < gens.rows(); ++j)
      if (sp.omega(gens.row(i), gens.row(j)) != 0)
        throw DomainError("extend_symplectic_basis: input is not isotropic");
  const std::size_t k = gens.rows();

  std::vector<FVector> es, fs;
  std::vector<Residue> slot_sign;
  auto sign_residue = [&](std::size_t slot) -> Residue { return sp.sign(slot) > 0 ? 1 : p.value() - 1; };

  // Removes the components along every hyperbolic pair found so far.
  auto project = [&](FVector w) {
    for (std::size_t j = 0; j < es.size(); ++j) {
      const Residue s = slot_sign[j];
      const Residue wf = p.mul(sp.omega(w, fs[j]), s);
      const Residue we = p.mul(sp.omega(w, es[j]), s);
      for (std::size_t c = 0; c < dim; ++c) {
        w[c] = p.sub(w[c], p.mul(wf, es[j][c]));
        w[c] = p.add(w[c], p.mul(we, fs[j][c]));
      }
    }
    return w;
  };
  auto unit = [&](std::size_t c) {
    FVector v(dim, 0);
    v[c] = 1;
    return v;
  };
  auto find_partner = [&](const FVector& e, Residue target) -> FVector {
    for (std::size_t c = 0; c < dim; ++c) {
      FVector w = project(unit(c));
      const Residue pairing = sp.omega(e, w);
      if (pairing == 0) continue;
      return scale(p, p.mul(target, p.inv(pairing)), w);
    }
    throw DomainError("extend_symplectic_basis: no symplectic partner found (degenerate form)");
  };

  for (std::size_t i = 0; i < k; ++i) {
    FVector e = project(gens.row_vector(i));
    if (is_zero(e)) throw DomainError("extend_symplectic_basis: generators are dependent after projection");
    const Residue s = sign_residue(es.size());
    FVector f = find_partner(e, s);
    es.push_back(std::move(e));
    fs.push_back(std::move(f));
    slot_sign.push_back(s);
  }
  for (std::size_t slot = k; slot < n; ++slot) {
    FVector e;
    for (std::size_t c = 0; c < dim; ++c) {
      e = project(unit(c));
      if (!is_zero(e)) break;
    }
    const Residue s = sign_residue(slot);
    FVector f = find_partner(e, s);
    es.push_back(std::move(e));
    fs.push_back(std::move(f));
    slot_sign.push_back(s);
  }

  FMatrix m(p, dim, dim);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t r = 0; r < dim; ++r) {
      m(r, 2 * i) = es[i][r];
      m(r, 2 * i + 1) = fs[i][r];
    }
  }
  return m;
}

Dilation dilate(const AffineSubspace& s, const SympSpace& sp) {
  require_ambient(s, sp, "dilate");
  if (s.is_empty()) throw DomainError("dilate: the empty subspace has no dilation");
  for (std::size_t i = 0; i < sp.wires(); ++i)
    if (sp.sign(i) < 0) throw DomainError("dilate: expects the standard form on every wire");
  if (!is_coisotropic(classify(s, sp))) throw DomainError("dilate: subspace is not coisotropic");

  const Prime& p = sp.prime();
  const std::size_t n = sp.wires();
  const auto comp = complement(s, sp);
  const std::size_t k = comp.dimension();
  FMatrix m = extend_symplectic_basis(comp.basis(), sp);

  // E = {(w, M c) + (0, a)}: c has free x-slots for the first k pairs, zero partner
  // slots there, and w on the remaining pairs.
  const std::size_t dom = 2 * (n - k);
  const std::size_t cod = 2 * n;
  FMatrix gens(p, 0, dom + cod);
  FVector row(dom + cod);
  for (std::size_t i = 0; i < k; ++i) {
    std::fill(row.begin(), row.end(), 0);
    for (std::size_t r = 0; r < cod; ++r) row[dom + r] = m(r, 2 * i);
    gens.append_row(row);
  }
  for (std::size_t j = 0; j < dom; ++j) {
    std::fill(row.begin(), row.end(), 0);
    row[j] = 1;
    for (std::size_t r = 0; r < cod; ++r) row[dom + r] = m(r, 2 * k + j);
    gens.append_row(row);
  }
  FVector off(dom + cod, 0);
  for (std::size_t r = 0; r < cod; ++r) off[dom + r] = s.offset()[r];
  return Dilation{AffineSubspace::canonicalize(gens, off), n - k, n, std::move(m)};
}

AffineSubspace image(const AffineSubspace& r, std::size_t dim_a) {
  if (dim_a > r.ambient_dim()) throw ShapeError("image: domain dimension exceeds ambient dimension");
  return project(r, dim_a, r.ambient_dim() - dim_a);
}

}  // namespace stabrel
