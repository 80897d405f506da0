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

#include "stabrel/arq.hpp"

#include <algorithm>
#include <numeric>

#include "stabrel/error.hpp"

namespace stabrel {

std::string to_string(Sort s) {
  switch (s) {
    case Sort::Q: return "Q";
    case Sort::QDual: return "Q*";
    case Sort::C: return "C";
  }
  return "?";
}

Sort sort_from_string(const std::string& s) {
  if (s == "Q") return Sort::Q;
  if (s == "Q*") return Sort::QDual;
  if (s == "C") return Sort::C;
  throw ShapeError("unknown wire sort '" + s + "'");
}

ObjectSignature::ObjectSignature(Prime p, std::vector<Sort> wires) : p_(p), wires_(std::move(wires)) {}

ObjectSignature ObjectSignature::quantum(Prime p, std::size_t n) { return ObjectSignature(p, std::vector<Sort>(n, Sort::Q)); }

ObjectSignature ObjectSignature::classical(Prime p, std::size_t n) {
  return ObjectSignature(p, std::vector<Sort>(n, Sort::C));
}

std::size_t ObjectSignature::dim() const {
  std::size_t d = 0;
  for (auto s : wires_) d += width(s);
  return d;
}

std::size_t ObjectSignature::offset(std::size_t i) const {
  std::size_t d = 0;
  for (std::size_t k = 0; k < i; ++k) d += width(wires_[k]);
  return d;
}

bool ObjectSignature::quantum_only() const {
  return std::none_of(wires_.begin(), wires_.end(), [](Sort s) { return s == Sort::C; });
}

ObjectSignature ObjectSignature::dual() const {
  std::vector<Sort> w;
  for (auto s : wires_) w.push_back(s == Sort::Q ? Sort::QDual : s == Sort::QDual ? Sort::Q : Sort::C);
  return ObjectSignature(p_, std::move(w));
}

ObjectSignature ObjectSignature::concat(const ObjectSignature& other) const {
  require_same_modulus(p_, other.p_, "signature concatenation");
  std::vector<Sort> w = wires_;
  w.insert(w.end(), other.wires_.begin(), other.wires_.end());
  return ObjectSignature(p_, std::move(w));
}

std::string to_string(const ObjectSignature& s) {
  if (s.size() == 0) return "I";
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? " (x) " : "") + to_string(s.wires()[i]);
  return out;
}

std::vector<AffineSubspace> normalize_union(std::vector<AffineSubspace> bodies, const Prime& p, std::size_t dim) {
  std::vector<AffineSubspace> nonempty;
  for (auto& b : bodies)
    if (!b.is_empty()) nonempty.push_back(std::move(b));
  if (nonempty.empty()) return {AffineSubspace::empty_set(p, dim)};
  std::vector<std::pair<std::string, AffineSubspace>> keyed;
  for (auto& b : nonempty) keyed.emplace_back(to_json(b).dump(), std::move(b));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  keyed.erase(std::unique(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first == b.first; }),
              keyed.end());
  std::vector<AffineSubspace> out;
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    bool subsumed = false;
    for (std::size_t j = 0; j < keyed.size() && !subsumed; ++j)
      if (i != j && includes(keyed[i].second, keyed[j].second)) subsumed = true;
    if (!subsumed) out.push_back(keyed[i].second);
  }
  return out;
}

namespace {

AffineSubspace diagonal(const Prime& p, std::size_t d) {
  FMatrix gens(p, d, 2 * d);
  for (std::size_t i = 0; i < d; ++i) {
    gens(i, i) = 1;
    gens(i, d + i) = 1;
  }
  return AffineSubspace::linear_span(gens);
}

}  // namespace

ArqMorphism::ArqMorphism(ObjectSignature dom, ObjectSignature cod, std::vector<AffineSubspace> bodies)
    : dom_(std::move(dom)), cod_(std::move(cod)) {
  require_same_modulus(dom_.prime(), cod_.prime(), "morphism");
  const std::size_t d = dom_.dim() + cod_.dim();
  if (bodies.empty()) bodies.push_back(AffineSubspace::empty_set(dom_.prime(), d));
  for (const auto& b : bodies) {
    require_same_modulus(b.prime(), dom_.prime(), "morphism body");
    if (b.ambient_dim() != d) {
      throw ShapeError("morphism body has dimension " + std::to_string(b.ambient_dim()) + ", signatures need " +
                       std::to_string(d));
    }
  }
  bodies_ = normalize_union(std::move(bodies), dom_.prime(), d);
  validate_coisotropic(*this);
}

ArqMorphism::ArqMorphism(ObjectSignature dom, ObjectSignature cod, AffineSubspace body)
    : ArqMorphism(std::move(dom), std::move(cod), std::vector<AffineSubspace>{std::move(body)}) {}

const AffineSubspace& ArqMorphism::body() const {
  if (!is_affine()) throw DomainError("morphism is a proper union; no single body");
  return bodies_.front();
}

SympSpace morphism_form(const ObjectSignature& dom, const ObjectSignature& cod) {
  if (!dom.quantum_only() || !cod.quantum_only())
    throw DomainError("morphism_form: classical wires carry no symplectic form");
  std::vector<int> signs;
  for (auto s : dom.wires()) signs.push_back(s == Sort::Q ? -1 : 1);
  for (auto s : cod.wires()) signs.push_back(s == Sort::Q ? 1 : -1);
  return SympSpace(dom.prime(), std::move(signs));
}

void validate_coisotropic(const ArqMorphism& f) {
  if (!f.is_affine() || !f.quantum_only()) return;
  const auto c = classify(f.body(), morphism_form(f.dom(), f.cod()));
  if (!is_coisotropic(c))
    throw DomainError("quantum morphism " + to_string(f.dom()) + " -> " + to_string(f.cod()) +
                      " is not coisotropic (" + to_string(c) + ")");
}

bool is_lagrangian(const ArqMorphism& f) {
  if (!f.is_affine() || !f.quantum_only()) return false;
  return classify(f.body(), morphism_form(f.dom(), f.cod())) == IsotropyClass::Lagrangian;
}

ArqMorphism identity(const ObjectSignature& sig) { return ArqMorphism(sig, sig, diagonal(sig.prime(), sig.dim())); }

ArqMorphism compose(const ArqMorphism& f, const ArqMorphism& g) {
  if (!(f.cod() == g.dom()))
    throw ShapeError("compose: codomain " + to_string(f.cod()) + " does not match domain " + to_string(g.dom()));
  std::vector<AffineSubspace> out;
  for (const auto& a : f.bodies())
    for (const auto& b : g.bodies()) out.push_back(compose(a, b, f.dom().dim()));
  return ArqMorphism(f.dom(), g.cod(), std::move(out));
}

ArqMorphism tensor(const ArqMorphism& f, const ArqMorphism& g) {
  require_same_modulus(f.prime(), g.prime(), "tensor");
  const std::size_t df = f.dom().dim(), cf = f.cod().dim(), dg = g.dom().dim(), cg = g.cod().dim();
  std::vector<std::size_t> perm;
  for (std::size_t i = 0; i < df; ++i) perm.push_back(i);
  for (std::size_t i = 0; i < dg; ++i) perm.push_back(df + cf + i);
  for (std::size_t i = 0; i < cf; ++i) perm.push_back(df + i);
  for (std::size_t i = 0; i < cg; ++i) perm.push_back(df + cf + dg + i);
  std::vector<AffineSubspace> out;
  for (const auto& a : f.bodies())
    for (const auto& b : g.bodies()) out.push_back(permute(direct_sum(a, b), perm));
  return ArqMorphism(f.dom().concat(g.dom()), f.cod().concat(g.cod()), std::move(out));
}

ArqMorphism dagger(const ArqMorphism& f) {
  std::vector<AffineSubspace> out;
  for (const auto& a : f.bodies()) out.push_back(converse(a, f.dom().dim()));
  return ArqMorphism(f.cod(), f.dom(), std::move(out));
}

ArqMorphism swap(const ObjectSignature& a, const ObjectSignature& b) {
  require_same_modulus(a.prime(), b.prime(), "swap");
  const std::size_t da = a.dim(), db = b.dim(), d = da + db;
  FMatrix gens(a.prime(), d, 2 * d);
  for (std::size_t i = 0; i < da; ++i) {
    gens(i, i) = 1;
    gens(i, d + db + i) = 1;
  }
  for (std::size_t j = 0; j < db; ++j) {
    gens(da + j, da + j) = 1;
    gens(da + j, d + j) = 1;
  }
  return ArqMorphism(a.concat(b), b.concat(a), AffineSubspace::linear_span(gens));
}

ArqMorphism cup(const ObjectSignature& a) {
  return ArqMorphism(ObjectSignature(a.prime()), a.dual().concat(a), diagonal(a.prime(), a.dim()));
}

ArqMorphism cap(const ObjectSignature& a) {
  return ArqMorphism(a.concat(a.dual()), ObjectSignature(a.prime()), diagonal(a.prime(), a.dim()));
}

ArqMorphism im(const ObjectSignature& a) {
  return ArqMorphism(ObjectSignature(a.prime()), a, AffineSubspace::full(a.prime(), a.dim()));
}

ArqMorphism mu_z(Prime p) {
  auto body = AffineSubspace::linear_span(FMatrix::from_rows(p, 3, {{1, 0, 1}, {0, 1, 0}}));
  return ArqMorphism(ObjectSignature::quantum(p, 1), ObjectSignature::classical(p, 1), body);
}

ArqMorphism mu_z_dag(Prime p) {
  auto body = AffineSubspace::linear_span(FMatrix::from_rows(p, 3, {{1, 1, 0}, {0, 0, 1}}));
  return ArqMorphism(ObjectSignature::classical(p, 1), ObjectSignature::quantum(p, 1), body);
}

ArqMorphism decoherence(Prime p) {
  auto body = AffineSubspace::linear_span(FMatrix::from_rows(p, 4, {{1, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}}));
  return ArqMorphism(ObjectSignature::quantum(p, 1), ObjectSignature::quantum(p, 1), body);
}

ArqMorphism mul_relation(Prime p) {
  std::vector<AffineSubspace> lines;
  for (Residue a = 0; a < p.value(); ++a) {
    FMatrix dir = FMatrix::from_rows(p, 3, {{0, 1, static_cast<std::int64_t>(a)}});
    FVector off{a, 0, 0};
    lines.push_back(AffineSubspace::canonicalize(dir, off));
  }
  return ArqMorphism(ObjectSignature::classical(p, 2), ObjectSignature::classical(p, 1), std::move(lines));
}

ArqMorphism join(const ArqMorphism& f, const ArqMorphism& g) {
  if (!(f.dom() == g.dom()) || !(f.cod() == g.cod())) throw ShapeError("join: signatures differ");
  std::vector<AffineSubspace> all = f.bodies();
  all.insert(all.end(), g.bodies().begin(), g.bodies().end());
  return ArqMorphism(f.dom(), f.cod(), std::move(all));
}

bool is_total(const ArqMorphism& f, std::size_t point_cap) {
  const std::size_t d = f.dom().dim();
  std::vector<AffineSubspace> shadows;
  for (const auto& b : f.bodies()) {
    auto s = project(b, 0, d);
    if (!s.is_empty() && s.dimension() == d) return true;
    shadows.push_back(std::move(s));
  }
  return covered_by_union(AffineSubspace::full(f.prime(), d), shadows, point_cap);
}

bool equal(const ArqMorphism& f, const ArqMorphism& g, std::size_t point_cap) {
  require_same_modulus(f.prime(), g.prime(), "equal");
  if (!(f.dom() == g.dom()) || !(f.cod() == g.cod()))
    throw ShapeError("equal: signatures differ (" + to_string(f.dom()) + " -> " + to_string(f.cod()) + " vs " +
                     to_string(g.dom()) + " -> " + to_string(g.cod()) + ")");
  if (f.is_affine() && g.is_affine()) return f.body() == g.body();
  if (f.bodies() == g.bodies()) return true;
  for (const auto& b : f.bodies())
    if (!covered_by_union(b, g.bodies(), point_cap)) return false;
  for (const auto& b : g.bodies())
    if (!covered_by_union(b, f.bodies(), point_cap)) return false;
  return true;
}

nlohmann::ordered_json to_json(const ArqMorphism& f) {
  nlohmann::ordered_json j;
  j["p"] = f.prime().value();
  auto sorts = [](const ObjectSignature& s) {
    auto a = nlohmann::ordered_json::array();
    for (auto w : s.wires()) a.push_back(to_string(w));
    return a;
  };
  j["dom"] = sorts(f.dom());
  j["cod"] = sorts(f.cod());
  auto bodies = nlohmann::ordered_json::array();
  for (const auto& b : f.bodies()) bodies.push_back(to_json(b));
  j["bodies"] = std::move(bodies);
  return j;
}

ArqMorphism morphism_from_json(const nlohmann::json& j) {
  try {
    Prime p(j.at("p").get<std::int64_t>());
    auto sig = [&](const char* key) {
      std::vector<Sort> w;
      for (const auto& s : j.at(key)) w.push_back(sort_from_string(s.get<std::string>()));
      return ObjectSignature(p, std::move(w));
    };
    std::vector<AffineSubspace> bodies;
    for (const auto& b : j.at("bodies")) bodies.push_back(subspace_from_json(b));
    return ArqMorphism(sig("dom"), sig("cod"), std::move(bodies));
  } catch (const nlohmann::json::exception& e) {
    throw ShapeError(std::string("malformed morphism JSON: ") + e.what());
  }
}

}  // namespace stabrel
