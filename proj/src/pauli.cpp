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

#include "stabrel/pauli.hpp"

#include <cctype>
#include <sstream>

#include "stabrel/error.hpp"

namespace stabrel {

PauliLabel PauliLabel::identity(Prime p, std::size_t n) { return PauliLabel{p, 0, FVector(n, 0), FVector(n, 0)}; }

PauliLabel PauliLabel::from_vector(Prime p, Residue phase, std::span<const Residue> v) {
  if (v.size() % 2) throw ShapeError("Pauli vector must have even length");
  PauliLabel g = identity(p, v.size() / 2);
  g.phase = phase % p.value();
  for (std::size_t i = 0; i < g.qupits(); ++i) {
    g.x[i] = v[2 * i] % p.value();
    g.z[i] = v[2 * i + 1] % p.value();
  }
  return g;
}

FVector PauliLabel::vector() const {
  FVector v(2 * x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    v[2 * i] = x[i];
    v[2 * i + 1] = z[i];
  }
  return v;
}

std::size_t PauliLabel::weight() const {
  std::size_t w = 0;
  for (std::size_t i = 0; i < x.size(); ++i) w += (x[i] || z[i]) ? 1 : 0;
  return w;
}

namespace {

void require_same_shape(const PauliLabel& g, const PauliLabel& h, const char* where) {
  require_same_modulus(g.p, h.p, where);
  if (g.qupits() != h.qupits()) throw ShapeError(std::string(where) + ": Pauli labels act on different qupit counts");
}

}  // namespace

Residue symplectic_product(const PauliLabel& g, const PauliLabel& h) {
  require_same_shape(g, h, "symplectic_product");
  const Prime& p = g.p;
  Residue acc = 0;
  for (std::size_t i = 0; i < g.qupits(); ++i) {
    acc = p.add(acc, p.mul(g.x[i], h.z[i]));
    acc = p.sub(acc, p.mul(g.z[i], h.x[i]));
  }
  return acc;
}

// pi(a,v) pi(b,w) = pi(a + b - omega(v,w)/2, v + w) for X|j> = |j+1>, Z|j> = xi^j |j>.
PauliLabel multiply(const PauliLabel& g, const PauliLabel& h) {
  require_same_shape(g, h, "multiply");
  const Prime& p = g.p;
  PauliLabel out = PauliLabel::identity(p, g.qupits());
  out.phase = p.sub(p.add(g.phase, h.phase), p.mul(p.half(), symplectic_product(g, h)));
  for (std::size_t i = 0; i < g.qupits(); ++i) {
    out.x[i] = p.add(g.x[i], h.x[i]);
    out.z[i] = p.add(g.z[i], h.z[i]);
  }
  return out;
}

PauliLabel inverse(const PauliLabel& g) {
  PauliLabel out = g;
  out.phase = g.p.neg(g.phase);
  for (auto& v : out.x) v = g.p.neg(v);
  for (auto& v : out.z) v = g.p.neg(v);
  return out;
}

PauliLabel power(const PauliLabel& g, std::int64_t e) {
  // omega(v, v) = 0, so powers scale the label linearly.
  const Residue k = g.p.reduce(e);
  PauliLabel out = g;
  out.phase = g.p.mul(k, g.phase);
  for (auto& v : out.x) v = g.p.mul(k, v);
  for (auto& v : out.z) v = g.p.mul(k, v);
  return out;
}

bool commutes(const PauliLabel& g, const PauliLabel& h) { return symplectic_product(g, h) == 0; }

StabGroup::StabGroup(Prime p, std::size_t n, std::vector<PauliLabel> generators)
    : p_(p), n_(n), gens_(std::move(generators)) {
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    require_same_modulus(p_, gens_[i].p, "StabGroup");
    if (gens_[i].qupits() != n_) throw ShapeError("StabGroup: generator " + std::to_string(i) + " has wrong length");
    if (gens_[i].is_identity_up_to_phase() && gens_[i].phase != 0)
      throw DomainError("StabGroup: generator " + std::to_string(i) + " is a nontrivial phase times the identity");
  }
  for (std::size_t i = 0; i < gens_.size(); ++i)
    for (std::size_t j = i + 1; j < gens_.size(); ++j)
      if (!commutes(gens_[i], gens_[j]))
        throw DomainError("StabGroup: generators " + std::to_string(i) + " and " + std::to_string(j) +
                          " do not commute");
}

AffineSubspace group_to_subspace(const StabGroup& g) {
  const Prime& p = g.prime();
  const SympSpace sp(p, g.qupits());
  const std::size_t dim = sp.dim();
  FMatrix perp(p, 0, dim);
  FMatrix constraints(p, 0, dim);
  FVector rhs;
  for (const auto& gen : g.generators()) {
    const FVector b = gen.vector();
    perp.append_row(b);
    // omega(b, a) = phase, read as a linear equation in a.
    constraints.append_row(sp.pairing_row(b));
    rhs.push_back(gen.phase);
  }
  auto sol = solve(constraints, rhs);
  if (!sol) return AffineSubspace::empty_set(p, dim);
  if (perp.rows() == 0) return AffineSubspace::full(p, dim);
  const auto lin = complement(AffineSubspace::linear_span(perp), sp);
  return AffineSubspace::canonicalize(lin.basis(), sol->particular);
}

StabGroup subspace_to_group(const AffineSubspace& c) {
  if (c.ambient_dim() % 2) throw ShapeError("subspace_to_group: ambient dimension is odd");
  const SympSpace sp(c.prime(), c.ambient_dim() / 2);
  if (c.is_empty()) throw DomainError("subspace_to_group: the empty subspace has no stabiliser group");
  if (!is_coisotropic(classify(c, sp))) throw DomainError("subspace_to_group: subspace is not coisotropic");
  const auto perp = complement(c, sp);
  std::vector<PauliLabel> gens;
  for (std::size_t i = 0; i < perp.dimension(); ++i) {
    auto b = perp.basis().row(i);
    gens.push_back(PauliLabel::from_vector(c.prime(), sp.omega(b, c.offset()), b));
  }
  return StabGroup(c.prime(), sp.wires(), std::move(gens));
}

namespace {

class PauliLexer {
 public:
  PauliLexer(std::string_view text) : text_(text) {}

  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  std::size_t column() const { return pos_ + 1; }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char get() { return text_[pos_++]; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::optional<std::uint64_t> number() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) return std::nullopt;
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<std::uint64_t>(get() - '0');
      if (v > (1ull << 40)) throw SyntaxError("number too large", 1, column());
    }
    return v;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

PauliLabel parse_pauli(std::string_view text, Prime p, std::size_t n) {
  PauliLabel g = PauliLabel::identity(p, n);
  PauliLexer lex(text);
  bool phase_seen = false;
  bool any = false;
  std::vector<bool> x_seen(n, false), z_seen(n, false);
  while (!lex.done()) {
    const std::size_t col = lex.column();
    const char c = lex.get();
    any = true;
    auto exponent = [&]() -> Residue {
      if (lex.peek() != '^') return 1;
      lex.get();
      auto e = lex.number();
      if (!e) throw SyntaxError("expected an exponent after '^'", 1, lex.column());
      if (*e >= p.value())
        throw SyntaxError("exponent " + std::to_string(*e) + " is not below p = " + std::to_string(p.value()), 1, col);
      return static_cast<Residue>(*e);
    };
    if (c == 'w') {
      if (phase_seen) throw SyntaxError("phase given twice", 1, col);
      phase_seen = true;
      g.phase = exponent();
    } else if (c == 'I') {
      // explicit identity factor
    } else if (c == 'X' || c == 'Z') {
      auto idx = lex.number();
      std::size_t i = 0;
      if (idx) {
        i = static_cast<std::size_t>(*idx);
      } else if (n != 1) {
        throw SyntaxError(std::string("qupit index required after '") + c + "' when n > 1", 1, col);
      }
      if (i >= n) throw SyntaxError("qupit index " + std::to_string(i) + " out of range for n = " + std::to_string(n), 1, col);
      auto& seen = c == 'X' ? x_seen : z_seen;
      if (seen[i]) throw SyntaxError(std::string("duplicate factor ") + c + std::to_string(i), 1, col);
      seen[i] = true;
      (c == 'X' ? g.x : g.z)[i] = exponent();
    } else {
      throw SyntaxError(std::string("unexpected character '") + c + "' in Pauli string", 1, col);
    }
    const char next = lex.peek();
    if (next != '\0' && !std::isspace(static_cast<unsigned char>(next)))
      throw SyntaxError("factors must be separated by whitespace", 1, lex.column());
  }
  if (!any) throw SyntaxError("empty Pauli string", 1, 1);
  return g;
}

std::string print_pauli(const PauliLabel& g) {
  std::ostringstream os;
  auto factor = [&](const std::string& name, Residue e) {
    if (os.tellp() > 0) os << ' ';
    os << name;
    if (e != 1) os << '^' << e;
  };
  if (g.phase) factor("w", g.phase);
  for (std::size_t i = 0; i < g.qupits(); ++i) {
    if (g.x[i]) factor("X" + std::to_string(i), g.x[i]);
    if (g.z[i]) factor("Z" + std::to_string(i), g.z[i]);
  }
  if (os.tellp() == 0) return "I";
  return os.str();
}

}  // namespace stabrel
