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

#include "stabrel/spl/typecheck.hpp"

#include <algorithm>
#include <set>

#include "stabrel/error.hpp"
#include "stabrel/symp.hpp"

namespace stabrel::spl {

TypedEnv::TypedEnv(std::vector<std::pair<std::string, RegType>> entries) {
  for (auto& [name, t] : entries) bind(name, t);
}

std::optional<RegType> TypedEnv::find(const std::string& name) const {
  for (const auto& [n, t] : entries_)
    if (n == name) return t;
  return std::nullopt;
}

void TypedEnv::bind(const std::string& name, RegType t) {
  if (contains(name)) throw TypeError("fby", "register '" + name + "' is already bound");
  entries_.emplace_back(name, t);
}

void TypedEnv::erase(const std::string& name) {
  std::erase_if(entries_, [&](const auto& e) { return e.first == name; });
}

void TypedEnv::retype(const std::string& name, RegType t) {
  for (auto& e : entries_)
    if (e.first == name) e.second = t;
}

std::vector<std::pair<std::string, RegType>> TypedEnv::sorted() const {
  auto out = entries_;
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

bool same_bindings(const TypedEnv& a, const TypedEnv& b) { return a.sorted() == b.sorted(); }

std::string to_string(const TypedEnv& env) {
  std::string s = "{";
  for (std::size_t i = 0; i < env.entries().size(); ++i)
    s += (i ? ", " : "") + env.entries()[i].first + ":" + to_string(env.entries()[i].second);
  return s + "}";
}

namespace {

AffineSymplectic compose_actions(const AffineSymplectic& first, const AffineSymplectic& second) {
  // second after first: v |-> S2 (S1 v + t1) + t2
  AffineSymplectic out{second.s * first.s, second.s.apply(first.t)};
  out.t = add(second.s.prime(), out.t, second.t);
  return out;
}

AffineSymplectic invert_action(const AffineSymplectic& a) {
  FMatrix inv = inverse(a.s);
  FVector t = inv.apply(a.t);
  for (auto& v : t) v = inv.prime().neg(v);
  return {std::move(inv), std::move(t)};
}

AffineSymplectic power_action(AffineSymplectic base, std::int64_t e) {
  const Prime& p = base.s.prime();
  const std::size_t d = base.s.rows();
  if (e < 0) {
    base = invert_action(base);
    e = -e;
  }
  AffineSymplectic acc{FMatrix::identity(p, d), FVector(d, 0)};
  auto k = static_cast<std::uint64_t>(e);
  while (k) {
    if (k & 1) acc = compose_actions(acc, base);
    base = compose_actions(base, base);
    k >>= 1;
  }
  return acc;
}

}  // namespace

AffineSymplectic gate_action(Gate g, Prime p) {
  switch (g) {
    case Gate::X: return {FMatrix::identity(p, 2), FVector{1, 0}};
    case Gate::Z: return {FMatrix::identity(p, 2), FVector{0, 1}};
    case Gate::F: return {FMatrix::from_rows(p, 2, {{0, 1}, {-1, 0}}), FVector(2, 0)};
    case Gate::P: return {FMatrix::from_rows(p, 2, {{1, 0}, {-1, 1}}), FVector(2, 0)};
    case Gate::CX:
      // [ux, uz, vx, vz] |-> [ux, uz - vz, ux + vx, vz]
      return {FMatrix::from_rows(p, 4, {{1, 0, 0, 0}, {0, 1, 0, -1}, {1, 0, 1, 0}, {0, 0, 0, 1}}), FVector(4, 0)};
    case Gate::SWAP:
      return {FMatrix::from_rows(p, 4, {{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}}), FVector(4, 0)};
    case Gate::Cliff: break;
  }
  throw DomainError("gate_action: cliff literals carry their own matrix");
}

AffineSymplectic clifford_action(const Clifford& c, Prime p) {
  AffineSymplectic base{FMatrix(p, 0, 0), {}};
  if (c.gate == Gate::Cliff) {
    const std::size_t d = c.matrix.size();
    if (d == 0 || d % 2) throw DomainError("cliff matrix must be 2k x 2k");
    for (const auto& row : c.matrix)
      if (row.size() != d) throw DomainError("cliff matrix must be square");
    if (c.offset.size() != d) throw DomainError("cliff translation must have length " + std::to_string(d));
    FMatrix s = FMatrix::from_rows(p, d, c.matrix);
    const SympSpace sp(p, d / 2);
    if (!(s.transpose() * sp.gram() * s == sp.gram()))
      throw DomainError("cliff matrix is not symplectic over F_" + std::to_string(p.value()));
    FVector t(d);
    for (std::size_t i = 0; i < d; ++i) t[i] = p.reduce(c.offset[i]);
    base = {std::move(s), std::move(t)};
  } else {
    base = gate_action(c.gate, p);
  }
  return power_action(std::move(base), c.power);
}

PauliLabel ctrl_pauli(const Ctrl& c, Prime p) { return parse_pauli(c.pauli, p, 1); }

namespace {

class Checker {
 public:
  Checker(Prime p, TypedEnv env) : p_(p), env_(std::move(env)) {}

  void run(const Stmt& s) {
    line_ = s.pos.line;
    std::visit([this](const auto& k) { check(k); }, s.kind);
  }

  const TypedEnv& env() const { return env_; }

 private:
  [[noreturn]] void fail(const char* rule, const std::string& msg) const { throw TypeError(rule, msg, line_); }

  RegType need(const char* rule, const std::string& r) const {
    auto t = env_.find(r);
    if (!t) fail(rule, "register '" + r + "' is not bound");
    return *t;
  }
  void need_type(const char* rule, const std::string& r, RegType want) const {
    if (need(rule, r) != want)
      fail(rule, "register '" + r + "' has type " + to_string(*env_.find(r)) + ", expected " + to_string(want));
  }
  void need_fresh(const char* rule, const std::string& r) const {
    if (env_.contains(r)) fail(rule, "register '" + r + "' is already bound; new registers must be fresh");
  }
  void need_distinct(const char* rule, const std::vector<std::string>& regs) const {
    std::set<std::string> seen;
    for (const auto& r : regs)
      if (!seen.insert(r).second) fail(rule, "register '" + r + "' appears twice");
  }

  void check(const Skip&) {}
  void check(const Init& s) {
    need_fresh("init", s.reg);
    env_.bind(s.reg, RegType::Pit);
  }
  void check(const QInit& s) {
    need_fresh("qinit", s.reg);
    env_.bind(s.reg, RegType::Qpit);
  }
  void check(const Meas& s) {
    need_type("meas", s.reg, RegType::Qpit);
    env_.retype(s.reg, RegType::Pit);
  }
  void check(const Disc& s) {
    need_type("disc", s.reg, RegType::Pit);
    env_.erase(s.reg);
  }
  void check(const Affine& a) {
    need_distinct("affine", a.inputs);
    need_distinct("affine", a.outputs);
    for (const auto& r : a.inputs) need_type("affine", r, RegType::Pit);
    for (const auto& r : a.outputs) need_fresh("affine", r);
    if (a.matrix.size() != a.outputs.size())
      fail("affine", "matrix has " + std::to_string(a.matrix.size()) + " rows for " + std::to_string(a.outputs.size()) +
                         " output registers");
    for (const auto& row : a.matrix)
      if (row.size() != a.inputs.size())
        fail("affine", "matrix has " + std::to_string(row.size()) + " columns for " + std::to_string(a.inputs.size()) +
                           " input registers");
    if (a.offset.size() != a.outputs.size()) fail("affine", "offset length differs from the number of outputs");
    for (const auto& r : a.outputs) env_.bind(r, RegType::Pit);
  }
  void check(const Clifford& c) {
    need_distinct("clifford", c.regs);
    for (const auto& r : c.regs) need_type("clifford", r, RegType::Qpit);
    if (c.gate == Gate::Cliff && (c.matrix.empty() || c.matrix.size() % 2))
      fail("clifford", "cliff matrix must be 2k x 2k");
    const std::size_t arity = c.gate == Gate::Cliff ? c.matrix.size() / 2 : gate_arity(c.gate);
    if (arity != c.regs.size())
      fail("clifford", to_string(c.gate) + " acts on " + std::to_string(arity) + " register(s), got " +
                           std::to_string(c.regs.size()));
    try {
      clifford_action(c, p_);
    } catch (const DomainError& e) {
      fail("clifford", e.what());
    }
  }
  void check(const Ctrl& c) {
    need_type("ctrl", c.control, RegType::Pit);
    need_type("ctrl", c.target, RegType::Qpit);
    try {
      ctrl_pauli(c, p_);
    } catch (const SyntaxError& e) {
      fail("ctrl", "bad Pauli '" + c.pauli + "': " + e.what());
    }
  }
  void check(const Mul& m) {
    need_type("mul", m.left, RegType::Pit);
    need_type("mul", m.right, RegType::Pit);
    need_distinct("mul", {m.left, m.right});
    need_fresh("mul", m.out);
    env_.bind(m.out, RegType::Pit);
  }

  Prime p_;
  TypedEnv env_;
  std::size_t line_ = 0;
};

}  // namespace

Judgment typecheck(const Program& program, const TypedEnv& gamma, Prime p) {
  Checker c(p, gamma);
  Judgment j{p, program, gamma, {}, {}};
  for (const auto& s : program.body) {
    c.run(s);
    j.trace.push_back(c.env());
  }
  j.output = c.env();
  return j;
}

Judgment typecheck(const Program& program, Prime p) {
  TypedEnv gamma;
  for (const auto& [name, t] : program.inputs) {
    if (gamma.contains(name)) throw TypeError("input", "register '" + name + "' declared twice");
    gamma.bind(name, t);
  }
  return typecheck(program, gamma, p);
}

}  // namespace stabrel::spl
