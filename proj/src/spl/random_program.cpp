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

#include "stabrel/spl/random_program.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "stabrel/error.hpp"
#include "stabrel/pauli.hpp"
#include "stabrel/spl/typecheck.hpp"

namespace stabrel::spl {

std::int64_t gate_order(Gate g, Prime p) {
  switch (g) {
    case Gate::X:
    case Gate::Z:
    case Gate::P:
    case Gate::CX: return p.value();
    case Gate::F: return 4;
    case Gate::SWAP: return 2;
    case Gate::Cliff: return 0;
  }
  return 0;
}

namespace {

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

template <typename T>
const T& pick(Rng& rng, const std::vector<T>& v) {
  return v[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(v.size()) - 1))];
}

std::string random_pauli_text(Rng& rng, Prime p) {
  const auto q = static_cast<std::int64_t>(p.value()) - 1;
  FVector x{static_cast<Residue>(uniform(rng, 0, q))}, z{static_cast<Residue>(uniform(rng, 0, q))};
  if (!x[0] && !z[0]) z[0] = 1;
  PauliLabel g{p, static_cast<Residue>(uniform(rng, 0, q)), x, z};
  return print_pauli(g);
}

// A random element of SL(2, p) plus a translation.
Clifford random_literal(Rng& rng, Prime p, const std::string& reg) {
  const auto q = static_cast<std::int64_t>(p.value()) - 1;
  const auto a = static_cast<Residue>(uniform(rng, 1, q));
  const auto b = static_cast<Residue>(uniform(rng, 0, q));
  const auto c = static_cast<Residue>(uniform(rng, 0, q));
  const Residue d = p.mul(p.add(1, p.mul(b, c)), p.inv(a));
  Clifford cl;
  cl.regs = {reg};
  cl.gate = Gate::Cliff;
  cl.matrix = {{a, b}, {c, d}};
  cl.offset = {uniform(rng, 0, q), uniform(rng, 0, q)};
  return cl;
}

class Generator {
 public:
  Generator(Rng& rng, const RandomProgramOptions& o, Prime p) : rng_(rng), o_(o), p_(p) {
    max_live_ = o.max_live ? o.max_live : o.max_qupits + o.max_pits;
    pool_size_ = std::max<std::size_t>(max_live_ + 2, o.input_qupits + o.input_pits + 2);
  }

  Program build() {
    Program prog;
    prog.nl = o_.nl;
    for (std::size_t i = 0; i < o_.input_qupits; ++i) bind(prog.inputs, RegType::Qpit);
    for (std::size_t i = 0; i < o_.input_pits; ++i) bind(prog.inputs, RegType::Pit);
    env_ = prog.inputs;
    for (std::size_t i = 0; i < o_.statements; ++i) prog.body.push_back({next(), {}});
    return prog;
  }

 private:
  std::vector<std::string> live(RegType t) const {
    std::vector<std::string> out;
    for (const auto& [n, ty] : env_)
      if (ty == t) out.push_back(n);
    return out;
  }
  std::string fresh() {
    std::vector<std::string> free;
    for (std::size_t i = 0; i < pool_size_; ++i) {
      std::string n = "r" + std::to_string(i);
      if (std::none_of(env_.begin(), env_.end(), [&](const auto& e) { return e.first == n; })) free.push_back(n);
    }
    return pick(rng_, free);
  }
  void bind(std::vector<std::pair<std::string, RegType>>& into, RegType t) {
    env_ = into;
    into.emplace_back(fresh(), t);
  }
  void erase(const std::string& n) {
    std::erase_if(env_, [&](const auto& e) { return e.first == n; });
  }
  void retype(const std::string& n, RegType t) {
    for (auto& e : env_)
      if (e.first == n) e.second = t;
  }

  StmtKind next() {
    const auto qs = live(RegType::Qpit), cs = live(RegType::Pit);
    const bool room = env_.size() < max_live_;
    const bool room_q = room && qs.size() < o_.max_qupits;
    const bool room_c = room && cs.size() < o_.max_pits;
    const auto q = static_cast<std::int64_t>(p_.value()) - 1;

    enum Kind { kGate, kGate2, kLiteral, kQInit, kInit, kMeas, kDisc, kAffine, kCtrl, kMul, kSkip };
    std::vector<Kind> kinds{kSkip};
    if (!qs.empty()) kinds.insert(kinds.end(), {kGate, kGate, kGate});
    if (qs.size() >= 2) kinds.insert(kinds.end(), {kGate2, kGate2});
    if (!qs.empty() && o_.literals) kinds.push_back(kLiteral);
    if (room_q) kinds.insert(kinds.end(), {kQInit, kQInit});
    if (o_.measurements && !qs.empty() && cs.size() < o_.max_pits) kinds.insert(kinds.end(), {kMeas, kMeas});
    if (o_.classical) {
      if (room_c) kinds.push_back(kInit);
      if (!cs.empty()) kinds.push_back(kDisc);
      if (room_c && !cs.empty()) kinds.push_back(kAffine);
      if (!cs.empty() && !qs.empty()) kinds.insert(kinds.end(), {kCtrl, kCtrl});
    }
    if (o_.nl && room_c && cs.size() >= 2) kinds.insert(kinds.end(), {kMul, kMul, kMul, kMul});

    switch (pick(rng_, kinds)) {
      case kGate: {
        Clifford c;
        c.regs = {pick(rng_, qs)};
        c.gate = pick(rng_, std::vector<Gate>{Gate::X, Gate::Z, Gate::F, Gate::P});
        c.power = uniform(rng_, -1, 3);
        return c;
      }
      case kGate2: {
        Clifford c;
        auto a = pick(rng_, qs), b = pick(rng_, qs);
        while (b == a) b = pick(rng_, qs);
        c.regs = {a, b};
        c.gate = uniform(rng_, 0, 3) ? Gate::CX : Gate::SWAP;
        c.power = uniform(rng_, -1, 2);
        return c;
      }
      case kLiteral: return random_literal(rng_, p_, pick(rng_, qs));
      case kQInit: {
        auto n = fresh();
        env_.emplace_back(n, RegType::Qpit);
        return QInit{n};
      }
      case kInit: {
        auto n = fresh();
        env_.emplace_back(n, RegType::Pit);
        return Init{n};
      }
      case kMeas: {
        auto n = pick(rng_, qs);
        retype(n, RegType::Pit);
        return Meas{n};
      }
      case kDisc: {
        auto n = pick(rng_, cs);
        erase(n);
        return Disc{n};
      }
      case kAffine: {
        Affine a;
        a.inputs = {pick(rng_, cs)};
        if (cs.size() >= 2 && uniform(rng_, 0, 1)) {
          auto b = pick(rng_, cs);
          while (b == a.inputs[0]) b = pick(rng_, cs);
          a.inputs.push_back(b);
        }
        IntVector row;
        for (std::size_t i = 0; i < a.inputs.size(); ++i) row.push_back(uniform(rng_, 0, q));
        a.matrix = {row};
        a.offset = {uniform(rng_, 0, q)};
        a.outputs = {fresh()};
        env_.emplace_back(a.outputs[0], RegType::Pit);
        return a;
      }
      case kCtrl: return Ctrl{random_pauli_text(rng_, p_), pick(rng_, cs), pick(rng_, qs)};
      case kMul: {
        auto l = pick(rng_, cs), r = pick(rng_, cs);
        while (r == l) r = pick(rng_, cs);
        Mul m{fresh(), l, r};
        env_.emplace_back(m.out, RegType::Pit);
        return m;
      }
      case kSkip: break;
    }
    return Skip{};
  }

  Rng& rng_;
  RandomProgramOptions o_;
  Prime p_;
  std::size_t max_live_;
  std::size_t pool_size_;
  std::vector<std::pair<std::string, RegType>> env_;
};

std::set<std::string> footprint(const Stmt& s) {
  struct V {
    std::set<std::string> operator()(const Skip&) const { return {}; }
    std::set<std::string> operator()(const Init& x) const { return {x.reg}; }
    std::set<std::string> operator()(const QInit& x) const { return {x.reg}; }
    std::set<std::string> operator()(const Disc& x) const { return {x.reg}; }
    std::set<std::string> operator()(const Meas& x) const { return {x.reg}; }
    std::set<std::string> operator()(const Affine& x) const {
      std::set<std::string> r(x.inputs.begin(), x.inputs.end());
      r.insert(x.outputs.begin(), x.outputs.end());
      return r;
    }
    std::set<std::string> operator()(const Clifford& x) const { return {x.regs.begin(), x.regs.end()}; }
    std::set<std::string> operator()(const Ctrl& x) const { return {x.control, x.target}; }
    std::set<std::string> operator()(const Mul& x) const { return {x.out, x.left, x.right}; }
  };
  return std::visit(V{}, s.kind);
}

// Environment before each statement, plus the final one.
std::vector<TypedEnv> environments(const Program& prog, Prime p) {
  const auto j = typecheck(prog, p);
  std::vector<TypedEnv> envs{j.input};
  envs.insert(envs.end(), j.trace.begin(), j.trace.end());
  return envs;
}

std::vector<std::string> names_of(const TypedEnv& env, RegType t) {
  std::vector<std::string> out;
  for (const auto& [n, ty] : env.entries())
    if (ty == t) out.push_back(n);
  return out;
}

std::string unused_name(const Program& prog) {
  std::set<std::string> used;
  for (const auto& [n, t] : prog.inputs) used.insert(n);
  for (const auto& s : prog.body) {
    auto f = footprint(s);
    used.insert(f.begin(), f.end());
  }
  for (std::size_t i = 0;; ++i) {
    std::string n = "t" + std::to_string(i);
    if (!used.count(n)) return n;
  }
}

bool rewrite_once(Rng& rng, Program& prog, Prime p, std::size_t max_live) {
  const auto envs = environments(prog, p);
  const auto pos = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(prog.body.size())));
  const TypedEnv& env = envs[pos];
  const auto qs = names_of(env, RegType::Qpit), cs = names_of(env, RegType::Pit);
  const bool room = !max_live || env.size() < max_live;
  auto insert = [&](std::vector<StmtKind> stmts) {
    std::vector<Stmt> block;
    for (auto& k : stmts) block.push_back({std::move(k), {}});
    prog.body.insert(prog.body.begin() + static_cast<std::ptrdiff_t>(pos), block.begin(), block.end());
    return true;
  };
  const auto q = static_cast<std::int64_t>(p.value()) - 1;

  switch (uniform(rng, 0, 5)) {
    case 0: {  // shift a gate power by its order
      std::vector<std::size_t> gates;
      for (std::size_t i = 0; i < prog.body.size(); ++i)
        if (auto* c = std::get_if<Clifford>(&prog.body[i].kind); c && c->gate != Gate::Cliff) gates.push_back(i);
      if (gates.empty()) return false;
      auto& c = std::get<Clifford>(prog.body[pick(rng, gates)].kind);
      c.power += (uniform(rng, 0, 1) ? 1 : -1) * gate_order(c.gate, p);
      return true;
    }
    case 1: {  // U^k ; U^-k
      if (qs.empty()) return false;
      Clifford c;
      if (qs.size() >= 2 && uniform(rng, 0, 1)) {
        auto a = pick(rng, qs), b = pick(rng, qs);
        while (a == b) b = pick(rng, qs);
        c.regs = {a, b};
        c.gate = uniform(rng, 0, 1) ? Gate::CX : Gate::SWAP;
      } else {
        c.regs = {pick(rng, qs)};
        c.gate = pick(rng, std::vector<Gate>{Gate::X, Gate::Z, Gate::F, Gate::P});
      }
      c.power = uniform(rng, 1, 3);
      Clifford inv = c;
      inv.power = -c.power;
      return insert({c, inv});
    }
    case 2: return insert({Skip{}});
    case 3: {  // swap independent neighbours
      if (prog.body.size() < 2) return false;
      const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(prog.body.size()) - 2));
      const auto a = footprint(prog.body[i]), b = footprint(prog.body[i + 1]);
      for (const auto& n : a)
        if (b.count(n)) return false;
      std::swap(prog.body[i], prog.body[i + 1]);
      return true;
    }
    case 4: {  // scratch qupit, measured and dropped
      if (!room) return false;
      const auto t = unused_name(prog);
      return insert({QInit{t}, Meas{t}, Disc{t}});
    }
    default: {  // classical copy, dropped
      if (!room || cs.empty()) return false;
      const auto t = unused_name(prog);
      Affine a;
      a.inputs = {pick(rng, cs)};
      a.outputs = {t};
      a.matrix = {{uniform(rng, 0, q)}};
      a.offset = {uniform(rng, 0, q)};
      return insert({a, Disc{t}});
    }
  }
}

}  // namespace

Program random_program(Rng& rng, const RandomProgramOptions& options, Prime p) {
  return Generator(rng, options, p).build();
}

Program equivalent_variant(Rng& rng, const Program& prog, Prime p, std::size_t max_live) {
  Program out = prog;
  const auto rounds = uniform(rng, 1, 3);
  for (std::int64_t done = 0, tries = 0; done < rounds && tries < 50; ++tries)
    if (rewrite_once(rng, out, p, max_live)) ++done;
  return out;
}

Program mutate(Rng& rng, const Program& prog, Prime p) {
  Program out = prog;
  const auto q = static_cast<std::int64_t>(p.value()) - 1;
  std::vector<std::size_t> sites;
  for (std::size_t i = 0; i < out.body.size(); ++i) {
    const auto& k = out.body[i].kind;
    if (std::holds_alternative<Clifford>(k) || std::holds_alternative<Ctrl>(k) || std::holds_alternative<Affine>(k))
      sites.push_back(i);
  }
  if (sites.empty()) {
    // Nothing to alter in place: add a gate on some live qupit if there is one.
    const auto envs = environments(out, p);
    const auto pos = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(out.body.size())));
    const auto qs = names_of(envs[pos], RegType::Qpit);
    if (qs.empty()) return out;
    Clifford c;
    c.regs = {pick(rng, qs)};
    c.gate = pick(rng, std::vector<Gate>{Gate::X, Gate::Z, Gate::F, Gate::P});
    out.body.insert(out.body.begin() + static_cast<std::ptrdiff_t>(pos), Stmt{c, {}});
    return out;
  }
  auto& kind = out.body[pick(rng, sites)].kind;
  if (auto* c = std::get_if<Clifford>(&kind)) {
    if (c->gate == Gate::Cliff) {
      c->offset[static_cast<std::size_t>(uniform(rng, 0, 1))] += uniform(rng, 1, q);
    } else if (uniform(rng, 0, 1)) {
      c->power += uniform(rng, 1, gate_order(c->gate, p) - 1);
    } else if (c->regs.size() == 1) {
      c->gate = pick(rng, std::vector<Gate>{Gate::X, Gate::Z, Gate::F, Gate::P});
    } else {
      c->gate = c->gate == Gate::CX ? Gate::SWAP : Gate::CX;
    }
  } else if (auto* t = std::get_if<Ctrl>(&kind)) {
    t->pauli = random_pauli_text(rng, p);
  } else if (auto* a = std::get_if<Affine>(&kind)) {
    const auto col = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(a->inputs.size())));
    if (col == a->inputs.size())
      a->offset[0] += uniform(rng, 1, q);
    else
      a->matrix[0][col] += uniform(rng, 1, q);
  }
  return out;
}

}  // namespace stabrel::spl
