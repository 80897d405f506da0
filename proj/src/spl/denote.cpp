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

#include "stabrel/spl/denote.hpp"

#include <algorithm>
#include <numeric>

#include "stabrel/error.hpp"

namespace stabrel::spl {

namespace {

Sort sort_of(RegType t) { return t == RegType::Pit ? Sort::C : Sort::Q; }

ObjectSignature signature_of(Prime p, const std::vector<std::pair<std::string, RegType>>& regs) {
  std::vector<Sort> w;
  for (const auto& r : regs) w.push_back(sort_of(r.second));
  return ObjectSignature(p, std::move(w));
}

struct LocalBuilder {
  Prime p;
  const TypedEnv& env;
  LocalRelation out{{}, {}, ArqMorphism(ObjectSignature(p), ObjectSignature(p), AffineSubspace::full(p, 0))};

  RegType type_of(const std::string& r) const {
    auto t = env.find(r);
    if (!t) throw TypeError("fby", "register '" + r + "' is not bound");
    return *t;
  }

  void finish(std::vector<std::string> consumed, std::vector<std::pair<std::string, RegType>> produced,
              std::vector<AffineSubspace> bodies) {
    std::vector<std::pair<std::string, RegType>> in;
    for (const auto& r : consumed) in.emplace_back(r, type_of(r));
    out = LocalRelation{std::move(consumed), produced,
                        ArqMorphism(signature_of(p, in), signature_of(p, produced), std::move(bodies))};
  }
  void finish(std::vector<std::string> consumed, std::vector<std::pair<std::string, RegType>> produced,
              AffineSubspace body) {
    finish(std::move(consumed), std::move(produced), std::vector<AffineSubspace>{std::move(body)});
  }

  void operator()(const Skip&) {}
  void operator()(const Init& s) { finish({}, {{s.reg, RegType::Pit}}, AffineSubspace::point(p, FVector{0})); }
  void operator()(const QInit& s) {
    finish({}, {{s.reg, RegType::Qpit}}, AffineSubspace::linear_span(FMatrix::from_rows(p, 2, {{0, 1}})));
  }
  void operator()(const Meas& s) { finish({s.reg}, {{s.reg, RegType::Pit}}, mu_z(p).body()); }
  void operator()(const Disc& s) { finish({s.reg}, {}, AffineSubspace::full(p, 1)); }
  void operator()(const Affine& a) {
    const std::size_t m = a.inputs.size(), n = a.outputs.size();
    FMatrix gens(p, m, 2 * m + n);
    for (std::size_t j = 0; j < m; ++j) {
      gens(j, j) = 1;
      gens(j, m + j) = 1;
      for (std::size_t i = 0; i < n; ++i) gens(j, 2 * m + i) = p.reduce(a.matrix[i][j]);
    }
    FVector off(2 * m + n, 0);
    for (std::size_t i = 0; i < n; ++i) off[2 * m + i] = p.reduce(a.offset[i]);
    std::vector<std::pair<std::string, RegType>> produced;
    for (const auto& r : a.inputs) produced.emplace_back(r, RegType::Pit);
    for (const auto& r : a.outputs) produced.emplace_back(r, RegType::Pit);
    finish(a.inputs, std::move(produced), AffineSubspace::canonicalize(gens, off));
  }
  void operator()(const Clifford& c) {
    const auto act = clifford_action(c, p);
    const std::size_t d = act.s.rows();
    FMatrix gens(p, d, 2 * d);
    for (std::size_t col = 0; col < d; ++col) {
      gens(col, col) = 1;
      for (std::size_t r = 0; r < d; ++r) gens(col, d + r) = act.s(r, col);
    }
    FVector off(2 * d, 0);
    for (std::size_t r = 0; r < d; ++r) off[d + r] = act.t[r];
    std::vector<std::pair<std::string, RegType>> produced;
    for (const auto& r : c.regs) produced.emplace_back(r, RegType::Qpit);
    finish(c.regs, std::move(produced), AffineSubspace::canonicalize(gens, off));
  }
  void operator()(const Ctrl& c) {
    const auto pauli = ctrl_pauli(c, p);
    const auto px = static_cast<std::int64_t>(pauli.x[0]);
    const auto pz = static_cast<std::int64_t>(pauli.z[0]);
    // [u, vx, vz] |-> [u, vx + u px, vz + u pz]
    auto body = AffineSubspace::linear_span(
        FMatrix::from_rows(p, 6, {{1, 0, 0, 1, px, pz}, {0, 1, 0, 0, 1, 0}, {0, 0, 1, 0, 0, 1}}));
    finish({c.control, c.target}, {{c.control, RegType::Pit}, {c.target, RegType::Qpit}}, body);
  }
  void operator()(const Mul& m) {
    std::vector<AffineSubspace> lines;
    for (Residue a = 0; a < p.value(); ++a) {
      FMatrix dir = FMatrix::from_rows(p, 5, {{0, 1, 0, 1, static_cast<std::int64_t>(a)}});
      FVector off{a, 0, a, 0, 0};
      lines.push_back(AffineSubspace::canonicalize(dir, off));
    }
    finish({m.left, m.right}, {{m.left, RegType::Pit}, {m.right, RegType::Pit}, {m.out, RegType::Pit}},
           std::move(lines));
  }
};

bool uses_mul(const Program& prog) {
  return std::any_of(prog.body.begin(), prog.body.end(),
                     [](const Stmt& s) { return std::holds_alternative<Mul>(s.kind); });
}

}  // namespace

LocalRelation local_relation(const Stmt& s, const TypedEnv& before, Prime p) {
  LocalBuilder b{p, before};
  std::visit(b, s.kind);
  return std::move(b.out);
}

ArqMorphism denote(const Judgment& j, DenoteOptions) {
  const Prime& p = j.p;
  const auto dom = signature_of(p, j.input.entries());
  const std::size_t d = dom.dim();

  std::vector<std::pair<std::string, Sort>> layout;
  for (const auto& [name, t] : j.input.entries()) layout.emplace_back(name, sort_of(t));
  std::vector<AffineSubspace> bodies{identity(dom).body()};

  TypedEnv env = j.input;
  for (std::size_t i = 0; i < j.program.body.size(); ++i) {
    const Stmt& s = j.program.body[i];
    if (std::holds_alternative<Skip>(s.kind)) {
      env = j.trace[i];
      continue;
    }
    auto local = local_relation(s, env, p);

    std::vector<std::size_t> window;
    std::vector<bool> consumed(layout.size(), false);
    for (const auto& r : local.consumed) {
      std::size_t coord = 0, idx = 0;
      for (; idx < layout.size() && layout[idx].first != r; ++idx) coord += ObjectSignature::width(layout[idx].second);
      if (idx == layout.size()) throw TypeError("fby", "register '" + r + "' is not live");
      for (std::size_t k = 0; k < ObjectSignature::width(layout[idx].second); ++k) window.push_back(coord + k);
      consumed[idx] = true;
    }

    std::vector<AffineSubspace> next;
    for (const auto& b : bodies)
      for (const auto& lb : local.relation.bodies()) next.push_back(compose_window(b, d, window, lb));

    std::vector<std::pair<std::string, Sort>> new_layout;
    for (std::size_t k = 0; k < layout.size(); ++k)
      if (!consumed[k]) new_layout.push_back(layout[k]);
    for (const auto& [name, t] : local.produced) new_layout.emplace_back(name, sort_of(t));
    layout = std::move(new_layout);

    std::size_t cod_dim = 0;
    for (const auto& r : layout) cod_dim += ObjectSignature::width(r.second);
    bodies = normalize_union(std::move(next), p, d + cod_dim);
    env = j.trace[i];
  }

  // Reorder codomain wires by register name.
  std::vector<std::size_t> order(layout.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return layout[a].first < layout[b].first; });
  std::vector<std::size_t> starts(layout.size());
  std::size_t acc = d;
  for (std::size_t k = 0; k < layout.size(); ++k) {
    starts[k] = acc;
    acc += ObjectSignature::width(layout[k].second);
  }
  std::vector<std::size_t> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Sort> cod_sorts;
  for (auto k : order) {
    for (std::size_t c = 0; c < ObjectSignature::width(layout[k].second); ++c) perm.push_back(starts[k] + c);
    cod_sorts.push_back(layout[k].second);
  }
  for (auto& b : bodies) b = permute(b, perm);
  return ArqMorphism(dom, ObjectSignature(p, std::move(cod_sorts)), std::move(bodies));
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Equivalent: return "equivalent";
    case Verdict::Inequivalent: return "inequivalent";
    case Verdict::InterfaceMismatch: return "interface mismatch";
  }
  return "?";
}

EquivResult equivalent(const Judgment& a, const Judgment& b, EquivOptions options) {
  require_same_modulus(a.p, b.p, "equivalent");
  EquivResult res{Verdict::InterfaceMismatch, {}, uses_mul(a.program) || uses_mul(b.program)};
  auto types = [](const std::vector<std::pair<std::string, RegType>>& regs) {
    std::vector<RegType> t;
    for (const auto& r : regs) t.push_back(r.second);
    return t;
  };
  Judgment bb = b;
  if (options.positional) {
    if (types(a.input.entries()) != types(b.input.entries())) {
      res.detail = "input types differ: " + to_string(a.input) + " vs " + to_string(b.input);
      return res;
    }
    if (types(a.output.sorted()) != types(b.output.sorted())) {
      res.detail = "output types differ: " + to_string(a.output) + " vs " + to_string(b.output);
      return res;
    }
  } else {
    if (!same_bindings(a.input, b.input)) {
      res.detail = "input environments differ: " + to_string(a.input) + " vs " + to_string(b.input);
      return res;
    }
    if (!same_bindings(a.output, b.output)) {
      res.detail = "output environments differ: " + to_string(a.output) + " vs " + to_string(b.output);
      return res;
    }
    if (!(a.input == b.input)) bb = typecheck(b.program, a.input, b.p);
  }
  const DenoteOptions dopt{options.point_cap};
  const auto da = denote(a, dopt);
  const auto db = denote(bb, dopt);
  res.verdict = equal(da, db, options.point_cap) ? Verdict::Equivalent : Verdict::Inequivalent;
  return res;
}

}  // namespace stabrel::spl
