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

#include "stabrel/oracle/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "stabrel/error.hpp"
#include "stabrel/spl/parser.hpp"

namespace stabrel::oracle {

using Index = Eigen::Index;

std::vector<Complex> roots_of_unity(const Prime& p) {
  std::vector<Complex> r(p.value());
  for (std::size_t k = 0; k < r.size(); ++k)
    r[k] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / p.value());
  return r;
}

namespace {

std::size_t checked_power(std::size_t base, std::size_t exp, std::size_t cap, const char* what) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (n > cap / base) {
      throw ResourceError(std::string(what) + ": dimension " + std::to_string(base) + "^" + std::to_string(exp) +
                          " exceeds the cap of " + std::to_string(cap));
    }
    n *= base;
  }
  return n;
}

// Adds coeff * pi(phase, v) into m, where v is an interleaved label over n qupits.
void accumulate_pauli(CMatrix& m, const Prime& p, const std::vector<Complex>& xi, Residue phase,
                      std::span<const Residue> v, Complex coeff) {
  const std::size_t n = v.size() / 2;
  Residue base = phase;
  for (std::size_t k = 0; k < n; ++k) base = p.add(base, p.mul(p.half(), p.mul(v[2 * k], v[2 * k + 1])));
  const auto dim = static_cast<std::size_t>(m.rows());
  std::vector<std::size_t> digits(n, 0);
  for (std::size_t j = 0; j < dim; ++j) {
    std::size_t rest = j;
    for (std::size_t k = n; k-- > 0;) {
      digits[k] = rest % p.value();
      rest /= p.value();
    }
    Residue ph = base;
    std::size_t row = 0;
    for (std::size_t k = 0; k < n; ++k) {
      ph = p.add(ph, p.mul(v[2 * k + 1], static_cast<Residue>(digits[k])));
      row = row * p.value() + p.add(static_cast<Residue>(digits[k]), v[2 * k]);
    }
    m(static_cast<Index>(row), static_cast<Index>(j)) += coeff * xi[ph];
  }
}

CMatrix matrix_power(const CMatrix& u, std::int64_t e) {
  CMatrix base = e < 0 ? CMatrix(u.adjoint()) : u;
  auto k = static_cast<std::uint64_t>(e < 0 ? -e : e);
  CMatrix acc = CMatrix::Identity(u.rows(), u.cols());
  while (k) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

CMatrix gate_matrix(spl::Gate g, const Prime& p) {
  const auto d = static_cast<Index>(p.value());
  const auto xi = roots_of_unity(p);
  switch (g) {
    case spl::Gate::X: {
      CMatrix m = CMatrix::Zero(d, d);
      for (Index j = 0; j < d; ++j) m((j + 1) % d, j) = 1;
      return m;
    }
    case spl::Gate::Z: {
      CMatrix m = CMatrix::Zero(d, d);
      for (Index j = 0; j < d; ++j) m(j, j) = xi[static_cast<std::size_t>(j)];
      return m;
    }
    case spl::Gate::F: {
      CMatrix m(d, d);
      const double s = 1.0 / std::sqrt(static_cast<double>(d));
      for (Index k = 0; k < d; ++k)
        for (Index j = 0; j < d; ++j) m(k, j) = s * xi[p.neg(p.mul(static_cast<Residue>(j), static_cast<Residue>(k)))];
      return m;
    }
    case spl::Gate::P: {
      CMatrix m = CMatrix::Zero(d, d);
      for (Index j = 0; j < d; ++j) {
        const auto r = static_cast<Residue>(j);
        m(j, j) = xi[p.neg(p.mul(p.half(), p.mul(r, r)))];
      }
      return m;
    }
    case spl::Gate::CX: {
      CMatrix m = CMatrix::Zero(d * d, d * d);
      for (Index a = 0; a < d; ++a)
        for (Index b = 0; b < d; ++b) m(a * d + (a + b) % d, a * d + b) = 1;
      return m;
    }
    case spl::Gate::SWAP: {
      CMatrix m = CMatrix::Zero(d * d, d * d);
      for (Index a = 0; a < d; ++a)
        for (Index b = 0; b < d; ++b) m(b * d + a, a * d + b) = 1;
      return m;
    }
    case spl::Gate::Cliff: break;
  }
  throw DomainError("gate_matrix: cliff literals need clifford_unitary");
}

// Unitary W with W pi(v) W^dagger = pi(s v): the average of pi(s b) M pi(b)^dagger.
CMatrix weil_unitary(const FMatrix& s, const Prime& p) {
  const std::size_t dim2 = s.rows();
  const std::size_t k = dim2 / 2;
  const auto d = static_cast<Index>(checked_power(p.value(), k, 729, "cliff unitary"));
  const std::size_t count = checked_power(p.value(), dim2, std::size_t{1} << 20, "cliff unitary");
  const auto xi = roots_of_unity(p);
  for (Index mi = 0; mi < d; ++mi) {
    CMatrix w = CMatrix::Zero(d, d);
    FVector b(dim2, 0);
    for (std::size_t t = 0; t < count; ++t) {
      std::size_t rest = t;
      for (std::size_t c = 0; c < dim2; ++c) {
        b[c] = static_cast<Residue>(rest % p.value());
        rest /= p.value();
      }
      CMatrix left = CMatrix::Zero(d, d), right = CMatrix::Zero(d, d);
      accumulate_pauli(left, p, xi, 0, s.apply(b), 1.0);
      accumulate_pauli(right, p, xi, 0, b, 1.0);
      w += left.col(mi) * right.col(0).adjoint();
    }
    const double norm = (w * w.adjoint())(0, 0).real();
    if (norm > 1e-9) return w / std::sqrt(norm);
  }
  throw DomainError("cliff unitary: no nonzero Weil average (matrix not symplectic?)");
}

}  // namespace

CMatrix pauli_matrix(const PauliLabel& g, OracleOptions options) {
  const std::size_t dim = checked_power(g.p.value(), g.qupits(), options.dim_cap, "pauli_matrix");
  CMatrix m = CMatrix::Zero(static_cast<Index>(dim), static_cast<Index>(dim));
  accumulate_pauli(m, g.p, roots_of_unity(g.p), g.phase, g.vector(), 1.0);
  return m;
}

CMatrix projector(const StabGroup& g, OracleOptions options) {
  const Prime& p = g.prime();
  const std::size_t dim = checked_power(p.value(), g.qupits(), options.dim_cap, "projector");
  const std::size_t m = g.generators().size();
  const std::size_t count = checked_power(p.value(), m, options.dim_cap * options.dim_cap, "projector group size");
  const auto xi = roots_of_unity(p);
  CMatrix out = CMatrix::Zero(static_cast<Index>(dim), static_cast<Index>(dim));
  std::vector<FVector> vecs;
  for (const auto& gen : g.generators()) vecs.push_back(gen.vector());
  const double w = 1.0 / static_cast<double>(count);
  FVector v(2 * g.qupits());
  for (std::size_t t = 0; t < count; ++t) {
    // Generators commute, so the product of powers has label sum c_i (a_i, v_i).
    std::fill(v.begin(), v.end(), 0);
    Residue phase = 0;
    std::size_t rest = t;
    for (std::size_t i = 0; i < m; ++i) {
      const auto c = static_cast<Residue>(rest % p.value());
      rest /= p.value();
      if (!c) continue;
      phase = p.add(phase, p.mul(c, g.generators()[i].phase));
      for (std::size_t k = 0; k < v.size(); ++k) v[k] = p.add(v[k], p.mul(c, vecs[i][k]));
    }
    accumulate_pauli(out, p, xi, phase, v, w);
  }
  return out;
}

CMatrix clifford_unitary(const spl::Clifford& c, const Prime& p) {
  if (c.gate != spl::Gate::Cliff) return matrix_power(gate_matrix(c.gate, p), c.power);
  spl::Clifford base = c;
  base.power = 1;
  const auto act = spl::clifford_action(base, p);
  CMatrix u = weil_unitary(act.s, p);
  const CMatrix shift = pauli_matrix(PauliLabel::from_vector(p, 0, act.t));
  return matrix_power(shift * u, c.power);
}

CMatrix ctrl_unitary(const PauliLabel& pauli) {
  const auto d = static_cast<Index>(pauli.p.value());
  const CMatrix pm = pauli_matrix(pauli);
  CMatrix out = CMatrix::Zero(d * d, d * d);
  CMatrix power = CMatrix::Identity(d, d);
  for (Index u = 0; u < d; ++u) {
    out.block(u * d, u * d, d, d) = power;
    power = pm * power;
  }
  return out;
}

std::size_t DenseChannel::in_dim() const {
  std::size_t n = 1;
  for (std::size_t i = 0; i < inputs.size(); ++i) n *= p.value();
  return n;
}

std::size_t DenseChannel::out_dim() const {
  std::size_t n = 1;
  for (std::size_t i = 0; i < outputs.size(); ++i) n *= p.value();
  return n;
}

namespace {

class Simulator {
 public:
  Simulator(const spl::Judgment& j, OracleOptions opt) : p_(j.p), opt_(opt) {
    for (const auto& [name, t] : j.input.entries()) {
      work_.push_back({name, t == spl::RegType::Pit ? Sort::C : Sort::Q});
      inputs_.push_back(work_.back());
    }
    refs_ = work_.size();
    require_dim(2 * refs_);
    const auto d_in = static_cast<Index>(layout().dim() / (refs_ ? Layout{p_.value(), refs_}.dim() : 1));
    Eigen::VectorXcd omega = Eigen::VectorXcd::Zero(d_in * d_in);
    for (Index i = 0; i < d_in; ++i) omega(i * d_in + i) = 1;
    rho_ = omega * omega.adjoint();
    for (std::size_t w = 0; w < work_.size(); ++w)
      if (work_[w].sort == Sort::C) decohere(rho_, layout(), w);
  }

  void step(const spl::Stmt& s, const spl::TypedEnv& before) {
    before_ = &before;
    std::visit([this](const auto& k) { apply(k); }, s.kind);
  }

  DenseChannel finish() {
    std::vector<std::size_t> order(work_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return work_[a].name < work_[b].name; });
    std::vector<ChannelWire> outputs;
    for (auto i : order) outputs.push_back(work_[i]);
    for (std::size_t r = 0; r < refs_; ++r) order.push_back(work_.size() + r);
    DenseChannel c{p_, inputs_, std::move(outputs), permute_wires(rho_, layout(), order)};
    return c;
  }

 private:
  Layout layout() const { return Layout{p_.value(), work_.size() + refs_}; }

  void require_dim(std::size_t wires) const { checked_power(p_.value(), wires, opt_.dim_cap, "oracle run"); }

  std::size_t wire(const std::string& name) const {
    for (std::size_t i = 0; i < work_.size(); ++i)
      if (work_[i].name == name) return i;
    throw TypeError("fby", "register '" + name + "' is not live in the simulator");
  }

  void add_wire(const std::string& name, Sort s) {
    require_dim(work_.size() + refs_ + 1);
    rho_ = insert_zero_wire(rho_, layout(), work_.size());
    work_.push_back({name, s});
  }

  // Applies |l> |-> |f(l)> on the given wires; f maps local digit tuples.
  template <typename F>
  void permutation(const std::vector<std::size_t>& targets, F f) {
    const std::size_t n = targets.size();
    std::size_t local = 1;
    for (std::size_t i = 0; i < n; ++i) local *= p_.value();
    std::vector<std::size_t> perm(local);
    std::vector<Residue> digits(n);
    for (std::size_t l = 0; l < local; ++l) {
      std::size_t rest = l;
      for (std::size_t k = n; k-- > 0;) {
        digits[k] = static_cast<Residue>(rest % p_.value());
        rest /= p_.value();
      }
      f(digits);
      std::size_t out = 0;
      for (auto dgt : digits) out = out * p_.value() + dgt;
      perm[l] = out;
    }
    apply_local_permutation(rho_, layout(), targets, perm);
  }

  void apply(const spl::Skip&) {}
  void apply(const spl::Init& s) { add_wire(s.reg, Sort::C); }
  void apply(const spl::QInit& s) { add_wire(s.reg, Sort::Q); }
  void apply(const spl::Meas& s) {
    const auto w = wire(s.reg);
    decohere(rho_, layout(), w);
    work_[w].sort = Sort::C;
  }
  void apply(const spl::Disc& s) {
    const auto w = wire(s.reg);
    rho_ = partial_trace(rho_, layout(), w);
    work_.erase(work_.begin() + static_cast<std::ptrdiff_t>(w));
  }
  void apply(const spl::Affine& a) {
    for (const auto& o : a.outputs) add_wire(o, Sort::C);
    std::vector<std::size_t> targets;
    for (const auto& r : a.inputs) targets.push_back(wire(r));
    for (const auto& r : a.outputs) targets.push_back(wire(r));
    const std::size_t m = a.inputs.size();
    permutation(targets, [&](std::vector<Residue>& dg) {
      for (std::size_t i = 0; i < a.outputs.size(); ++i) {
        Residue acc = p_.reduce(a.offset[i]);
        for (std::size_t j = 0; j < m; ++j) acc = p_.add(acc, p_.mul(p_.reduce(a.matrix[i][j]), dg[j]));
        dg[m + i] = p_.add(dg[m + i], acc);
      }
    });
  }
  void apply(const spl::Clifford& c) {
    std::vector<std::size_t> targets;
    for (const auto& r : c.regs) targets.push_back(wire(r));
    apply_local_unitary(rho_, layout(), targets, clifford_unitary(c, p_));
  }
  void apply(const spl::Ctrl& c) {
    const std::vector<std::size_t> targets{wire(c.control), wire(c.target)};
    apply_local_unitary(rho_, layout(), targets, ctrl_unitary(spl::ctrl_pauli(c, p_)));
  }
  void apply(const spl::Mul& m) {
    add_wire(m.out, Sort::C);
    const std::vector<std::size_t> targets{wire(m.left), wire(m.right), wire(m.out)};
    permutation(targets, [&](std::vector<Residue>& dg) { dg[2] = p_.add(dg[2], p_.mul(dg[0], dg[1])); });
  }

  Prime p_;
  OracleOptions opt_;
  std::vector<ChannelWire> work_;
  std::vector<ChannelWire> inputs_;
  std::size_t refs_ = 0;
  CMatrix rho_;
  const spl::TypedEnv* before_ = nullptr;
};

void require_same_signature(const DenseChannel& a, const DenseChannel& b) {
  require_same_modulus(a.p, b.p, "channel comparison");
  auto sorts = [](const std::vector<ChannelWire>& w) {
    std::vector<Sort> s;
    for (const auto& x : w) s.push_back(x.sort);
    return s;
  };
  if (sorts(a.inputs) != sorts(b.inputs) || sorts(a.outputs) != sorts(b.outputs))
    throw ShapeError("channel comparison: wire signatures differ");
}

}  // namespace

DenseChannel run(const spl::Judgment& j, OracleOptions options) {
  Simulator sim(j, options);
  spl::TypedEnv env = j.input;
  for (std::size_t i = 0; i < j.program.body.size(); ++i) {
    sim.step(j.program.body[i], env);
    env = j.trace[i];
  }
  return sim.finish();
}

DenseChannel atomic_channel(const spl::Stmt& s, const spl::TypedEnv& gamma, const Prime& p, OracleOptions options) {
  spl::Program prog;
  prog.inputs = gamma.entries();
  prog.body.push_back(s);
  prog.nl = std::holds_alternative<spl::Mul>(s.kind);
  return run(spl::typecheck(prog, gamma, p), options);
}

double choi_distance(const DenseChannel& a, const DenseChannel& b) {
  require_same_signature(a, b);
  if (a.choi.rows() != b.choi.rows()) throw ShapeError("channel comparison: Choi dimensions differ");
  return (a.choi - b.choi).cwiseAbs().maxCoeff();
}

bool channels_equal(const DenseChannel& a, const DenseChannel& b, double tol) { return choi_distance(a, b) <= tol; }

bool is_cptp(const DenseChannel& c, double tol) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(c.choi, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -tol) return false;
  const auto d_in = static_cast<Index>(c.in_dim());
  const auto d_out = static_cast<Index>(c.out_dim());
  CMatrix tr = CMatrix::Zero(d_in, d_in);
  for (Index o = 0; o < d_out; ++o) tr += c.choi.block(o * d_in, o * d_in, d_in, d_in);
  return (tr - CMatrix::Identity(d_in, d_in)).cwiseAbs().maxCoeff() <= tol;
}

namespace {

std::size_t psd_rank(const CMatrix& m, double tol) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(m, Eigen::EigenvaluesOnly);
  std::size_t r = 0;
  for (Index i = 0; i < es.eigenvalues().size(); ++i)
    if (es.eigenvalues()(i) > tol) ++r;
  return r;
}

}  // namespace

bool same_support(const DenseChannel& a, const DenseChannel& b, double tol) {
  require_same_signature(a, b);
  // For PSD matrices, equal ranges iff rank(A) = rank(B) = rank(A + B).
  const auto ra = psd_rank(a.choi, tol);
  const auto rb = psd_rank(b.choi, tol);
  return ra == rb && psd_rank(a.choi + b.choi, tol) == ra;
}

nlohmann::ordered_json to_json(const DenseChannel& c) {
  nlohmann::ordered_json j;
  j["p"] = c.p.value();
  auto wires = [](const std::vector<ChannelWire>& ws) {
    auto a = nlohmann::ordered_json::array();
    for (const auto& w : ws) a.push_back({{"name", w.name}, {"sort", to_string(w.sort)}});
    return a;
  };
  j["inputs"] = wires(c.inputs);
  j["outputs"] = wires(c.outputs);
  j["dim"] = {c.out_dim(), c.in_dim()};
  auto clean = [](double x) {
    const double r = std::round(x * 1e12) / 1e12;
    return r == 0.0 ? 0.0 : r;
  };
  auto re = nlohmann::ordered_json::array(), im = nlohmann::ordered_json::array();
  for (Index r = 0; r < c.choi.rows(); ++r) {
    auto rr = nlohmann::ordered_json::array(), ii = nlohmann::ordered_json::array();
    for (Index col = 0; col < c.choi.cols(); ++col) {
      rr.push_back(clean(c.choi(r, col).real()));
      ii.push_back(clean(c.choi(r, col).imag()));
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ii));
  }
  j["re"] = std::move(re);
  j["im"] = std::move(im);
  return j;
}

}  // namespace stabrel::oracle
