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

#include "stabrel/oracle/kernels.hpp"

#include <cstdint>

#include "stabrel/error.hpp"

namespace stabrel::oracle {

std::size_t Layout::dim() const {
  std::size_t n = 1;
  for (std::size_t i = 0; i < wires; ++i) n *= d;
  return n;
}

std::size_t Layout::stride(std::size_t w) const {
  std::size_t s = 1;
  for (std::size_t i = w + 1; i < wires; ++i) s *= d;
  return s;
}

namespace {

using Index = std::ptrdiff_t;

struct LocalIndex {
  std::vector<std::size_t> offsets;  // local index -> global offset
  std::vector<std::size_t> bases;    // global indices whose target digits are zero
};

LocalIndex local_index(const Layout& l, std::span<const std::size_t> targets) {
  std::vector<bool> seen(l.wires, false);
  for (auto t : targets) {
    if (t >= l.wires || seen[t]) throw ShapeError("kernel: target wires out of range or repeated");
    seen[t] = true;
  }
  LocalIndex li;
  std::size_t local_dim = 1;
  for (std::size_t k = 0; k < targets.size(); ++k) local_dim *= l.d;
  li.offsets.resize(local_dim);
  for (std::size_t loc = 0; loc < local_dim; ++loc) {
    std::size_t rest = loc, off = 0;
    for (std::size_t m = targets.size(); m-- > 0;) {
      off += (rest % l.d) * l.stride(targets[m]);
      rest /= l.d;
    }
    li.offsets[loc] = off;
  }
  const std::size_t dim = l.dim();
  for (std::size_t i = 0; i < dim; ++i) {
    bool zero = true;
    for (auto t : targets)
      if (l.digit(i, t)) {
        zero = false;
        break;
      }
    if (zero) li.bases.push_back(i);
  }
  return li;
}

void require_square(const CMatrix& rho, const Layout& l) {
  const auto dim = static_cast<Index>(l.dim());
  if (rho.rows() != dim || rho.cols() != dim) throw ShapeError("kernel: matrix does not match wire layout");
}

void left_apply(CMatrix& rho, const LocalIndex& li, const CMatrix& u) {
  const auto local = static_cast<Index>(li.offsets.size());
  const auto cols = static_cast<Index>(rho.cols());
#pragma omp parallel
  {
    Eigen::VectorXcd in(local), out(local);
#pragma omp for schedule(static)
    for (Index j = 0; j < cols; ++j) {
      for (std::size_t b : li.bases) {
        for (Index k = 0; k < local; ++k) in(k) = rho(static_cast<Index>(b + li.offsets[k]), j);
        out.noalias() = u * in;
        for (Index k = 0; k < local; ++k) rho(static_cast<Index>(b + li.offsets[k]), j) = out(k);
      }
    }
  }
}

}  // namespace

void apply_local_unitary(CMatrix& rho, const Layout& l, std::span<const std::size_t> targets, const CMatrix& u) {
  require_square(rho, l);
  const auto li = local_index(l, targets);
  const auto local = static_cast<Index>(li.offsets.size());
  if (u.rows() != local || u.cols() != local) throw ShapeError("apply_local_unitary: operator has wrong size");
  // U rho U^dagger = (U (U rho)^dagger)^dagger
  left_apply(rho, li, u);
  rho.adjointInPlace();
  left_apply(rho, li, u);
  rho.adjointInPlace();
}

void apply_local_permutation(CMatrix& rho, const Layout& l, std::span<const std::size_t> targets,
                             std::span<const std::size_t> perm) {
  require_square(rho, l);
  const auto li = local_index(l, targets);
  if (perm.size() != li.offsets.size()) throw ShapeError("apply_local_permutation: permutation has wrong size");
  const std::size_t dim = l.dim();
  std::vector<std::size_t> map(dim);
  for (std::size_t b : li.bases)
    for (std::size_t k = 0; k < perm.size(); ++k) map[b + li.offsets[k]] = b + li.offsets[perm[k]];
  CMatrix out(rho.rows(), rho.cols());
  const auto n = static_cast<Index>(dim);
#pragma omp parallel for schedule(static)
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < n; ++i) out(static_cast<Index>(map[i]), static_cast<Index>(map[j])) = rho(i, j);
  rho = std::move(out);
}

void decohere(CMatrix& rho, const Layout& l, std::size_t wire) {
  require_square(rho, l);
  if (wire >= l.wires) throw ShapeError("decohere: wire out of range");
  const auto n = static_cast<Index>(l.dim());
#pragma omp parallel for schedule(static)
  for (Index j = 0; j < n; ++j) {
    const std::size_t dj = l.digit(static_cast<std::size_t>(j), wire);
    for (Index i = 0; i < n; ++i)
      if (l.digit(static_cast<std::size_t>(i), wire) != dj) rho(i, j) = 0;
  }
}

CMatrix partial_trace(const CMatrix& rho, const Layout& l, std::size_t wire) {
  require_square(rho, l);
  if (wire >= l.wires) throw ShapeError("partial_trace: wire out of range");
  const std::size_t s = l.stride(wire);
  const auto n = static_cast<Index>(l.dim() / l.d);
  CMatrix out = CMatrix::Zero(n, n);
  auto lift = [&](std::size_t i, std::size_t k) { return (i / s) * s * l.d + k * s + i % s; };
#pragma omp parallel for schedule(static)
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < n; ++i) {
      Complex acc = 0;
      for (std::size_t k = 0; k < l.d; ++k)
        acc += rho(static_cast<Index>(lift(i, k)), static_cast<Index>(lift(j, k)));
      out(i, j) = acc;
    }
  return out;
}

CMatrix insert_zero_wire(const CMatrix& rho, const Layout& l, std::size_t position) {
  require_square(rho, l);
  if (position > l.wires) throw ShapeError("insert_zero_wire: position out of range");
  const Layout big{l.d, l.wires + 1};
  const std::size_t s = big.stride(position);
  const auto n = static_cast<Index>(l.dim());
  const auto nb = static_cast<Index>(big.dim());
  CMatrix out = CMatrix::Zero(nb, nb);
  auto lift = [&](std::size_t i) { return static_cast<Index>((i / s) * s * l.d + i % s); };
#pragma omp parallel for schedule(static)
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < n; ++i) out(lift(i), lift(j)) = rho(i, j);
  return out;
}

CMatrix permute_wires(const CMatrix& rho, const Layout& l, std::span<const std::size_t> order) {
  require_square(rho, l);
  if (order.size() != l.wires) throw ShapeError("permute_wires: order has wrong length");
  std::vector<bool> seen(l.wires, false);
  for (auto o : order) {
    if (o >= l.wires || seen[o]) throw ShapeError("permute_wires: not a permutation");
    seen[o] = true;
  }
  const std::size_t dim = l.dim();
  std::vector<std::size_t> map(dim);
  for (std::size_t a = 0; a < dim; ++a) {
    std::size_t old = 0;
    for (std::size_t i = 0; i < l.wires; ++i) old += l.digit(a, i) * l.stride(order[i]);
    map[a] = old;
  }
  const auto n = static_cast<Index>(dim);
  CMatrix out(n, n);
#pragma omp parallel for schedule(static)
  for (Index b = 0; b < n; ++b)
    for (Index a = 0; a < n; ++a) out(a, b) = rho(static_cast<Index>(map[a]), static_cast<Index>(map[b]));
  return out;
}

}  // namespace stabrel::oracle
