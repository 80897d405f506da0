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

// Reference kernels: every operation is written as an explicit operator product.
#include "stabrel/error.hpp"
#include "stabrel/oracle/kernels.hpp"

namespace stabrel::oracle::serial {

namespace {

using Index = Eigen::Index;

std::size_t local_of(const Layout& l, std::size_t i, std::span<const std::size_t> targets) {
  std::size_t loc = 0;
  for (auto t : targets) loc = loc * l.d + l.digit(i, t);
  return loc;
}

// Index i with its target digits replaced by those of local index loc.
std::size_t with_local(const Layout& l, std::size_t i, std::span<const std::size_t> targets, std::size_t loc) {
  for (std::size_t m = targets.size(); m-- > 0;) {
    const std::size_t t = targets[m];
    i = i - l.digit(i, t) * l.stride(t) + (loc % l.d) * l.stride(t);
    loc /= l.d;
  }
  return i;
}

void check_targets(const Layout& l, std::span<const std::size_t> targets) {
  std::vector<bool> seen(l.wires, false);
  for (auto t : targets) {
    if (t >= l.wires || seen[t]) throw ShapeError("kernel: target wires out of range or repeated");
    seen[t] = true;
  }
}

CMatrix full_operator(const Layout& l, std::span<const std::size_t> targets, const CMatrix& u) {
  const std::size_t dim = l.dim();
  CMatrix full = CMatrix::Zero(static_cast<Index>(dim), static_cast<Index>(dim));
  for (std::size_t i = 0; i < dim; ++i) {
    const std::size_t li = local_of(l, i, targets);
    for (Index lo = 0; lo < u.rows(); ++lo) {
      const std::size_t out = with_local(l, i, targets, static_cast<std::size_t>(lo));
      full(static_cast<Index>(out), static_cast<Index>(i)) = u(lo, static_cast<Index>(li));
    }
  }
  return full;
}

}  // namespace

void apply_local_unitary(CMatrix& rho, const Layout& l, std::span<const std::size_t> targets, const CMatrix& u) {
  check_targets(l, targets);
  const CMatrix full = full_operator(l, targets, u);
  rho = full * rho * full.adjoint();
}

void apply_local_permutation(CMatrix& rho, const Layout& l, std::span<const std::size_t> targets,
                             std::span<const std::size_t> perm) {
  check_targets(l, targets);
  const auto n = static_cast<Index>(perm.size());
  CMatrix local = CMatrix::Zero(n, n);
  for (Index k = 0; k < n; ++k) local(static_cast<Index>(perm[static_cast<std::size_t>(k)]), k) = 1;
  const CMatrix full = full_operator(l, targets, local);
  rho = full * rho * full.transpose();
}

void decohere(CMatrix& rho, const Layout& l, std::size_t wire) {
  const auto dim = static_cast<Index>(l.dim());
  CMatrix out = CMatrix::Zero(dim, dim);
  for (std::size_t k = 0; k < l.d; ++k) {
    CMatrix proj = CMatrix::Zero(dim, dim);
    for (Index i = 0; i < dim; ++i)
      if (l.digit(static_cast<std::size_t>(i), wire) == k) proj(i, i) = 1;
    out += proj * rho * proj;
  }
  rho = std::move(out);
}

CMatrix partial_trace(const CMatrix& rho, const Layout& l, std::size_t wire) {
  const Layout small{l.d, l.wires - 1};
  const auto dim = static_cast<Index>(l.dim());
  const auto sdim = static_cast<Index>(small.dim());
  CMatrix out = CMatrix::Zero(sdim, sdim);
  for (std::size_t k = 0; k < l.d; ++k) {
    // V_k : small -> big, |i> |-> |i with digit k inserted at `wire`>
    CMatrix v = CMatrix::Zero(dim, sdim);
    for (Index big = 0; big < dim; ++big) {
      const auto b = static_cast<std::size_t>(big);
      if (l.digit(b, wire) != k) continue;
      std::size_t s = 0;
      for (std::size_t w = 0; w < l.wires; ++w)
        if (w != wire) s = s * l.d + l.digit(b, w);
      v(big, static_cast<Index>(s)) = 1;
    }
    out += v.adjoint() * rho * v;
  }
  return out;
}

CMatrix insert_zero_wire(const CMatrix& rho, const Layout& l, std::size_t position) {
  const Layout big{l.d, l.wires + 1};
  const auto dim = static_cast<Index>(l.dim());
  const auto bdim = static_cast<Index>(big.dim());
  CMatrix v = CMatrix::Zero(bdim, dim);
  for (Index b = 0; b < bdim; ++b) {
    const auto bi = static_cast<std::size_t>(b);
    if (big.digit(bi, position) != 0) continue;
    std::size_t s = 0;
    for (std::size_t w = 0; w < big.wires; ++w)
      if (w != position) s = s * l.d + big.digit(bi, w);
    v(b, static_cast<Index>(s)) = 1;
  }
  return v * rho * v.adjoint();
}

CMatrix permute_wires(const CMatrix& rho, const Layout& l, std::span<const std::size_t> order) {
  const auto dim = static_cast<Index>(l.dim());
  CMatrix perm = CMatrix::Zero(dim, dim);
  for (Index old = 0; old < dim; ++old) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < l.wires; ++i) idx = idx * l.d + l.digit(static_cast<std::size_t>(old), order[i]);
    perm(static_cast<Index>(idx), old) = 1;
  }
  return perm * rho * perm.transpose();
}

}  // namespace stabrel::oracle::serial
