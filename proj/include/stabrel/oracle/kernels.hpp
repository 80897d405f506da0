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

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace stabrel::oracle {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;

/// `wires` subsystems of dimension d each; wire 0 is the most significant digit.
struct Layout {
  std::size_t d;
  std::size_t wires;

  std::size_t dim() const;
  /// Index stride of wire w.
  std::size_t stride(std::size_t w) const;
  std::size_t digit(std::size_t index, std::size_t w) const { return index / stride(w) % d; }
};

// Each kernel exists twice: the OpenMP version below and a plain reference in
// namespace serial that is used to test it.

/// rho <- U rho U^dagger with U acting on `targets` (in that order).
void apply_local_unitary(CMatrix& rho, const Layout& l, std::span<const std::size_t> targets, const CMatrix& u);
/// rho <- P rho P^T where P|i> = |perm[i]> on the local space of `targets`.
void apply_local_permutation(CMatrix& rho, const Layout& l, std::span<const std::size_t> targets,
                             std::span<const std::size_t> perm);
/// Zeroes coherences between different values of `wire`.
void decohere(CMatrix& rho, const Layout& l, std::size_t wire);
CMatrix partial_trace(const CMatrix& rho, const Layout& l, std::size_t wire);
/// Adds a wire in state |0><0| at `position` of the enlarged layout.
CMatrix insert_zero_wire(const CMatrix& rho, const Layout& l, std::size_t position);
/// New wire i is old wire order[i].
CMatrix permute_wires(const CMatrix& rho, const Layout& l, std::span<const std::size_t> order);

namespace serial {
void apply_local_unitary(CMatrix& rho, const Layout& l, std::span<const std::size_t> targets, const CMatrix& u);
void apply_local_permutation(CMatrix& rho, const Layout& l, std::span<const std::size_t> targets,
                             std::span<const std::size_t> perm);
void decohere(CMatrix& rho, const Layout& l, std::size_t wire);
CMatrix partial_trace(const CMatrix& rho, const Layout& l, std::size_t wire);
CMatrix insert_zero_wire(const CMatrix& rho, const Layout& l, std::size_t position);
CMatrix permute_wires(const CMatrix& rho, const Layout& l, std::span<const std::size_t> order);
}  // namespace serial

}  // namespace stabrel::oracle
