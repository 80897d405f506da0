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
// Random coisotropic subspaces of sp(n), built from a random isotropic set.

#include <random>

#include "pointset.hpp"
#include "stabrel/affrel.hpp"
#include "stabrel/fieldlin.hpp"

namespace pointset {

/// Up to `max_isotropic` random independent, pairwise omega-orthogonal vectors.
template <typename Rng>
std::vector<FVector> random_isotropic(Rng& rng, const Prime& p, std::size_t n, std::size_t max_isotropic) {
  std::uniform_int_distribution<Residue> val(0, p.value() - 1);
  const std::vector<int> signs(n, 1);
  std::vector<FVector> out;
  for (int tries = 0; out.size() < max_isotropic && tries < 200; ++tries) {
    FVector v(2 * n);
    for (auto& x : v) x = val(rng);
    bool ok = !stabrel::is_zero(v);
    for (const auto& s : out) ok = ok && omega(p, signs, s, v) == 0;
    if (!ok) continue;
    auto trial = out;
    trial.push_back(v);
    if (stabrel::rank(FMatrix::from_vectors(p, 2 * n, trial)) == trial.size()) out = trial;
  }
  return out;
}

/// {v : omega(s_i, v) = 0} for a random isotropic family s, shifted by a random offset.
template <typename Rng>
stabrel::AffineSubspace random_coisotropic(Rng& rng, const Prime& p, std::size_t n) {
  std::uniform_int_distribution<std::size_t> count(0, n);
  std::uniform_int_distribution<Residue> val(0, p.value() - 1);
  const auto iso = random_isotropic(rng, p, n, count(rng));
  FMatrix rows(p, 0, 2 * n);
  for (const auto& s : iso) {
    FVector r(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      r[2 * i] = p.neg(s[2 * i + 1]);
      r[2 * i + 1] = s[2 * i];
    }
    rows.append_row(r);
  }
  const FMatrix lin = rows.rows() ? stabrel::kernel(rows) : FMatrix::identity(p, 2 * n);
  FVector off(2 * n);
  for (auto& x : off) x = val(rng);
  return stabrel::AffineSubspace::canonicalize(lin, off);
}

}  // namespace pointset
