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

#include "stabrel/affrel.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "stabrel/error.hpp"

namespace stabrel {

AffineSubspace AffineSubspace::empty_set(Prime p, std::size_t ambient_dim) {
  return AffineSubspace(p, ambient_dim, true, FMatrix(p, 0, ambient_dim), FVector{}, {});
}

AffineSubspace AffineSubspace::point(Prime p, FVector v) {
  for (auto& x : v) x %= p.value();
  const std::size_t d = v.size();
  return AffineSubspace(p, d, false, FMatrix(p, 0, d), std::move(v), {});
}

AffineSubspace AffineSubspace::full(Prime p, std::size_t ambient_dim) {
  std::vector<std::size_t> piv(ambient_dim);
  std::iota(piv.begin(), piv.end(), 0);
  return AffineSubspace(p, ambient_dim, false, FMatrix::identity(p, ambient_dim), FVector(ambient_dim, 0),
                        std::move(piv));
}

AffineSubspace AffineSubspace::linear_span(const FMatrix& generators) {
  FVector zero(generators.cols(), 0);
  return canonicalize(generators, zero);
}

AffineSubspace AffineSubspace::canonicalize(const FMatrix& generators, std::span<const Residue> offset) {
  if (generators.cols() != offset.size()) {
    throw ShapeError("canonicalize: generators have " + std::to_string(generators.cols()) +
                     " columns but offset has length " + std::to_string(offset.size()));
  }
  const Prime& p = generators.prime();
  FMatrix basis = generators;
  auto pivots = rref_in_place(basis);
  basis.remove_rows_from(pivots.size());
  FVector off(offset.begin(), offset.end());
  const std::uint64_t pv = p.value();
  for (auto& x : off) x %= p.value();
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    const Residue f = off[pivots[i]];
    if (!f) continue;
    const std::uint64_t nf = pv - f;
    auto row = basis.row(i);
    for (std::size_t c = 0; c < off.size(); ++c) {
      if (row[c]) off[c] = static_cast<Residue>((off[c] + nf * row[c]) % pv);
    }
  }
  const std::size_t d = generators.cols();
  return AffineSubspace(p, d, false, std::move(basis), std::move(off), std::move(pivots));
}

namespace {

// Reduces v against an RREF basis in place; v is in the row space iff the result is zero.
void reduce_against(const FMatrix& basis, const std::vector<std::size_t>& pivots, FVector& v) {
  const std::uint64_t pv = basis.prime().value();
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    const Residue f = v[pivots[i]];
    if (!f) continue;
    const std::uint64_t nf = pv - f;
    auto row = basis.row(i);
    for (std::size_t c = 0; c < v.size(); ++c) {
      if (row[c]) v[c] = static_cast<Residue>((v[c] + nf * row[c]) % pv);
    }
  }
}

void require_compatible(const AffineSubspace& a, const AffineSubspace& b, const char* where) {
  require_same_modulus(a.prime(), b.prime(), where);
  if (a.ambient_dim() != b.ambient_dim()) {
    throw ShapeError(std::string(where) + ": ambient dimensions " + std::to_string(a.ambient_dim()) + " and " +
                     std::to_string(b.ambient_dim()) + " differ");
  }
}

// Solutions of [A | -B] (lambda; mu) = rhs expressed through the generators they induce.
//
// `left` rows are combined with lambda and `right` rows with mu; the output point is
// (offset_left + lambda*left, offset_right + mu*right) concatenated. `eq_left` and
// `eq_right` give, per equation, the column read from each row set.
struct PairSystem {
  const FMatrix* left;
  const FMatrix* right;
  std::vector<std::size_t> eq_left;   // column of `left` used by equation t
  std::vector<std::size_t> eq_right;  // column of `right` used by equation t (npos: unused)
  FVector rhs;
};

constexpr std::size_t kUnused = std::numeric_limits<std::size_t>::max();

struct PairSolution {
  FVector lambda0, mu0;
  // Kernel vectors as (lambda, mu) pairs.
  std::vector<std::pair<FVector, FVector>> kernel;
};

std::optional<PairSolution> solve_pair(const PairSystem& sys) {
  const Prime& p = sys.left->prime();
  const std::size_t kl = sys.left->rows();
  const std::size_t kr = sys.right ? sys.right->rows() : 0;
  const std::size_t nvars = kl + kr;
  const std::size_t neq = sys.eq_left.size();
  FMatrix aug(p, neq, nvars + 1);
  for (std::size_t t = 0; t < neq; ++t) {
    for (std::size_t i = 0; i < kl; ++i) aug(t, i) = (*sys.left)(i, sys.eq_left[t]);
    if (sys.right && sys.eq_right[t] != kUnused) {
      for (std::size_t l = 0; l < kr; ++l) aug(t, kl + l) = p.neg((*sys.right)(l, sys.eq_right[t]));
    }
    aug(t, nvars) = sys.rhs[t];
  }
  auto pivots = rref_in_place(aug);
  if (!pivots.empty() && pivots.back() == nvars) return std::nullopt;
  PairSolution sol;
  FVector x(nvars, 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, nvars);
  sol.lambda0.assign(x.begin(), x.begin() + kl);
  sol.mu0.assign(x.begin() + kl, x.end());
  std::vector<bool> is_pivot(nvars, false);
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t f = 0; f < nvars; ++f) {
    if (is_pivot[f]) continue;
    FVector v(nvars, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = p.neg(aug(i, f));
    sol.kernel.emplace_back(FVector(v.begin(), v.begin() + kl), FVector(v.begin() + kl, v.end()));
  }
  return sol;
}

// out[j] += sum_i coeff[i] * m(i, cols[j])
void accumulate(const Prime& p, const FMatrix& m, std::span<const Residue> coeff, std::span<const std::size_t> cols,
                std::span<Residue> out) {
  const std::uint64_t pv = p.value();
  for (std::size_t i = 0; i < coeff.size(); ++i) {
    const std::uint64_t c = coeff[i];
    if (!c) continue;
    auto row = m.row(i);
    for (std::size_t j = 0; j < cols.size(); ++j) {
      const Residue v = row[cols[j]];
      if (v) out[j] = static_cast<Residue>((out[j] + c * v) % pv);
    }
  }
}

}  // namespace

bool AffineSubspace::contains(std::span<const Residue> v) const {
  if (v.size() != dim_) throw ShapeError("contains: point has wrong length");
  if (empty_) return false;
  FVector d(v.size());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = p_.sub(v[i] % p_.value(), offset_[i]);
  reduce_against(basis_, pivots_, d);
  return is_zero(d);
}

bool AffineSubspace::linear_contains(std::span<const Residue> v) const {
  if (v.size() != dim_) throw ShapeError("linear_contains: vector has wrong length");
  if (empty_) return false;
  FVector d(v.begin(), v.end());
  for (auto& x : d) x %= p_.value();
  reduce_against(basis_, pivots_, d);
  return is_zero(d);
}

AffineSubspace AffineSubspace::linear_part() const {
  if (empty_) return *this;
  return AffineSubspace(p_, dim_, false, basis_, FVector(dim_, 0), pivots_);
}

AffineSubspace compose_window(const AffineSubspace& r, std::size_t prefix, std::span<const std::size_t> window,
                              const AffineSubspace& s) {
  require_same_modulus(r.prime(), s.prime(), "compose");
  const Prime& p = r.prime();
  if (prefix > r.ambient_dim()) throw ShapeError("compose: prefix exceeds ambient dimension");
  const std::size_t b = r.ambient_dim() - prefix;
  const std::size_t j = window.size();
  if (j > s.ambient_dim()) throw ShapeError("compose: window wider than the right operand");
  std::vector<bool> in_window(b, false);
  for (auto w : window) {
    if (w >= b || in_window[w]) throw ShapeError("compose: window index out of range or repeated");
    in_window[w] = true;
  }
  const std::size_t c = s.ambient_dim() - j;

  std::vector<std::size_t> keep_r;
  for (std::size_t i = 0; i < prefix; ++i) keep_r.push_back(i);
  for (std::size_t i = 0; i < b; ++i)
    if (!in_window[i]) keep_r.push_back(prefix + i);
  std::vector<std::size_t> keep_s(c);
  std::iota(keep_s.begin(), keep_s.end(), j);
  const std::size_t out_dim = keep_r.size() + c;

  if (r.is_empty() || s.is_empty()) return AffineSubspace::empty_set(p, out_dim);

  PairSystem sys{&r.basis(), &s.basis(), {}, {}, {}};
  for (std::size_t t = 0; t < j; ++t) {
    sys.eq_left.push_back(prefix + window[t]);
    sys.eq_right.push_back(t);
    sys.rhs.push_back(p.sub(s.offset()[t], r.offset()[prefix + window[t]]));
  }
  auto sol = solve_pair(sys);
  if (!sol) return AffineSubspace::empty_set(p, out_dim);

  FVector offset(out_dim, 0);
  for (std::size_t i = 0; i < keep_r.size(); ++i) offset[i] = r.offset()[keep_r[i]];
  for (std::size_t i = 0; i < c; ++i) offset[keep_r.size() + i] = s.offset()[keep_s[i]];
  std::span<Residue> off_r(offset.data(), keep_r.size());
  std::span<Residue> off_s(offset.data() + keep_r.size(), c);
  accumulate(p, r.basis(), sol->lambda0, keep_r, off_r);
  accumulate(p, s.basis(), sol->mu0, keep_s, off_s);

  FMatrix gens(p, sol->kernel.size(), out_dim);
  for (std::size_t k = 0; k < sol->kernel.size(); ++k) {
    auto row = gens.row(k);
    accumulate(p, r.basis(), sol->kernel[k].first, keep_r, row.subspan(0, keep_r.size()));
    accumulate(p, s.basis(), sol->kernel[k].second, keep_s, row.subspan(keep_r.size(), c));
  }
  return AffineSubspace::canonicalize(gens, offset);
}

AffineSubspace compose(const AffineSubspace& r, const AffineSubspace& s, std::size_t dim_a) {
  if (dim_a > r.ambient_dim()) throw ShapeError("compose: domain dimension exceeds ambient dimension");
  const std::size_t dim_b = r.ambient_dim() - dim_a;
  if (dim_b > s.ambient_dim()) {
    throw ShapeError("compose: middle dimension " + std::to_string(dim_b) + " exceeds right operand dimension " +
                     std::to_string(s.ambient_dim()));
  }
  std::vector<std::size_t> window(dim_b);
  std::iota(window.begin(), window.end(), 0);
  return compose_window(r, dim_a, window, s);
}

AffineSubspace permute(const AffineSubspace& r, std::span<const std::size_t> perm) {
  if (perm.size() != r.ambient_dim()) throw ShapeError("permute: permutation has wrong length");
  std::vector<bool> seen(perm.size(), false);
  for (auto i : perm) {
    if (i >= perm.size() || seen[i]) throw ShapeError("permute: not a permutation");
    seen[i] = true;
  }
  if (r.is_empty()) return r;
  FMatrix gens = r.basis().columns(perm);
  FVector off(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) off[i] = r.offset()[perm[i]];
  return AffineSubspace::canonicalize(gens, off);
}

AffineSubspace converse(const AffineSubspace& r, std::size_t dim_a) {
  if (dim_a > r.ambient_dim()) throw ShapeError("converse: split point exceeds ambient dimension");
  const std::size_t d = r.ambient_dim();
  std::vector<std::size_t> perm;
  for (std::size_t i = dim_a; i < d; ++i) perm.push_back(i);
  for (std::size_t i = 0; i < dim_a; ++i) perm.push_back(i);
  return permute(r, perm);
}

AffineSubspace direct_sum(const AffineSubspace& r, const AffineSubspace& s) {
  require_same_modulus(r.prime(), s.prime(), "direct_sum");
  const Prime& p = r.prime();
  const std::size_t dr = r.ambient_dim(), ds = s.ambient_dim();
  if (r.is_empty() || s.is_empty()) return AffineSubspace::empty_set(p, dr + ds);
  FMatrix gens(p, r.dimension() + s.dimension(), dr + ds);
  for (std::size_t i = 0; i < r.dimension(); ++i)
    for (std::size_t c = 0; c < dr; ++c) gens(i, c) = r.basis()(i, c);
  for (std::size_t i = 0; i < s.dimension(); ++i)
    for (std::size_t c = 0; c < ds; ++c) gens(r.dimension() + i, dr + c) = s.basis()(i, c);
  FVector off = r.offset();
  off.insert(off.end(), s.offset().begin(), s.offset().end());
  return AffineSubspace::canonicalize(gens, off);
}

AffineSubspace intersect(const AffineSubspace& r, const AffineSubspace& s) {
  require_compatible(r, s, "intersect");
  const Prime& p = r.prime();
  const std::size_t d = r.ambient_dim();
  if (r.is_empty() || s.is_empty()) return AffineSubspace::empty_set(p, d);
  PairSystem sys{&r.basis(), &s.basis(), {}, {}, {}};
  for (std::size_t t = 0; t < d; ++t) {
    sys.eq_left.push_back(t);
    sys.eq_right.push_back(t);
    sys.rhs.push_back(p.sub(s.offset()[t], r.offset()[t]));
  }
  auto sol = solve_pair(sys);
  if (!sol) return AffineSubspace::empty_set(p, d);
  std::vector<std::size_t> all(d);
  std::iota(all.begin(), all.end(), 0);
  FVector off = r.offset();
  accumulate(p, r.basis(), sol->lambda0, all, off);
  FMatrix gens(p, sol->kernel.size(), d);
  for (std::size_t k = 0; k < sol->kernel.size(); ++k) accumulate(p, r.basis(), sol->kernel[k].first, all, gens.row(k));
  return AffineSubspace::canonicalize(gens, off);
}

AffineSubspace project(const AffineSubspace& r, std::span<const std::size_t> coords) {
  for (auto c : coords)
    if (c >= r.ambient_dim()) throw ShapeError("project: coordinate out of range");
  if (r.is_empty()) return AffineSubspace::empty_set(r.prime(), coords.size());
  FMatrix gens = r.basis().columns(coords);
  FVector off(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) off[i] = r.offset()[coords[i]];
  return AffineSubspace::canonicalize(gens, off);
}

AffineSubspace project(const AffineSubspace& r, std::size_t first, std::size_t count) {
  if (first + count > r.ambient_dim()) throw ShapeError("project: window exceeds ambient dimension");
  std::vector<std::size_t> coords(count);
  std::iota(coords.begin(), coords.end(), first);
  return project(r, coords);
}

bool contains_point(const AffineSubspace& r, std::span<const Residue> v) { return r.contains(v); }

bool includes(const AffineSubspace& r, const AffineSubspace& s) {
  require_compatible(r, s, "includes");
  if (r.is_empty()) return true;
  if (s.is_empty()) return false;
  if (r.dimension() > s.dimension()) return false;
  if (!s.contains(r.offset())) return false;
  for (std::size_t i = 0; i < r.dimension(); ++i)
    if (!s.linear_contains(r.basis().row(i))) return false;
  return true;
}

bool is_total(const AffineSubspace& r, std::size_t dim_a) {
  if (dim_a > r.ambient_dim()) throw ShapeError("is_total: domain dimension exceeds ambient dimension");
  if (r.is_empty()) return dim_a == 0 ? false : false;
  return project(r, 0, dim_a).dimension() == dim_a;
}

std::size_t point_count(const AffineSubspace& r, std::size_t limit) {
  if (r.is_empty()) return 0;
  std::size_t n = 1;
  for (std::size_t i = 0; i < r.dimension(); ++i) {
    if (n > limit / r.prime().value()) return limit + 1;
    n *= r.prime().value();
  }
  return n;
}

void for_each_point(const AffineSubspace& r, const std::function<bool(std::span<const Residue>)>& visit) {
  if (r.is_empty()) return;
  const Prime& p = r.prime();
  const std::size_t k = r.dimension();
  std::vector<Residue> coeff(k, 0);
  FVector pt = r.offset();
  for (;;) {
    if (!visit(pt)) return;
    // Odometer increment; pt tracks offset + coeff * basis incrementally.
    std::size_t i = 0;
    for (; i < k; ++i) {
      auto row = r.basis().row(i);
      if (coeff[i] + 1 < p.value()) {
        ++coeff[i];
        for (std::size_t c = 0; c < pt.size(); ++c) pt[c] = p.add(pt[c], row[c]);
        break;
      }
      coeff[i] = 0;
      // Undo p-1 additions of this row: adding once more wraps to zero contribution.
      for (std::size_t c = 0; c < pt.size(); ++c) pt[c] = p.add(pt[c], row[c]);
    }
    if (i == k) return;
  }
}

bool covered_by_union(const AffineSubspace& s, std::span<const AffineSubspace> parts, std::size_t point_cap) {
  if (s.is_empty()) return true;
  std::vector<AffineSubspace> pieces;
  for (const auto& t : parts) {
    auto piece = intersect(s, t);
    if (piece.is_empty()) continue;
    if (piece == s) return true;
    pieces.push_back(std::move(piece));
  }
  if (pieces.empty()) return false;

  // Directions shared by every piece leave membership invariant; enumerate s modulo them.
  AffineSubspace shared = pieces.front().linear_part();
  for (std::size_t i = 1; i < pieces.size(); ++i) shared = intersect(shared, pieces[i].linear_part());
  const Prime& p = s.prime();
  FMatrix complement(p, 0, s.ambient_dim());
  {
    FMatrix acc = shared.basis();
    for (std::size_t i = 0; i < s.dimension(); ++i) {
      FMatrix trial = acc;
      trial.append_row(s.basis().row(i));
      if (rank(trial) > rank(acc)) {
        acc = std::move(trial);
        complement.append_row(s.basis().row(i));
      }
    }
  }
  auto quotient = AffineSubspace::canonicalize(complement, s.offset());
  if (point_count(quotient, point_cap) > point_cap) {
    throw ResourceError("union coverage needs " + std::to_string(p.value()) + "^" +
                        std::to_string(quotient.dimension()) + " points, above the cap of " +
                        std::to_string(point_cap));
  }
  // quotient is canonicalized, so its points are offset + span(complement) up to the shared directions.
  bool all = true;
  for_each_point(quotient, [&](std::span<const Residue> pt) {
    for (const auto& piece : pieces)
      if (piece.contains(pt)) return true;
    all = false;
    return false;
  });
  return all;
}

nlohmann::ordered_json to_json(const AffineSubspace& s) {
  nlohmann::ordered_json j;
  j["p"] = s.prime().value();
  j["dim"] = s.ambient_dim();
  j["empty"] = s.is_empty();
  if (!s.is_empty()) {
    auto basis = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < s.dimension(); ++i) {
      auto row = s.basis().row(i);
      basis.push_back(std::vector<Residue>(row.begin(), row.end()));
    }
    j["basis"] = std::move(basis);
    j["offset"] = s.offset();
  }
  return j;
}

AffineSubspace subspace_from_json(const nlohmann::json& j) {
  try {
    Prime p(j.at("p").get<std::int64_t>());
    const auto dim = j.at("dim").get<std::size_t>();
    if (j.value("empty", false)) return AffineSubspace::empty_set(p, dim);
    std::vector<std::vector<std::int64_t>> rows;
    if (j.contains("basis")) rows = j.at("basis").get<std::vector<std::vector<std::int64_t>>>();
    FMatrix gens = FMatrix::from_rows(p, dim, rows);
    std::vector<std::int64_t> raw = j.contains("offset") ? j.at("offset").get<std::vector<std::int64_t>>()
                                                         : std::vector<std::int64_t>(dim, 0);
    if (raw.size() != dim) throw ShapeError("subspace JSON: offset length differs from dim");
    FVector off(dim);
    for (std::size_t i = 0; i < dim; ++i) off[i] = p.reduce(raw[i]);
    return AffineSubspace::canonicalize(gens, off);
  } catch (const nlohmann::json::exception& e) {
    throw ShapeError(std::string("malformed subspace JSON: ") + e.what());
  }
}

std::string to_string(const AffineSubspace& s) {
  if (s.is_empty()) return "{} in F_" + std::to_string(s.prime().value()) + "^" + std::to_string(s.ambient_dim());
  std::ostringstream os;
  os << to_string(s.offset()) << " + span" << to_string(s.basis());
  return os.str();
}

}  // namespace stabrel
