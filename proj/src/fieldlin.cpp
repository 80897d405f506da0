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

#include "stabrel/fieldlin.hpp"

#include <limits>
#include <sstream>
#include <utility>

#include "stabrel/error.hpp"

namespace stabrel {

namespace {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

Prime::Prime(std::int64_t p) {
  if (p == 2) throw CssUnsupportedError();
  if (p < 3 || p > std::numeric_limits<std::int32_t>::max() || !is_prime(p)) {
    throw ModulusError("modulus " + std::to_string(p) + " is not an odd prime below 2^31");
  }
  p_ = static_cast<Residue>(p);
}

Residue Prime::pow(Residue a, std::uint64_t e) const {
  Residue result = 1 % p_;
  Residue base = a % p_;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Residue Prime::inv(Residue a) const {
  if (a % p_ == 0) throw DomainError("inverse of zero in F_" + std::to_string(p_));
  return pow(a, p_ - 2);
}

void require_same_modulus(const Prime& a, const Prime& b, const char* where) {
  if (!(a == b)) {
    throw ModulusError(std::string(where) + ": mixing F_" + std::to_string(a.value()) + " and F_" +
                       std::to_string(b.value()));
  }
}

FMatrix::FMatrix(Prime p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

FMatrix FMatrix::identity(Prime p, std::size_t n) {
  FMatrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

FMatrix FMatrix::from_rows(Prime p, std::size_t cols, const std::vector<std::vector<std::int64_t>>& rows) {
  FMatrix m(p, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw ShapeError("row " + std::to_string(r) + " has " + std::to_string(rows[r].size()) +
                       " entries, expected " + std::to_string(cols));
    }
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = p.reduce(rows[r][c]);
  }
  return m;
}

FMatrix FMatrix::from_vectors(Prime p, std::size_t cols, const std::vector<FVector>& rows) {
  FMatrix m(p, 0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

FVector FMatrix::row_vector(std::size_t r) const {
  auto s = row(r);
  return FVector(s.begin(), s.end());
}

void FMatrix::append_row(std::span<const Residue> values) {
  if (values.size() != cols_) {
    throw ShapeError("append_row: got " + std::to_string(values.size()) + " entries, expected " +
                     std::to_string(cols_));
  }
  for (Residue v : values) data_.push_back(v % p_.value());
  ++rows_;
}

void FMatrix::remove_rows_from(std::size_t first) {
  if (first >= rows_) return;
  rows_ = first;
  data_.resize(rows_ * cols_);
}

void FMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap(data_[a * cols_ + c], data_[b * cols_ + c]);
}

FMatrix FMatrix::transpose() const {
  FMatrix t(p_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

FMatrix FMatrix::operator*(const FMatrix& rhs) const {
  require_same_modulus(p_, rhs.p_, "matrix product");
  if (cols_ != rhs.rows_) throw ShapeError("matrix product: inner dimensions differ");
  FMatrix out(p_, rows_, rhs.cols_);
  const std::uint64_t p = p_.value();
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const std::uint64_t a = (*this)(r, k);
      if (a == 0) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c) {
        out(r, c) = static_cast<Residue>((out(r, c) + a * rhs(k, c)) % p);
      }
    }
  }
  return out;
}

FVector FMatrix::apply(std::span<const Residue> x) const {
  if (x.size() != cols_) throw ShapeError("matrix-vector product: length mismatch");
  FVector out(rows_, 0);
  const std::uint64_t p = p_.value();
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) acc = (acc + static_cast<std::uint64_t>((*this)(r, c)) * x[c]) % p;
    out[r] = static_cast<Residue>(acc);
  }
  return out;
}

FMatrix FMatrix::columns(std::span<const std::size_t> which) const {
  FMatrix out(p_, rows_, which.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < which.size(); ++j) out(r, j) = (*this)(r, which[j]);
  return out;
}

bool FMatrix::is_zero() const {
  for (Residue v : data_)
    if (v) return false;
  return true;
}

std::vector<std::size_t> rref_in_place(FMatrix& m) {
  const Prime& p = m.prime();
  const std::uint64_t pv = p.value();
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t r = lead_row;
    while (r < m.rows() && m(r, c) == 0) ++r;
    if (r == m.rows()) continue;
    m.swap_rows(r, lead_row);
    auto lead = m.row(lead_row);
    const Residue inv = p.inv(lead[c]);
    if (inv != 1) {
      for (std::size_t k = c; k < m.cols(); ++k) lead[k] = p.mul(lead[k], inv);
    }
    for (std::size_t other = 0; other < m.rows(); ++other) {
      if (other == lead_row) continue;
      auto row = m.row(other);
      const Residue f = row[c];
      if (f == 0) continue;
      const std::uint64_t nf = pv - f;
      for (std::size_t k = c; k < m.cols(); ++k) {
        if (lead[k]) row[k] = static_cast<Residue>((row[k] + nf * lead[k]) % pv);
      }
    }
    pivots.push_back(c);
    ++lead_row;
  }
  return pivots;
}

Rref rref(const FMatrix& m) {
  FMatrix copy = m;
  auto pivots = rref_in_place(copy);
  return {std::move(copy), std::move(pivots)};
}

std::size_t rank(const FMatrix& m) { return rref(m).pivots.size(); }

namespace {

// Kernel basis read off an RREF with the given pivots: one vector per free column.
FMatrix kernel_from_rref(const FMatrix& r, const std::vector<std::size_t>& pivots) {
  const Prime& p = r.prime();
  const std::size_t n = r.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  FMatrix basis(p, 0, n);
  FVector v(n);
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::fill(v.begin(), v.end(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = p.neg(r(i, free));
    basis.append_row(v);
  }
  return basis;
}

}  // namespace

FMatrix kernel(const FMatrix& m) {
  auto [r, pivots] = rref(m);
  FMatrix basis = kernel_from_rref(r, pivots);
  rref_in_place(basis);
  return basis;
}

std::optional<Solution> solve(const FMatrix& m, std::span<const Residue> b) {
  if (b.size() != m.rows()) {
    throw ShapeError("solve: right-hand side has length " + std::to_string(b.size()) + ", expected " +
                     std::to_string(m.rows()));
  }
  const Prime& p = m.prime();
  const std::size_t n = m.cols();
  FMatrix aug(p, m.rows(), n + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n) = b[r] % p.value();
  }
  auto pivots = rref_in_place(aug);
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;
  FVector x(n, 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, n);
  FMatrix coeffs(p, aug.rows(), n);
  for (std::size_t r = 0; r < aug.rows(); ++r)
    for (std::size_t c = 0; c < n; ++c) coeffs(r, c) = aug(r, c);
  FMatrix k = kernel_from_rref(coeffs, pivots);
  rref_in_place(k);
  return Solution{std::move(x), std::move(k)};
}

FMatrix inverse(const FMatrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("inverse: matrix is not square");
  const std::size_t n = m.rows();
  FMatrix aug(m.prime(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  auto pivots = rref_in_place(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw DomainError("inverse: matrix is singular");
  FMatrix inv(m.prime(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  return inv;
}

FVector add(const Prime& p, std::span<const Residue> a, std::span<const Residue> b) {
  if (a.size() != b.size()) throw ShapeError("vector add: length mismatch");
  FVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = p.add(a[i], b[i]);
  return out;
}

FVector sub(const Prime& p, std::span<const Residue> a, std::span<const Residue> b) {
  if (a.size() != b.size()) throw ShapeError("vector sub: length mismatch");
  FVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = p.sub(a[i], b[i]);
  return out;
}

FVector scale(const Prime& p, Residue k, std::span<const Residue> a) {
  FVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = p.mul(k, a[i]);
  return out;
}

bool is_zero(std::span<const Residue> v) {
  for (Residue x : v)
    if (x) return false;
  return true;
}

std::string to_string(std::span<const Residue> v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ']';
  return os.str();
}

std::string to_string(const FMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) os << (r ? "," : "") << to_string(m.row(r));
  os << ']';
  return os.str();
}

}  // namespace stabrel
