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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace stabrel {

using Residue = std::uint32_t;
using FVector = std::vector<Residue>;

/// An odd prime modulus. Construction fails for composites and for p = 2.
class Prime {
 public:
  explicit Prime(std::int64_t p);

  Residue value() const { return p_; }

  Residue reduce(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Residue>(r < 0 ? r + p_ : r);
  }
  Residue add(Residue a, Residue b) const {
    Residue s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Residue sub(Residue a, Residue b) const { return a >= b ? a - b : a + p_ - b; }
  Residue neg(Residue a) const { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const {
    return static_cast<Residue>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  Residue pow(Residue a, std::uint64_t e) const;
  /// Multiplicative inverse; `a` must be nonzero.
  Residue inv(Residue a) const;
  /// The inverse of 2, i.e. (p+1)/2.
  Residue half() const { return (p_ + 1) / 2; }

  friend bool operator==(const Prime&, const Prime&) = default;

 private:
  Residue p_;
};

/// Throws ModulusError unless both values carry the same modulus.
void require_same_modulus(const Prime& a, const Prime& b, const char* where);

inline Residue half(const Prime& p) { return p.half(); }

/// Dense row-major matrix over F_p. Every entry is kept reduced.
class FMatrix {
 public:
  FMatrix(Prime p, std::size_t rows, std::size_t cols);
  static FMatrix identity(Prime p, std::size_t n);
  /// Builds a matrix from integer rows, reducing every entry mod p. All rows need `cols` entries.
  static FMatrix from_rows(Prime p, std::size_t cols, const std::vector<std::vector<std::int64_t>>& rows);
  static FMatrix from_vectors(Prime p, std::size_t cols, const std::vector<FVector>& rows);

  const Prime& prime() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  Residue operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Residue& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<const Residue> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Residue> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  FVector row_vector(std::size_t r) const;

  void append_row(std::span<const Residue> values);
  void remove_rows_from(std::size_t first);
  void swap_rows(std::size_t a, std::size_t b);

  FMatrix transpose() const;
  FMatrix operator*(const FMatrix& rhs) const;
  /// Matrix-vector product m·x.
  FVector apply(std::span<const Residue> x) const;
  /// Selects the given columns, in order.
  FMatrix columns(std::span<const std::size_t> which) const;

  bool is_zero() const;

  friend bool operator==(const FMatrix&, const FMatrix&) = default;

 private:
  Prime p_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Residue> data_;
};

struct Rref {
  FMatrix reduced;
  std::vector<std::size_t> pivots;
};

/// Unique reduced row-echelon form; zero rows stay at the bottom so the shape is unchanged.
Rref rref(const FMatrix& m);
/// In-place variant used by hot paths. Returns the pivot columns.
std::vector<std::size_t> rref_in_place(FMatrix& m);
std::size_t rank(const FMatrix& m);

/// Basis of {x : m·x = 0}, returned in RREF (hence canonical).
FMatrix kernel(const FMatrix& m);

struct Solution {
  FVector particular;  ///< free variables set to zero
  FMatrix kernel;
};

/// Solves m·x = b. Returns nullopt when the system is inconsistent.
std::optional<Solution> solve(const FMatrix& m, std::span<const Residue> b);

/// Inverse of a square matrix; throws DomainError when singular.
FMatrix inverse(const FMatrix& m);

FVector add(const Prime& p, std::span<const Residue> a, std::span<const Residue> b);
FVector sub(const Prime& p, std::span<const Residue> a, std::span<const Residue> b);
FVector scale(const Prime& p, Residue k, std::span<const Residue> a);
bool is_zero(std::span<const Residue> v);

std::string to_string(const FMatrix& m);
std::string to_string(std::span<const Residue> v);

}  // namespace stabrel
