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
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "stabrel/arq.hpp"
#include "stabrel/pauli.hpp"
#include "stabrel/symp.hpp"

namespace stabrel {

/// A stabiliser code given by its coisotropic subspace C = L + a of sp(n).
/// The empty subspace is the zero code (contradictory stabiliser phases).
class StabiliserCode {
 public:
  explicit StabiliserCode(AffineSubspace subspace);
  static StabiliserCode from_group(const StabGroup& g);

  const Prime& prime() const { return subspace_.prime(); }
  std::size_t qupits() const { return subspace_.ambient_dim() / 2; }
  const AffineSubspace& subspace() const { return subspace_; }
  bool is_empty() const { return subspace_.is_empty(); }
  /// L, the linear part of the subspace.
  const AffineSubspace& logical_space() const { return linear_; }
  /// L^omega, spanned by the stabilisers.
  const AffineSubspace& stabiliser_space() const { return perp_; }
  StabGroup generators() const;
  /// dim(L) - n.
  std::size_t logical_qupits() const;

 private:
  AffineSubspace subspace_;
  AffineSubspace linear_;
  AffineSubspace perp_;
};

enum class ErrorClass { Trivial, Detectable, Logical };

std::string to_string(ErrorClass c);

ErrorClass classify_error(const StabiliserCode& code, std::span<const Residue> e);
/// No two distinct errors differ by a logical operator.
bool is_correctable(const StabiliserCode& code, const std::vector<FVector>& errors);

/// Number of qupits on which e acts.
std::size_t support_weight(std::span<const Residue> e);

struct DistanceResult {
  std::optional<std::size_t> distance;
  /// Set when distance is absent.
  std::string reason;
  /// Points of L that were visited.
  std::size_t visited = 0;
};

inline constexpr std::size_t kDefaultDistanceBudget = 10'000'000;

/// Minimum weight over L minus L^omega by enumerating L. Throws ResourceError when
/// |L| exceeds the budget.
DistanceResult distance(const StabiliserCode& code, std::size_t point_budget = kDefaultDistanceBudget);
namespace serial {
DistanceResult distance(const StabiliserCode& code, std::size_t point_budget = kDefaultDistanceBudget);
}

/// Lagrangian isometry sp(k_log) -> sp(n) whose image is the code.
ArqMorphism encoder(const StabiliserCode& code);
/// code_r is a subset of code_s.
bool refines(const StabiliserCode& code_r, const StabiliserCode& code_s);

/// Either "p=<p> n=<n>" followed by one Pauli string per line, or subspace JSON
/// (a top-level object with "p" and "dim"). Blank lines and '#' comments are skipped.
/// The prime in the file must equal `p`.
StabiliserCode parse_code(const std::string& text, Prime p);

nlohmann::ordered_json to_json(const StabiliserCode& code);

}  // namespace stabrel
