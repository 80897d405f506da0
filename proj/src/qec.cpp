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

#include "stabrel/qec.hpp"

#include <omp.h>

#include <algorithm>
#include <limits>
#include <sstream>

#include "stabrel/error.hpp"

namespace stabrel {

namespace {

void require_nonempty(const StabiliserCode& code, const char* where) {
  if (code.is_empty()) throw DomainError(std::string(where) + ": the zero code (contradictory phases) has no codespace");
}

void require_length(const StabiliserCode& code, std::span<const Residue> e, const char* where) {
  if (e.size() != 2 * code.qupits())
    throw ShapeError(std::string(where) + ": error vector has length " + std::to_string(e.size()) + ", expected " +
                     std::to_string(2 * code.qupits()));
}

}  // namespace

StabiliserCode::StabiliserCode(AffineSubspace subspace)
    : subspace_(std::move(subspace)), linear_(subspace_.linear_part()), perp_(linear_) {
  if (subspace_.ambient_dim() % 2) throw ShapeError("stabiliser code: ambient dimension is odd");
  if (!subspace_.is_empty()) {
    const SympSpace sp(prime(), qupits());
    if (!is_coisotropic(classify(subspace_, sp))) throw DomainError("stabiliser code: subspace is not coisotropic");
    perp_ = complement(subspace_, sp);
  }
}

StabiliserCode StabiliserCode::from_group(const StabGroup& g) { return StabiliserCode(group_to_subspace(g)); }

StabGroup StabiliserCode::generators() const {
  require_nonempty(*this, "generators");
  return subspace_to_group(subspace_);
}

std::size_t StabiliserCode::logical_qupits() const {
  require_nonempty(*this, "logical_qupits");
  return linear_.dimension() - qupits();
}

std::string to_string(ErrorClass c) {
  switch (c) {
    case ErrorClass::Trivial: return "trivial";
    case ErrorClass::Detectable: return "detectable";
    case ErrorClass::Logical: return "logical";
  }
  return "?";
}

ErrorClass classify_error(const StabiliserCode& code, std::span<const Residue> e) {
  require_nonempty(code, "classify_error");
  require_length(code, e, "classify_error");
  if (code.stabiliser_space().linear_contains(e)) return ErrorClass::Trivial;
  if (!code.logical_space().linear_contains(e)) return ErrorClass::Detectable;
  return ErrorClass::Logical;
}

bool is_correctable(const StabiliserCode& code, const std::vector<FVector>& errors) {
  require_nonempty(code, "is_correctable");
  const Prime& p = code.prime();
  for (const auto& e : errors) require_length(code, e, "is_correctable");
  for (std::size_t i = 0; i < errors.size(); ++i)
    for (std::size_t j = i + 1; j < errors.size(); ++j) {
      if (errors[i] == errors[j]) continue;
      if (classify_error(code, sub(p, errors[j], errors[i])) == ErrorClass::Logical) return false;
    }
  return true;
}

std::size_t support_weight(std::span<const Residue> e) {
  std::size_t w = 0;
  for (std::size_t i = 0; i + 1 < e.size(); i += 2)
    if (e[i] || e[i + 1]) ++w;
  return w;
}

namespace {

struct Enumeration {
  std::size_t count;
  std::size_t dim;
};

// Validates the code and the budget; nullopt when there is nothing to enumerate.
std::optional<Enumeration> prepare(const StabiliserCode& code, std::size_t budget, DistanceResult& out) {
  require_nonempty(code, "distance");
  const auto& l = code.logical_space();
  if (l.dimension() == code.stabiliser_space().dimension()) {
    out.reason = "no logical operators";
    return std::nullopt;
  }
  const std::size_t count = point_count(l, budget);
  if (count > budget)
    throw ResourceError("distance: L has more than " + std::to_string(budget) +
                        " points; raise the budget to enumerate it");
  return Enumeration{count, l.ambient_dim()};
}

}  // namespace

DistanceResult distance(const StabiliserCode& code, std::size_t point_budget) {
  DistanceResult out;
  const auto en = prepare(code, point_budget, out);
  if (!en) return out;
  const Prime& p = code.prime();
  const auto& l = code.logical_space();
  const auto& perp = code.stabiliser_space();
  const std::size_t k = l.dimension();
  const auto n = static_cast<std::ptrdiff_t>(en->count);
  std::size_t best = std::numeric_limits<std::size_t>::max();
#pragma omp parallel
  {
    // Each thread walks a contiguous block of coefficient vectors. Moving to the
    // next vector adds basis row i whenever digit i ticks over, so a step costs
    // one row addition on average.
    const auto threads = static_cast<std::ptrdiff_t>(omp_get_num_threads());
    const auto me = static_cast<std::ptrdiff_t>(omp_get_thread_num());
    const std::ptrdiff_t lo = 1 + (n - 1) * me / threads, hi = 1 + (n - 1) * (me + 1) / threads;
    FVector v(en->dim, 0);
    std::vector<Residue> digit(k, 0);
    auto rest = static_cast<std::size_t>(lo);
    for (std::size_t i = 0; i < k; ++i) {
      digit[i] = static_cast<Residue>(rest % p.value());
      rest /= p.value();
      auto row = l.basis().row(i);
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = p.add(v[j], p.mul(digit[i], row[j]));
    }
    std::size_t local = std::numeric_limits<std::size_t>::max();
    for (std::ptrdiff_t t = lo; t < hi; ++t) {
      const std::size_t w = support_weight(v);
      if (w < local && !perp.linear_contains(v)) local = w;
      for (std::size_t i = 0; i < k; ++i) {
        auto row = l.basis().row(i);
        for (std::size_t j = 0; j < v.size(); ++j) v[j] = p.add(v[j], row[j]);
        if (++digit[i] < p.value()) break;
        digit[i] = 0;
      }
    }
#pragma omp critical
    best = std::min(best, local);
  }
  out.visited = en->count;
  out.distance = best;
  return out;
}

namespace serial {

DistanceResult distance(const StabiliserCode& code, std::size_t point_budget) {
  DistanceResult out;
  if (!prepare(code, point_budget, out)) return out;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for_each_point(code.logical_space(), [&](std::span<const Residue> v) {
    ++out.visited;
    if (!code.stabiliser_space().linear_contains(v)) best = std::min(best, support_weight(v));
    return true;
  });
  out.distance = best;
  return out;
}

}  // namespace serial

ArqMorphism encoder(const StabiliserCode& code) {
  require_nonempty(code, "encoder");
  const auto d = dilate(code.subspace(), SympSpace(code.prime(), code.qupits()));
  return ArqMorphism(ObjectSignature::quantum(code.prime(), d.dom_wires),
                     ObjectSignature::quantum(code.prime(), d.cod_wires), d.relation);
}

bool refines(const StabiliserCode& code_r, const StabiliserCode& code_s) {
  require_same_modulus(code_r.prime(), code_s.prime(), "refines");
  if (code_r.qupits() != code_s.qupits()) throw ShapeError("refines: codes act on different numbers of qupits");
  return includes(code_r.subspace(), code_s.subspace());
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

std::int64_t header_value(const std::string& token, const std::string& key, std::size_t line) {
  if (token.rfind(key + "=", 0) != 0)
    throw SyntaxError("code header must read 'p=<p> n=<n>'", line, 1);
  try {
    std::size_t used = 0;
    const auto v = std::stoll(token.substr(key.size() + 1), &used);
    if (used != token.size() - key.size() - 1 || v < 0) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw SyntaxError("bad value in code header: " + token, line, 1);
  }
}

}  // namespace

StabiliserCode parse_code(const std::string& text, Prime p) {
  const std::string body = trim(text);
  if (!body.empty() && body.front() == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(body);
    } catch (const nlohmann::json::exception& e) {
      throw SyntaxError(std::string("code JSON: ") + e.what(), 1, 1);
    }
    const auto s = subspace_from_json(j.contains("subspace") ? j.at("subspace") : j);
    require_same_modulus(s.prime(), p, "code file");
    return StabiliserCode(s);
  }

  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  std::optional<std::size_t> n;
  std::vector<PauliLabel> gens;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (!n) {
      std::istringstream hs(line);
      std::string pt, nt, extra;
      hs >> pt >> nt;
      if (hs >> extra) throw SyntaxError("unexpected text after code header", lineno, 1);
      const auto pv = header_value(pt, "p", lineno);
      if (pv != static_cast<std::int64_t>(p.value()))
        throw ModulusError("code file is over p=" + std::to_string(pv) + " but p=" + std::to_string(p.value()) +
                           " was requested");
      n = static_cast<std::size_t>(header_value(nt, "n", lineno));
      if (*n == 0) throw SyntaxError("code must have at least one qupit", lineno, 1);
      continue;
    }
    try {
      gens.push_back(parse_pauli(line, p, *n));
    } catch (const SyntaxError& e) {
      throw SyntaxError(std::string("generator: ") + e.what(), lineno, 1);
    }
  }
  if (!n) throw SyntaxError("missing code header 'p=<p> n=<n>'", lineno ? lineno : 1, 1);
  return StabiliserCode::from_group(StabGroup(p, *n, std::move(gens)));
}

nlohmann::ordered_json to_json(const StabiliserCode& code) {
  nlohmann::ordered_json j;
  j["p"] = code.prime().value();
  j["n"] = code.qupits();
  j["subspace"] = to_json(code.subspace());
  if (code.is_empty()) {
    j["zero_projector"] = true;
    return j;
  }
  j["logical_qupits"] = code.logical_qupits();
  auto gens = nlohmann::ordered_json::array();
  const auto group = code.generators();
  for (const auto& g : group.generators()) gens.push_back(print_pauli(g));
  j["generators"] = std::move(gens);
  return j;
}

}  // namespace stabrel
