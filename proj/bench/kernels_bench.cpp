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

// OpenMP kernels against their serial references, plus the distance search.
#include <benchmark/benchmark.h>

#include <numeric>
#include <random>

#include "stabrel/oracle/kernels.hpp"
#include "stabrel/qec.hpp"

using namespace stabrel;
using namespace stabrel::oracle;

namespace {

CMatrix random_state(std::size_t dim) {
  std::mt19937_64 rng(42);
  std::normal_distribution<double> g;
  CMatrix a(dim, dim);
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) a(i, j) = Complex(g(rng), g(rng));
  return a * a.adjoint();
}

CMatrix random_unitary(std::size_t dim) {
  Eigen::HouseholderQR<CMatrix> qr(random_state(dim));
  return qr.householderQ();
}

template <bool Parallel>
void BM_LocalUnitary(benchmark::State& st) {
  const Layout l{3, static_cast<std::size_t>(st.range(0))};
  const CMatrix rho = random_state(l.dim());
  const CMatrix u = random_unitary(9);
  const std::vector<std::size_t> t{0, l.wires - 1};
  for (auto _ : st) {
    CMatrix r = rho;
    if constexpr (Parallel)
      apply_local_unitary(r, l, t, u);
    else
      oracle::serial::apply_local_unitary(r, l, t, u);
    benchmark::DoNotOptimize(r.data());
  }
}

template <bool Parallel>
void BM_Permutation(benchmark::State& st) {
  const Layout l{3, static_cast<std::size_t>(st.range(0))};
  const CMatrix rho = random_state(l.dim());
  std::vector<std::size_t> perm(9);
  std::iota(perm.begin(), perm.end(), 0);
  std::rotate(perm.begin(), perm.begin() + 4, perm.end());
  const std::vector<std::size_t> t{1, 0};
  for (auto _ : st) {
    CMatrix r = rho;
    if constexpr (Parallel)
      apply_local_permutation(r, l, t, perm);
    else
      oracle::serial::apply_local_permutation(r, l, t, perm);
    benchmark::DoNotOptimize(r.data());
  }
}

template <bool Parallel>
void BM_PartialTrace(benchmark::State& st) {
  const Layout l{3, static_cast<std::size_t>(st.range(0))};
  const CMatrix rho = random_state(l.dim());
  for (auto _ : st) {
    CMatrix r = Parallel ? partial_trace(rho, l, 1) : oracle::serial::partial_trace(rho, l, 1);
    benchmark::DoNotOptimize(r.data());
  }
}

template <bool Parallel>
void BM_Distance(benchmark::State& st) {
  // The trivial code on n qupits: every point of F_3^{2n} is visited.
  const StabiliserCode code(AffineSubspace::full(Prime(3), 2 * static_cast<std::size_t>(st.range(0))));
  for (auto _ : st) {
    auto d = Parallel ? distance(code) : stabrel::serial::distance(code);
    benchmark::DoNotOptimize(d.visited);
  }
}

}  // namespace

BENCHMARK(BM_LocalUnitary<false>)->Name("local_unitary/serial")->DenseRange(4, 6);
BENCHMARK(BM_LocalUnitary<true>)->Name("local_unitary/omp")->DenseRange(4, 6);
BENCHMARK(BM_Permutation<false>)->Name("permutation/serial")->DenseRange(4, 6);
BENCHMARK(BM_Permutation<true>)->Name("permutation/omp")->DenseRange(4, 6);
BENCHMARK(BM_PartialTrace<false>)->Name("partial_trace/serial")->DenseRange(4, 6);
BENCHMARK(BM_PartialTrace<true>)->Name("partial_trace/omp")->DenseRange(4, 6);
BENCHMARK(BM_Distance<false>)->Name("distance/serial")->DenseRange(4, 6);
BENCHMARK(BM_Distance<true>)->Name("distance/omp")->DenseRange(4, 6);

BENCHMARK_MAIN();
