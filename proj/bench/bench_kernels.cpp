// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "pdnf/kernels.hpp"

using namespace pdnf;

namespace {

PolyScalar dense_poly(std::size_t nvars, int order, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> val(-9, 9);
  PolyScalar p(nvars, order);
  for (int d = 0; d <= order; ++d)
    for (const Monomial& m : monomials_of_degree(nvars, d)) p.add_term(m, Scalar(val(rng), val(rng)));
  return p;
}

SparseMatrix random_matrix(std::size_t rows, std::size_t cols, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> val(-5, 5), len(1, 8);
  std::uniform_int_distribution<std::size_t> col(0, cols - 1);
  SparseMatrix m;
  m.cols = cols;
  for (std::size_t r = 0; r < rows; ++r) {
    SparseRow row;
    const int k = len(rng);
    for (int i = 0; i < k; ++i) row.emplace_back(col(rng), Scalar(val(rng)));
    m.add_row(row);
  }
  return m;
}

const std::vector<std::vector<Scalar>> kResonanceSpectra{{1, -3, 9, 2}};
const std::vector<Scalar> kOmegaSpectrum{Scalar(1, 1), Scalar(-2, 1), Scalar(3, -2)};

template <auto Fn>
void bm_multiply(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const PolyScalar a = dense_poly(3, order, 1), b = dense_poly(3, order, 2);
  for (auto _ : state) benchmark::DoNotOptimize(Fn(a, b, order));
}

template <auto Fn>
void bm_rref(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const SparseMatrix m = random_matrix(n, n + n / 2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(Fn(m));
}

template <auto Fn>
void bm_resonant_pairs(benchmark::State& state) {
  const int degree = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Fn(kResonanceSpectra, 4, 2, degree));
}

template <auto Fn>
void bm_omega(benchmark::State& state) {
  const int degree = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Fn(kOmegaSpectrum, degree));
}

}  // namespace

BENCHMARK(bm_multiply<&kernels::multiply>)->Name("multiply/parallel")->Arg(8)->Arg(12);
BENCHMARK(bm_multiply<&kernels::reference::multiply>)->Name("multiply/reference")->Arg(8)->Arg(12);
BENCHMARK(bm_rref<&kernels::rref>)->Name("rref/parallel")->Arg(60)->Arg(120);
BENCHMARK(bm_rref<&kernels::reference::rref>)->Name("rref/reference")->Arg(60)->Arg(120);
BENCHMARK(bm_resonant_pairs<&kernels::resonant_pairs>)->Name("resonant_pairs/parallel")->Arg(10)->Arg(14);
BENCHMARK(bm_resonant_pairs<&kernels::reference::resonant_pairs>)->Name("resonant_pairs/reference")->Arg(10)->Arg(14);
BENCHMARK(bm_omega<&kernels::omega_degree_minima>)->Name("omega/parallel")->Arg(10)->Arg(16);
BENCHMARK(bm_omega<&kernels::reference::omega_degree_minima>)->Name("omega/reference")->Arg(10)->Arg(16);

BENCHMARK_MAIN();
