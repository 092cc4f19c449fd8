#include "tilecoh/smith.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace tilecoh;

namespace {

IntMatrix random_matrix(std::size_t rows, std::size_t cols, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> entry(-9, 9);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = entry(rng);
  return m;
}

// Incidence-like input: two nonzero entries per column, values +1 and -1.
// This is the shape the cohomology pipeline feeds in.
IntMatrix random_incidence(std::size_t rows, std::size_t cols, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> vertex(0, rows - 1);
  IntMatrix m(rows, cols);
  for (std::size_t j = 0; j < cols; ++j) {
    const std::size_t head = vertex(rng);
    const std::size_t tail = vertex(rng);
    if (head == tail) continue;  // loop column stays zero
    m.at(head, j) += 1;
    m.at(tail, j) -= 1;
  }
  return m;
}

void BM_SmithDense(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const IntMatrix a = random_matrix(n, n, 91u + static_cast<unsigned>(n));
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(a));
}
BENCHMARK(BM_SmithDense)->Arg(8)->Arg(16)->Arg(32)->Arg(48);

void BM_SmithIncidence(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const IntMatrix a = random_incidence(n, 2 * n, 7u + static_cast<unsigned>(n));
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(a));
}
BENCHMARK(BM_SmithIncidence)->Arg(32)->Arg(64)->Arg(128);

}  // namespace
