#include "tilecoh/approximant.hpp"
#include "tilecoh/cohomology.hpp"
#include "tilecoh/language.hpp"
#include "tilecoh/tower.hpp"

#include <benchmark/benchmark.h>

using namespace tilecoh;

namespace {

TilingDefinition thue_morse() {
  return parse_definition(R"({
    "name": "thue_morse", "dimension": 1, "alphabet": ["a", "b"],
    "generator": {"type": "substitution_1d", "rules": {"a": "ab", "b": "ba"}}})");
}

TilingDefinition fibonacci() {
  return parse_definition(R"({
    "name": "fibonacci", "dimension": 1, "alphabet": ["a", "b"],
    "generator": {"type": "substitution_1d", "rules": {"a": "ab", "b": "a"}}})");
}

TilingDefinition table() {
  return parse_definition(R"({
    "name": "table", "dimension": 2, "alphabet": ["a", "b"],
    "generator": {"type": "block_substitution_2d", "rules": {
      "a": [["a", "b"], ["b", "a"]],
      "b": [["b", "b"], ["a", "b"]]}}})");
}

void BM_LanguageClosure(benchmark::State& state) {
  const TilingDefinition def = thue_morse();
  const std::size_t width = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(factor_language(def, {width, 1}));
}
BENCHMARK(BM_LanguageClosure)->Arg(5)->Arg(9)->Arg(13);

void BM_BuildApproximant1D(benchmark::State& state) {
  const TilingDefinition def = thue_morse();
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_approximant(def, n));
}
BENCHMARK(BM_BuildApproximant1D)->Arg(2)->Arg(4)->Arg(6);

void BM_BuildApproximant2D(benchmark::State& state) {
  const TilingDefinition def = table();
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_approximant(def, n));
}
BENCHMARK(BM_BuildApproximant2D)->Arg(1)->Arg(2);

void BM_CohomologyTable(benchmark::State& state) {
  const CWComplex k = build_approximant(table(), 1);
  const std::size_t degree = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cohomology(k, degree));
}
BENCHMARK(BM_CohomologyTable)->Arg(1)->Arg(2);

// Whole tower in degree 1: forgetful maps, pullbacks, classification.
void BM_TowerFibonacci(benchmark::State& state) {
  const TilingDefinition def = fibonacci();
  const std::size_t depth = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    std::vector<AbelianGroupPresentation> groups;
    std::vector<GroupMap> maps;
    for (std::size_t n = 1; n <= depth; ++n) {
      const CellularMap f = forgetful_map(def, n);
      if (groups.empty()) groups.push_back(cohomology(f.target, 1));
      groups.push_back(cohomology(f.source, 1));
      if (n >= 2)
        maps.push_back(induced_cohomology_map(f, 1, groups[n - 1], groups[n]));
    }
    benchmark::DoNotOptimize(analyze_tower(maps, 3));
  }
}
BENCHMARK(BM_TowerFibonacci)->Arg(4)->Arg(6);

}  // namespace
