#include <benchmark/benchmark.h>

#include "qutrit/equivalence.hpp"
#include "qutrit/mesh.hpp"
#include "qutrit/pure_states.hpp"
#include "qutrit/sections.hpp"
#include "qutrit/tetrahedral.hpp"

using namespace qutrit;

static void BM_ClassifyThreeSections(benchmark::State& state) {
  const auto sections = enumerate_sections(3);
  for (auto _ : state)
    for (const auto& s : sections) benchmark::DoNotOptimize(classify_three_section(s));
}
BENCHMARK(BM_ClassifyThreeSections)->Unit(benchmark::kMillisecond);

static void BM_FactorBoundary(benchmark::State& state) {
  const SectionSpec s = SectionSpec::parse("128");
  for (auto _ : state) benchmark::DoNotOptimize(factor_boundary(s));
}
BENCHMARK(BM_FactorBoundary)->Unit(benchmark::kMicrosecond);

static void BM_PureStates(benchmark::State& state) {
  const SectionSpec s = SectionSpec::parse("146");
  for (auto _ : state) benchmark::DoNotOptimize(pure_states_on_section(s));
}
BENCHMARK(BM_PureStates)->Unit(benchmark::kMillisecond);

static void BM_PartitionThreeSections(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(partition_unitary_classes(3));
}
BENCHMARK(BM_PartitionThreeSections)->Unit(benchmark::kMillisecond);

static void BM_SectionMesh(benchmark::State& state) {
  const SectionSpec s = SectionSpec::parse("146");
  for (auto _ : state) benchmark::DoNotOptimize(section_mesh(s, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_SectionMesh)->Arg(16)->Arg(64)->Unit(benchmark::kMicrosecond);

static void BM_CharacterTable(benchmark::State& state) {
  const auto group = generate_td();
  for (auto _ : state) benchmark::DoNotOptimize(character_table_check(group));
}
BENCHMARK(BM_CharacterTable)->Unit(benchmark::kMicrosecond);
