#include <benchmark/benchmark.h>

#include "tpg/axial.hpp"
#include "tpg/certificate.hpp"
#include "tpg/classify.hpp"
#include "tpg/coset_enum.hpp"
#include "tpg/dihedral.hpp"

using namespace tpg;

static void BM_ToddCoxeter(benchmark::State& state) {
  const auto entry = classify::catalog_entry(classify::catalog_names()[state.range(0)]);
  const auto pres = entry.presentation();
  for (auto _ : state) benchmark::DoNotOptimize(fp::todd_coxeter(pres).size());
  state.SetLabel(entry.name);
}
BENCHMARK(BM_ToddCoxeter)->Arg(0)->Arg(9)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_NormalLattice(benchmark::State& state) {
  const auto entry = classify::catalog_entry(classify::catalog_names()[state.range(0)]);
  const auto& g = entry.group;
  g.classes();
  for (auto _ : state) benchmark::DoNotOptimize(classify::normal_subgroups_index_gt(g, 12).size());
  state.SetLabel(entry.name);
}
BENCHMARK(BM_NormalLattice)->Arg(0)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_Obstruct(benchmark::State& state) {
  const auto& row = classify::excluded_rows()[state.range(0)];
  for (auto _ : state) benchmark::DoNotOptimize(classify::obstruct_type(row.name));
  state.SetLabel(row.name);
}
BENCHMARK(BM_Obstruct)->Arg(1)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_DihedralBuild(benchmark::State& state) {
  const auto t = dihedral::all_types()[state.range(0)];
  for (auto _ : state) benchmark::DoNotOptimize(dihedral::build(t).dim());
  state.SetLabel(std::string(dihedral::name(t)));
}
BENCHMARK(BM_DihedralBuild)->DenseRange(0, 8)->Unit(benchmark::kMicrosecond);

static void BM_DihedralVerify(benchmark::State& state) {
  const auto a = dihedral::build(dihedral::Type::T6A);
  for (auto _ : state) benchmark::DoNotOptimize(dihedral::verify_all(a).size());
}
BENCHMARK(BM_DihedralVerify)->Unit(benchmark::kMillisecond);

static void BM_ClassifyAll(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(classify::classify_all({fp::kDefaultCosetCapacity, 1}).types.size());
}
BENCHMARK(BM_ClassifyAll)->Iterations(1)->Unit(benchmark::kSecond);

BENCHMARK_MAIN();
