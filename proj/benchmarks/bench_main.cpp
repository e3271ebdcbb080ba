#include <benchmark/benchmark.h>

#include "hecke/abacus.hpp"
#include "hecke/jantzen.hpp"
#include "hecke/llt.hpp"
#include "hecke/mullineux.hpp"
#include "hecke/partition.hpp"
#include "hecke/verifier.hpp"

using namespace hecke;

namespace {

// Cold cache each iteration: every e-regular column of the principal block.
void BM_CanonicalBasisBlock(benchmark::State& state) {
  const int e = static_cast<int>(state.range(0));
  const BlockId b = principal_5e(e);
  const auto members = e_regular_members(b);
  for (auto _ : state) {
    CanonicalCache cache;
    for (const auto& mu : members) benchmark::DoNotOptimize(canonical_basis(mu, e, b.bead_count(), cache));
  }
  state.counters["columns"] = static_cast<double>(members.size());
}
BENCHMARK(BM_CanonicalBasisBlock)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

void BM_Mullineux(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<Partition> regular;
  for (const auto& p : partitions_of(n)) {
    if (is_e_regular(p, 3)) regular.push_back(p);
  }
  for (auto _ : state) {
    for (const auto& p : regular) benchmark::DoNotOptimize(mullineux(p, 3));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(regular.size()));
}
BENCHMARK(BM_Mullineux)->Arg(10)->Arg(20)->Arg(30);

void BM_MullineuxKleshchev(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<Partition> regular;
  for (const auto& p : partitions_of(n)) {
    if (is_e_regular(p, 3)) regular.push_back(p);
  }
  for (auto _ : state) {
    for (const auto& p : regular) benchmark::DoNotOptimize(mullineux_kleshchev(p, 3));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(regular.size()));
}
BENCHMARK(BM_MullineuxKleshchev)->Arg(10)->Arg(20)->Arg(30);

void BM_Verify(benchmark::State& state) {
  const int e = static_cast<int>(state.range(0));
  for (auto _ : state) {
    CanonicalCache cache;
    benchmark::DoNotOptimize(report(e, cache));
  }
}
BENCHMARK(BM_Verify)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

void BM_RyomHansenSweep(benchmark::State& state) {
  for (auto _ : state) {
    CanonicalCache cache;
    benchmark::DoNotOptimize(ryom_hansen_sweep(static_cast<int>(state.range(0)), {2, 3, 4}, cache));
  }
}
BENCHMARK(BM_RyomHansenSweep)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
