// One force sweep per iteration for every registry kernel, plus neighbor-list
// construction at doubling system sizes.

#include <benchmark/benchmark.h>

#include <map>
#include <memory>
#include <string>

#include "ljsimd/kernels.hpp"
#include "ljsimd/layout.hpp"
#include "ljsimd/neighbor.hpp"
#include "ljsimd/registry.hpp"
#include "ljsimd/system.hpp"

namespace {

using namespace ljsimd;

struct Prepared {
  ParticleSystem system;
  PairList pairs;
  SortedList sorted;
};

const Prepared& prepared(int cells) {
  static std::map<int, std::unique_ptr<Prepared>> cache;
  auto& slot = cache[cells];
  if (!slot) {
    slot = std::make_unique<Prepared>();
    slot->system = centered_fcc(cells);
    slot->pairs = build_pair_list(slot->system);
    slot->sorted = sort_pair_list(slot->pairs, slot->system.size());
  }
  return *slot;
}

void BM_Sweep(benchmark::State& state, KernelId id, VectorPath path) {
  const Prepared& p = prepared(static_cast<int>(state.range(0)));
  LayoutView view = to_layout(p.system, kernel_info(id).layout);
  const KernelInputs inputs{&p.pairs, &p.sorted};
  SweepStats st;
  for (auto _ : state) {
    st = run_kernel(id, view, inputs, p.system.params, path);
    benchmark::ClobberMemory();
  }
  state.counters["atoms"] = static_cast<double>(p.system.size());
  state.counters["pairs_in_cutoff"] = static_cast<double>(st.pairs_within_cutoff);
  state.counters["pairs/s"] = benchmark::Counter(static_cast<double>(st.pairs_visited),
                                                 benchmark::Counter::kIsIterationInvariantRate);
  state.SetLabel(std::string(to_string(path)));
}

void BM_BuildLists(benchmark::State& state) {
  const ParticleSystem s = centered_fcc(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    const PairList pairs = build_pair_list(s);
    benchmark::DoNotOptimize(sort_pair_list(pairs, s.size()).pair_count());
  }
  state.counters["atoms"] = static_cast<double>(s.size());
}

int register_all() {
  for (const KernelInfo& k : list_kernels()) {
    if (k.id == KernelId::Oracle) continue;
    std::vector<VectorPath> paths{VectorPath::Portable};
    if (k.width > 1 && intrinsic_available(k.width)) paths.push_back(VectorPath::Intrinsic);
    for (VectorPath path : paths) {
      const std::string name =
          k.width > 1 ? std::string(k.name) + "/" + std::string(to_string(path)) : std::string(k.name);
      benchmark::RegisterBenchmark(name.c_str(), BM_Sweep, k.id, path)
          ->Arg(8)
          ->Arg(16)
          ->Unit(benchmark::kMillisecond);
    }
  }
  benchmark::RegisterBenchmark("BuildLists", BM_BuildLists)
      ->Arg(8)
      ->Arg(10)
      ->Arg(13)
      ->Arg(16)
      ->Unit(benchmark::kMillisecond);
  return 0;
}

const int registered = register_all();

}  // namespace

BENCHMARK_MAIN();
