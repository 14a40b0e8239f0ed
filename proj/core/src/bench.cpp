#include "ljsimd/bench.hpp"

#include <chrono>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "ljsimd/xyz.hpp"

namespace ljsimd {

void BenchConfig::validate() const {
  if (kernels.empty()) throw ConfigError("no kernels requested");
  if (repeats < 1) throw ConfigError("repeats must be >= 1");
  if (warmup < 0) throw ConfigError("warmup must be >= 0");
  if (n_sweeps < 1) throw ConfigError("sweeps must be >= 1");
  if (source == SystemSource::Scaled && cells_per_side < 1) {
    throw ConfigError("cells must be >= 1");
  }
  if (source == SystemSource::File && file.empty()) throw ConfigError("no input file given");
}

ParticleSystem make_bench_system(const BenchConfig& config) {
  SimParams p;
  p.search_radius = config.search_radius;
  p.dt = config.dt;
  p.n_sweeps = config.n_sweeps;
  ParticleSystem s;
  switch (config.source) {
    case SystemSource::Paper:
      s = paper_benchmark_system();
      s.params.search_radius = config.search_radius;
      s.params.dt = config.dt;
      s.params.n_sweeps = config.n_sweeps;
      break;
    case SystemSource::Scaled:
      s = centered_fcc(config.cells_per_side, p);
      break;
    case SystemSource::File:
      s = read_xyz_file(config.file);
      s.params.search_radius = config.search_radius;
      s.params.dt = config.dt;
      s.params.n_sweeps = config.n_sweeps;
      break;
  }
  s.params.validate();
  s.validate();
  return s;
}

double momentum_checksum(const LayoutView& view) {
  double sum = 0.0;
  for (std::size_t i = 0; i < view.size(); ++i) {
    const Vec3 p = view.momentum(i);
    sum += std::abs(p.x) + std::abs(p.y) + std::abs(p.z);
  }
  return sum;
}

std::vector<BenchResult> run_bench(const BenchConfig& config) {
  config.validate();
  return run_bench(config, make_bench_system(config));
}

std::vector<BenchResult> run_bench(const BenchConfig& config, const ParticleSystem& system) {
  config.validate();
  const SimParams& params = system.params;

  const PairList pairs =
      config.pair_list_builder ? config.pair_list_builder(system) : build_pair_list(system);
  const SortedList sorted = sort_pair_list(pairs, system.size());
  const KernelInputs inputs{&pairs, &sorted};

  std::vector<BenchResult> results;
  for (KernelId id : config.kernels) {
    const KernelInfo& info = kernel_info(id);
    const VectorPath path =
        effective_path(id, config.path.value_or(best_path(std::max(info.width, 4))));
    LayoutView view = to_layout(system, info.layout);

    auto run_once = [&] {
      SweepStats last;
      for (int s = 0; s < config.n_sweeps; ++s) last = run_kernel(id, view, inputs, params, path);
      return last;
    };

    for (int w = 0; w < config.warmup; ++w) {
      view.reset_momenta();
      (void)run_once();
    }

    BenchResult r;
    r.kernel = id;
    r.layout = info.layout;
    r.path = path;
    r.n = system.size();
    for (int rep = 0; rep < config.repeats; ++rep) {
      view.reset_momenta();
      const auto t0 = std::chrono::steady_clock::now();
      const SweepStats st = run_once();
      const auto t1 = std::chrono::steady_clock::now();
      r.samples_s.push_back(std::chrono::duration<double>(t1 - t0).count());
      r.pairs_in_cutoff = st.pairs_within_cutoff;
    }
    const auto& xs = r.samples_s;
    r.min_s = *std::min_element(xs.begin(), xs.end());
    r.mean_s = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
    if (xs.size() > 1) {
      double ss = 0.0;
      for (double x : xs) ss += (x - r.mean_s) * (x - r.mean_s);
      r.stddev_s = std::sqrt(ss / static_cast<double>(xs.size() - 1));
    }
    r.checksum = momentum_checksum(view);
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace ljsimd
