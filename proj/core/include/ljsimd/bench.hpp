#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ljsimd/registry.hpp"

namespace ljsimd {

enum class SystemSource { Paper, Scaled, File };

struct BenchConfig {
  std::vector<KernelId> kernels;
  SystemSource source = SystemSource::Scaled;
  int cells_per_side = 16;
  std::string file;
  int repeats = 3;
  /// Untimed full runs (n_sweeps sweeps each) before timing starts.
  int warmup = 1;
  int n_sweeps = 100;
  double search_radius = 3.3;
  double dt = 1.0;
  /// nullopt picks the intrinsic path wherever it is available.
  std::optional<VectorPath> path;
  /// Replaces build_pair_list; used to check that list construction is not
  /// part of the timed region.
  std::function<PairList(const ParticleSystem&)> pair_list_builder;

  /// Throws ConfigError on repeats < 1, warmup < 0 or an empty kernel set.
  void validate() const;
};

struct BenchResult {
  KernelId kernel = KernelId::Oracle;
  LayoutTag layout = LayoutTag::SoA;
  VectorPath path = VectorPath::Portable;
  std::size_t n = 0;
  /// Wall time of each timed run of n_sweeps sweeps, seconds.
  std::vector<double> samples_s;
  double min_s = 0.0;
  double mean_s = 0.0;
  double stddev_s = 0.0;
  /// Interacting pairs found by one sweep.
  std::uint64_t pairs_in_cutoff = 0;
  /// Sum of |p| over every momentum component after the last repeat.
  double checksum = 0.0;
};

/// System described by `config` (119164-atom configuration, centered FCC block, or
/// an extended-XYZ file), with search radius and dt applied.
[[nodiscard]] ParticleSystem make_bench_system(const BenchConfig& config);

/// Times every requested kernel. List construction and layout conversion are
/// done before the clock starts; momenta are zeroed before every repeat.
[[nodiscard]] std::vector<BenchResult> run_bench(const BenchConfig& config);

/// Same, over a system the caller already built.
[[nodiscard]] std::vector<BenchResult> run_bench(const BenchConfig& config,
                                                 const ParticleSystem& system);

[[nodiscard]] double momentum_checksum(const LayoutView& view);

enum class ReportFormat { Csv, Json };

inline constexpr std::string_view kCsvHeader =
    "kernel,layout,path,n,min_s,mean_s,stddev_s,pairs_in_cutoff,checksum";

/// Results ordered by kernel id.
[[nodiscard]] std::string report(std::vector<BenchResult> results, ReportFormat format);

/// Parses the JSON produced by report(). Throws ConfigError on bad input.
[[nodiscard]] std::vector<BenchResult> parse_json_report(std::string_view text);

}  // namespace ljsimd
