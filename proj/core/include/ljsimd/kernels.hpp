#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "ljsimd/lanes.hpp"
#include "ljsimd/layout.hpp"
#include "ljsimd/neighbor.hpp"

namespace ljsimd {

/// Which implementation of a vector kernel runs. Both paths perform the same
/// lane operations in the same order and give bit-identical results.
enum class VectorPath { Portable, Intrinsic };

[[nodiscard]] std::string_view to_string(VectorPath path);

/// True when the intrinsic path for `width` (4: AVX2, 8: AVX-512F) was compiled
/// in and the host CPU supports it.
[[nodiscard]] bool intrinsic_available(int width);

/// Intrinsic if available for `width`, otherwise portable.
[[nodiscard]] VectorPath best_path(int width);

struct SweepStats {
  std::uint64_t pairs_visited = 0;
  std::uint64_t pairs_within_cutoff = 0;
  /// Lane blocks executed by a vector kernel.
  std::uint64_t vector_blocks = 0;
  /// Pairs handled by a scalar remainder loop after the vector blocks.
  std::uint64_t tail_pairs = 0;

  SweepStats& operator+=(const SweepStats& o) {
    pairs_visited += o.pairs_visited;
    pairs_within_cutoff += o.pairs_within_cutoff;
    vector_blocks += o.vector_blocks;
    tail_pairs += o.tail_pairs;
    return *this;
  }
  friend bool operator==(const SweepStats&, const SweepStats&) = default;
};

/// Per-group instrumentation for vector kernels, filled when passed non-null.
struct SweepTrace {
  std::vector<std::uint32_t> blocks_per_group;
  std::vector<std::uint32_t> tail_per_group;
};

/// Reference force sweep over all i < j in ascending order. Returns the
/// momentum change of every atom. Throws DomainError on coincident atoms.
[[nodiscard]] std::vector<Vec3> oracle_sweep(const ParticleSystem& system,
                                             SweepStats* stats = nullptr);

/// Flat pair-list sweep; loads both atoms for every pair. SoA only.
SweepStats pair_sweep(LayoutView& view, const PairList& pairs, const SimParams& params);

/// Sorted-list sweep with the i-atom held in locals. Any layout.
SweepStats sorted_swp_sweep(LayoutView& view, const SortedList& list, const SimParams& params);
SweepStats sorted_sweep(LayoutView& view, const SortedList& list, const SimParams& params);

/// Width-4 kernel over padded records (AoS4, or AoS8 position/momentum halves):
/// whole-record loads, transpose4, cutoff mask, per-record momentum
/// read-modify-write for j, scalar loop for the last n mod 4 partners.
SweepStats v4_sweep(LayoutView& view, const SortedList& list, const SimParams& params, bool swp,
                    VectorPath path, SweepTrace* trace = nullptr);

/// Width-8 kernel with masked gather/scatter (SoA or AoS8). The remainder
/// loop is replaced by a lane-counter mask and no conflict detection is done:
/// partners of one i are distinct.
SweepStats v8_rle_sweep(LayoutView& view, const SortedList& list, const SimParams& params,
                        bool swp, VectorPath path, SweepTrace* trace = nullptr);

#if defined(LJSIMD_HAVE_INTRINSICS)
/// AVX2 register transpose; callers must check intrinsic_available(4).
[[nodiscard]] Transposed4 transpose4_avx2(const LaneVec<4>& r0, const LaneVec<4>& r1,
                                          const LaneVec<4>& r2, const LaneVec<4>& r3);
#endif

}  // namespace ljsimd
