#pragma once

#include <cstddef>
#include <vector>

#include "ljsimd/types.hpp"

namespace ljsimd {

/// Canonical particle state. Layout views are converted from and back to it.
struct ParticleSystem {
  std::vector<Vec3> positions;
  std::vector<Vec3> momenta;
  SimParams params;

  [[nodiscard]] std::size_t size() const { return positions.size(); }

  void reset_momenta();

  /// Throws ConfigError if sizes disagree, a coordinate is not finite, or a
  /// position lies outside [0, box_edge)^3.
  void validate() const;
};

/// FCC lattice of 4 * cells^3 atoms with basis {(0,0,0),(0,½,½),(½,0,½),(½,½,0)}
/// scaled by lattice_constant and offset by origin. Momenta are zero.
/// Throws ConfigError if the block does not fit inside params.box_edge.
[[nodiscard]] ParticleSystem build_fcc(int cells_per_side, double lattice_constant, Vec3 origin,
                                       const SimParams& params = {});

/// Lattice constant giving a local number density of `density` for FCC.
[[nodiscard]] double fcc_lattice_constant(double density);

/// FCC block of `cells_per_side` cells at density 1.0 centered in the box.
/// The box is params.box_edge unless the block plus a search-radius margin on
/// each side needs more, in which case the box is grown to fit.
[[nodiscard]] ParticleSystem centered_fcc(int cells_per_side, const SimParams& params = {});

/// The benchmark configuration: 31^3 FCC cells (119164 atoms) at local density
/// 1.0, centered in a 100 sigma box, r_c = 3.0, 100 sweeps.
[[nodiscard]] ParticleSystem paper_benchmark_system();

inline constexpr int kBenchmarkCellsPerSide = 31;
inline constexpr std::size_t kBenchmarkAtomCount = 119164;

}  // namespace ljsimd
