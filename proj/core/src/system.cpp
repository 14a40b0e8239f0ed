#include "ljsimd/system.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include <fmt/format.h>

#include "ljsimd/pair_force.hpp"

namespace ljsimd {

void SimParams::validate() const {
  if (!(cutoff > 0.0)) {
    throw ConfigError(fmt::format("cutoff must be positive, got {}", cutoff));
  }
  if (!(search_radius > cutoff)) {
    throw ConfigError(
        fmt::format("search radius {} must exceed cutoff {}", search_radius, cutoff));
  }
  if (!(box_edge > 2.0 * search_radius)) {
    throw ConfigError(fmt::format("box edge {} must exceed twice the search radius {}",
                                  box_edge, search_radius));
  }
  if (n_sweeps < 1) {
    throw ConfigError("n_sweeps must be at least 1");
  }
}

PairImpulse compute_pair_force(Vec3 qi, Vec3 qj, double dt) {
  const Vec3 r = qj - qi;
  const double r2 = r.x * r.x + r.y * r.y + r.z * r.z;
  if (r2 == 0.0) {
    throw DomainError("compute_pair_force: coincident atoms");
  }
  return {pair_terms(r2, dt).df, r};
}

double potential_energy(double r2, double cutoff) {
  if (!(r2 > 0.0)) {
    throw DomainError("potential_energy: squared distance must be positive");
  }
  const double rc2 = cutoff * cutoff;
  if (r2 >= rc2) {
    return 0.0;
  }
  auto unshifted = [](double s2) {
    const double inv6 = 1.0 / (s2 * s2 * s2);
    return 4.0 * (inv6 * inv6 - inv6);
  };
  return unshifted(r2) - unshifted(rc2);
}

void ParticleSystem::reset_momenta() { std::fill(momenta.begin(), momenta.end(), Vec3{}); }

void ParticleSystem::validate() const {
  if (momenta.size() != positions.size()) {
    throw ConfigError(fmt::format("{} positions but {} momenta", positions.size(),
                                  momenta.size()));
  }
  const double L = params.box_edge;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    const Vec3 q = positions[i];
    if (!q.finite() || !momenta[i].finite()) {
      throw ConfigError(fmt::format("atom {} has a non-finite coordinate", i));
    }
    if (q.x < 0.0 || q.y < 0.0 || q.z < 0.0 || q.x >= L || q.y >= L || q.z >= L) {
      throw ConfigError(
          fmt::format("atom {} at ({}, {}, {}) is outside the box [0, {})", i, q.x, q.y, q.z, L));
    }
  }
}

ParticleSystem build_fcc(int cells_per_side, double lattice_constant, Vec3 origin,
                         const SimParams& params) {
  if (cells_per_side < 1) {
    throw ConfigError("cells_per_side must be at least 1");
  }
  if (!(lattice_constant > 0.0)) {
    throw ConfigError("lattice constant must be positive");
  }
  const double extent = cells_per_side * lattice_constant;
  const double L = params.box_edge;
  for (double o : {origin.x, origin.y, origin.z}) {
    if (o < 0.0 || o + extent > L) {
      throw ConfigError(fmt::format("FCC block of edge {} at origin offset {} exceeds box {}",
                                    extent, o, L));
    }
  }

  static constexpr std::array<Vec3, 4> kBasis{
      {{0.0, 0.0, 0.0}, {0.0, 0.5, 0.5}, {0.5, 0.0, 0.5}, {0.5, 0.5, 0.0}}};

  ParticleSystem s;
  s.params = params;
  const auto n = static_cast<std::size_t>(4) * cells_per_side * cells_per_side * cells_per_side;
  s.positions.reserve(n);
  for (int ix = 0; ix < cells_per_side; ++ix) {
    for (int iy = 0; iy < cells_per_side; ++iy) {
      for (int iz = 0; iz < cells_per_side; ++iz) {
        for (const Vec3& b : kBasis) {
          s.positions.push_back({origin.x + (ix + b.x) * lattice_constant,
                                 origin.y + (iy + b.y) * lattice_constant,
                                 origin.z + (iz + b.z) * lattice_constant});
        }
      }
    }
  }
  s.momenta.assign(n, Vec3{});
  return s;
}

double fcc_lattice_constant(double density) {
  if (!(density > 0.0)) {
    throw ConfigError("density must be positive");
  }
  return std::cbrt(4.0 / density);
}

ParticleSystem centered_fcc(int cells_per_side, const SimParams& params) {
  if (cells_per_side < 1) {
    throw ConfigError("cells_per_side must be at least 1");
  }
  const double a = fcc_lattice_constant(1.0);
  const double extent = cells_per_side * a;
  SimParams p = params;
  p.box_edge = std::max(params.box_edge, std::ceil(extent + 2.0 * params.search_radius));
  const double offset = 0.5 * (p.box_edge - extent);
  return build_fcc(cells_per_side, a, {offset, offset, offset}, p);
}

ParticleSystem paper_benchmark_system() {
  SimParams p;
  p.box_edge = 100.0;
  p.cutoff = 3.0;
  p.n_sweeps = 100;
  return centered_fcc(kBenchmarkCellsPerSide, p);
}

}  // namespace ljsimd
