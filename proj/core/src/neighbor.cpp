#include "ljsimd/neighbor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

namespace ljsimd {

CellIndex build_cell_index(const ParticleSystem& system, double search_radius) {
  const double L = system.params.box_edge;
  if (!(search_radius > 0.0) || search_radius > L / 3.0) {
    throw ConfigError(fmt::format(
        "search radius {} must be in (0, box_edge/3 = {}] for a 27-cell stencil", search_radius,
        L / 3.0));
  }
  if (system.size() > static_cast<std::size_t>(std::numeric_limits<AtomIndex>::max())) {
    throw ConfigError("too many atoms for 32-bit indices");
  }

  CellIndex ci;
  ci.cells_per_edge = static_cast<int>(std::floor(L / search_radius));
  ci.cell_edge = L / ci.cells_per_edge;
  const int m = ci.cells_per_edge;
  const auto ncell = static_cast<std::size_t>(m) * m * m;

  auto coord = [&](double x) {
    const int c = static_cast<int>(std::floor(x / ci.cell_edge));
    return std::clamp(c, 0, m - 1);
  };

  const std::size_t n = system.size();
  ci.cell_of_atom.resize(n);
  ci.cell_start.assign(ncell + 1, 0);
  for (std::size_t a = 0; a < n; ++a) {
    const Vec3 q = system.positions[a];
    const int c = ci.cell_id(coord(q.x), coord(q.y), coord(q.z));
    ci.cell_of_atom[a] = c;
    ++ci.cell_start[static_cast<std::size_t>(c) + 1];
  }
  for (std::size_t c = 0; c < ncell; ++c) ci.cell_start[c + 1] += ci.cell_start[c];

  ci.atoms.resize(n);
  std::vector<std::int32_t> fill(ci.cell_start.begin(), ci.cell_start.end() - 1);
  for (std::size_t a = 0; a < n; ++a) {
    ci.atoms[static_cast<std::size_t>(fill[static_cast<std::size_t>(ci.cell_of_atom[a])]++)] =
        static_cast<AtomIndex>(a);
  }
  return ci;
}

PairList::PairList(std::size_t atom_count, std::vector<AtomPair> pairs)
    : atom_count_(atom_count), pairs_(std::move(pairs)) {
  for (const AtomPair& p : pairs_) {
    if (p.i < 0 || p.i >= p.j || static_cast<std::size_t>(p.j) >= atom_count_) {
      throw ContractError(
          fmt::format("pair ({}, {}) violates 0 <= i < j < {}", p.i, p.j, atom_count_));
    }
  }
}

PairList build_pair_list(const ParticleSystem& system, const CellIndex& cells,
                         double search_radius) {
  if (cells.cell_of_atom.size() != system.size()) {
    throw ContractError("cell index was built for a different system");
  }
  if (cells.cell_edge < search_radius) {
    throw ContractError("cell edge is smaller than the search radius");
  }
  const double rs2 = search_radius * search_radius;
  const int m = cells.cells_per_edge;
  const auto& q = system.positions;

  std::vector<AtomPair> pairs;
  for (int ix = 0; ix < m; ++ix) {
    for (int iy = 0; iy < m; ++iy) {
      for (int iz = 0; iz < m; ++iz) {
        const auto home = cells.atoms_in_cell(cells.cell_id(ix, iy, iz));
        if (home.empty()) continue;
        for (int dx = -1; dx <= 1; ++dx) {
          for (int dy = -1; dy <= 1; ++dy) {
            for (int dz = -1; dz <= 1; ++dz) {
              const int jx = ix + dx, jy = iy + dy, jz = iz + dz;
              if (jx < 0 || jy < 0 || jz < 0 || jx >= m || jy >= m || jz >= m) continue;
              const auto other = cells.atoms_in_cell(cells.cell_id(jx, jy, jz));
              for (AtomIndex i : home) {
                const Vec3 qi = q[static_cast<std::size_t>(i)];
                for (AtomIndex j : other) {
                  if (j <= i) continue;
                  const Vec3 d = q[static_cast<std::size_t>(j)] - qi;
                  if (d.dot(d) < rs2) pairs.push_back({i, j});
                }
              }
            }
          }
        }
      }
    }
  }
  return PairList(system.size(), std::move(pairs));
}

PairList build_pair_list(const ParticleSystem& system) {
  const double rs = system.params.search_radius;
  return build_pair_list(system, build_cell_index(system, rs), rs);
}

SortedList sort_pair_list(const PairList& pairs, std::size_t n) {
  if (pairs.size() > static_cast<std::size_t>(std::numeric_limits<std::int32_t>::max())) {
    throw ContractError("pair count exceeds 32-bit offsets");
  }
  SortedList out;
  out.offsets_.assign(n + 1, 0);
  for (const AtomPair& p : pairs.pairs()) {
    if (p.i < 0 || p.j < 0 || static_cast<std::size_t>(p.i) >= n ||
        static_cast<std::size_t>(p.j) >= n) {
      throw ContractError(fmt::format("pair ({}, {}) out of range for n = {}", p.i, p.j, n));
    }
    ++out.offsets_[static_cast<std::size_t>(p.i) + 1];
  }
  for (std::size_t i = 0; i < n; ++i) out.offsets_[i + 1] += out.offsets_[i];

  out.j_indices_.resize(pairs.size());
  std::vector<std::int32_t> cursor(out.offsets_.begin(), out.offsets_.end() - 1);
  for (const AtomPair& p : pairs.pairs()) {
    out.j_indices_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(p.i)]++)] = p.j;
  }
  return out;
}

BookkeepingState make_bookkeeping(const SimParams& params) {
  return {params.search_radius - params.cutoff, 0.0};
}

BookkeepingState record_displacement(BookkeepingState state, double vmax_dt) {
  if (!(vmax_dt >= 0.0)) {
    throw ConfigError("displacement bound must be non-negative");
  }
  state.consumed += vmax_dt;
  return state;
}

bool is_list_valid(const BookkeepingState& state) { return 2.0 * state.consumed < state.margin; }

}  // namespace ljsimd
