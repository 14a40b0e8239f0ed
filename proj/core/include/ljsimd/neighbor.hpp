#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ljsimd/system.hpp"

namespace ljsimd {

/// Linked-cell partition of the box with cell edge >= r_s.
struct CellIndex {
  int cells_per_edge = 0;
  double cell_edge = 0.0;
  /// Linear cell id of every atom.
  std::vector<std::int32_t> cell_of_atom;
  /// Atoms grouped by cell: cell c owns atoms[cell_start[c] .. cell_start[c+1]),
  /// in ascending atom index.
  std::vector<std::int32_t> cell_start;
  std::vector<AtomIndex> atoms;

  [[nodiscard]] std::size_t cell_count() const { return cell_start.empty() ? 0 : cell_start.size() - 1; }
  [[nodiscard]] int cell_id(int ix, int iy, int iz) const {
    return (ix * cells_per_edge + iy) * cells_per_edge + iz;
  }
  [[nodiscard]] std::span<const AtomIndex> atoms_in_cell(int cell) const {
    return std::span<const AtomIndex>(atoms).subspan(
        static_cast<std::size_t>(cell_start[cell]),
        static_cast<std::size_t>(cell_start[cell + 1] - cell_start[cell]));
  }
};

/// Requires r_s <= box_edge / 3 so the 27-cell stencil never wraps.
[[nodiscard]] CellIndex build_cell_index(const ParticleSystem& system, double search_radius);

struct AtomPair {
  AtomIndex i = 0;
  AtomIndex j = 0;
  friend constexpr auto operator<=>(const AtomPair&, const AtomPair&) = default;
};

/// Half pair list: every registered pair appears once with i < j.
class PairList {
 public:
  PairList() = default;
  /// Throws ContractError unless every pair satisfies 0 <= i < j < atom_count.
  PairList(std::size_t atom_count, std::vector<AtomPair> pairs);

  [[nodiscard]] std::size_t atom_count() const { return atom_count_; }
  [[nodiscard]] std::size_t size() const { return pairs_.size(); }
  [[nodiscard]] bool empty() const { return pairs_.empty(); }
  [[nodiscard]] std::span<const AtomPair> pairs() const { return pairs_; }

 private:
  std::size_t atom_count_ = 0;
  std::vector<AtomPair> pairs_;
};

/// Every pair (i < j) with squared distance < r_s^2, found by scanning each
/// cell against itself and its (up to) 26 neighbours. Open boundaries.
[[nodiscard]] PairList build_pair_list(const ParticleSystem& system, const CellIndex& cells,
                                       double search_radius);

/// Convenience: cell index plus pair list at params.search_radius.
[[nodiscard]] PairList build_pair_list(const ParticleSystem& system);

/// Pair list grouped by i-atom: partners of atom i are
/// j_indices[offsets[i] .. offsets[i+1]).
class SortedList {
 public:
  SortedList() = default;

  [[nodiscard]] std::size_t atom_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  [[nodiscard]] std::size_t pair_count() const { return j_indices_.size(); }
  [[nodiscard]] std::span<const std::int32_t> offsets() const { return offsets_; }
  [[nodiscard]] std::span<const AtomIndex> j_indices() const { return j_indices_; }
  [[nodiscard]] std::span<const AtomIndex> partners(std::size_t i) const {
    return std::span<const AtomIndex>(j_indices_).subspan(
        static_cast<std::size_t>(offsets_[i]),
        static_cast<std::size_t>(offsets_[i + 1] - offsets_[i]));
  }
  [[nodiscard]] std::size_t group_size(std::size_t i) const {
    return static_cast<std::size_t>(offsets_[i + 1] - offsets_[i]);
  }

 private:
  friend SortedList sort_pair_list(const PairList& pairs, std::size_t n);
  std::vector<std::int32_t> offsets_;
  std::vector<AtomIndex> j_indices_;
};

/// Stable O(N + P) counting sort of the pair list by i.
/// Throws ContractError if an index is >= n.
[[nodiscard]] SortedList sort_pair_list(const PairList& pairs, std::size_t n);

/// Bookkeeping (Verlet-list reuse) bound. The list stays valid while two atoms
/// moving head-on cannot have closed the r_s - r_c margin.
struct BookkeepingState {
  double margin = 0.0;
  double consumed = 0.0;
};

[[nodiscard]] BookkeepingState make_bookkeeping(const SimParams& params);
/// Adds the largest single-atom displacement of one step. Requires vmax_dt >= 0.
[[nodiscard]] BookkeepingState record_displacement(BookkeepingState state, double vmax_dt);
[[nodiscard]] bool is_list_valid(const BookkeepingState& state);

}  // namespace ljsimd
