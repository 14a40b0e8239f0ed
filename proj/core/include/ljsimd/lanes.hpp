#pragma once

// Portable lane vectors. These are the scalar-emulation counterparts of the
// 256-bit (W = 4) and 512-bit (W = 8) registers used by the intrinsic kernels;
// every operation is elementwise and rounds exactly like its packed-double
// instruction.

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>

#include "ljsimd/layout.hpp"

namespace ljsimd {

template <std::size_t W>
struct LaneMask {
  static_assert(W <= 32);
  std::uint32_t bits = 0;

  static constexpr LaneMask all() { return {W == 32 ? ~0u : (1u << W) - 1u}; }
  static constexpr LaneMask first(std::size_t k) {
    return {k >= W ? all().bits : (1u << k) - 1u};
  }
  [[nodiscard]] constexpr bool test(std::size_t lane) const { return (bits >> lane) & 1u; }
  [[nodiscard]] constexpr int count() const { return std::popcount(bits); }
  [[nodiscard]] constexpr bool none() const { return bits == 0; }
  friend constexpr LaneMask operator&(LaneMask a, LaneMask b) { return {a.bits & b.bits}; }
  friend constexpr bool operator==(LaneMask, LaneMask) = default;
};

template <std::size_t W>
struct LaneVec {
  std::array<double, W> v{};

  static constexpr LaneVec broadcast(double s) {
    LaneVec r;
    r.v.fill(s);
    return r;
  }
  constexpr double& operator[](std::size_t k) { return v[k]; }
  constexpr double operator[](std::size_t k) const { return v[k]; }

#define LJSIMD_LANE_OP(op)                                          \
  friend constexpr LaneVec operator op(const LaneVec& a, const LaneVec& b) { \
    LaneVec r;                                                      \
    for (std::size_t k = 0; k < W; ++k) r.v[k] = a.v[k] op b.v[k];  \
    return r;                                                       \
  }
  LJSIMD_LANE_OP(+)
  LJSIMD_LANE_OP(-)
  LJSIMD_LANE_OP(*)
  LJSIMD_LANE_OP(/)
#undef LJSIMD_LANE_OP

  friend constexpr bool operator==(const LaneVec&, const LaneVec&) = default;
};

template <std::size_t W>
struct LaneIndex {
  std::array<std::int32_t, W> v{};
  constexpr std::int32_t operator[](std::size_t k) const { return v[k]; }
};

/// Lanes where a < b.
template <std::size_t W>
constexpr LaneMask<W> compare_lt(const LaneVec<W>& a, const LaneVec<W>& b) {
  LaneMask<W> m;
  for (std::size_t k = 0; k < W; ++k) m.bits |= static_cast<std::uint32_t>(a.v[k] < b.v[k]) << k;
  return m;
}

template <std::size_t W>
constexpr LaneMask<W> compare_lt(const LaneIndex<W>& a, const LaneIndex<W>& b) {
  LaneMask<W> m;
  for (std::size_t k = 0; k < W; ++k) m.bits |= static_cast<std::uint32_t>(a.v[k] < b.v[k]) << k;
  return m;
}

/// mask ? a : b, lane by lane.
template <std::size_t W>
constexpr LaneVec<W> select(LaneMask<W> mask, const LaneVec<W>& a, const LaneVec<W>& b) {
  LaneVec<W> r;
  for (std::size_t k = 0; k < W; ++k) r.v[k] = mask.test(k) ? a.v[k] : b.v[k];
  return r;
}

/// Lanes outside mask become +0.0.
template <std::size_t W>
constexpr LaneVec<W> zero_masked(LaneMask<W> keep, const LaneVec<W>& a) {
  return select(keep, a, LaneVec<W>::broadcast(0.0));
}

/// Sum of lanes in order 0 .. W-1.
template <std::size_t W>
constexpr double reduce_add(const LaneVec<W>& a) {
  double s = a.v[0];
  for (std::size_t k = 1; k < W; ++k) s += a.v[k];
  return s;
}

struct Transposed4 {
  LaneVec<4> x, y, z;
};

/// Four (dx, dy, dz, pad) records into three coordinate vectors; pad dropped.
[[nodiscard]] Transposed4 transpose4(const LaneVec<4>& r0, const LaneVec<4>& r1,
                                     const LaneVec<4>& r2, const LaneVec<4>& r3);

/// Inverse of transpose4: record k = (x[k], y[k], z[k], 0).
[[nodiscard]] std::array<LaneVec<4>, 4> untranspose4(const Transposed4& t);

struct LaneVec3x8 {
  LaneVec<8> x, y, z;
};

/// Storage element index of coordinate `field` (0..2 position, 3..5 momentum)
/// of `atom`: the atom index itself within the SoA array for that field, or
/// atom * 8 + field offset for AoS8.
[[nodiscard]] std::size_t gather_element(LayoutTag tag, std::int32_t atom, int field);

/// Masked gather of j positions from an SoA or AoS8 view. Lanes outside
/// `mask` keep the values of `fallback`.
[[nodiscard]] LaneVec3x8 gather_positions(const LayoutView& view, const LaneIndex<8>& j_idx,
                                          LaneMask<8> mask, const LaneVec3x8& fallback = {});
[[nodiscard]] LaneVec3x8 gather_momenta(const LayoutView& view, const LaneIndex<8>& j_idx,
                                        LaneMask<8> mask, const LaneVec3x8& fallback = {});

/// Masked scatter of j momenta. Active lanes must name distinct atoms.
void scatter_momenta(LayoutView& view, const LaneIndex<8>& j_idx, LaneMask<8> mask,
                     const LaneVec3x8& p);

}  // namespace ljsimd
