#include <fmt/format.h>

#include "intrinsic_kernels.hpp"
#include "kernel_access.hpp"
#include "ljsimd/kernels.hpp"

namespace ljsimd {

using detail::AoSAccess;
using detail::GatherAccess;
using detail::interact_scalar;

std::string_view to_string(VectorPath path) {
  return path == VectorPath::Intrinsic ? "intrinsic" : "portable";
}

bool intrinsic_available(int width) {
#if defined(LJSIMD_HAVE_INTRINSICS)
  if (width == 4) return __builtin_cpu_supports("avx2");
  if (width == 8) return __builtin_cpu_supports("avx512f");
#else
  (void)width;
#endif
  return false;
}

VectorPath best_path(int width) {
  return intrinsic_available(width) ? VectorPath::Intrinsic : VectorPath::Portable;
}

namespace {

void require_intrinsic(int width) {
  if (!intrinsic_available(width)) {
    throw ConfigError(fmt::format(
        "the {}-bit intrinsic path is not available on this build or host", width * 64));
  }
}

void require_sorted(const LayoutView& view, const SortedList& list, const char* who) {
  if (list.atom_count() != view.size()) {
    throw ContractError(fmt::format("{}: list covers {} atoms but the view holds {}", who,
                                    list.atom_count(), view.size()));
  }
}

// ---------------------------------------------------------------------------
// width 4 over padded records

struct Block4 {
  std::size_t j[4];
  Transposed4 d;
  LaneVec<4> r2;
};

template <std::size_t Stride>
SweepStats v4_portable(LayoutView& view, const SortedList& list, const SimParams& params,
                       bool swp, SweepTrace* trace) {
  const AoSAccess<Stride> a(view);
  const double rc2 = params.cutoff2();
  const double dt = params.dt;
  const auto v_rc2 = LaneVec<4>::broadcast(rc2);
  const auto v_48 = LaneVec<4>::broadcast(48.0);
  const auto v_24 = LaneVec<4>::broadcast(24.0);
  const auto v_dt = LaneVec<4>::broadcast(dt);
  const auto offsets = list.offsets();
  const AtomIndex* js = list.j_indices().data();

  auto load_record = [&](std::size_t atom) {
    const double* r = a.q + atom * Stride;
    return LaneVec<4>{{r[0], r[1], r[2], r[3]}};
  };

  SweepStats st;
  st.pairs_visited = list.pair_count();
  for (std::size_t i = 0; i < list.atom_count(); ++i) {
    const auto begin = static_cast<std::size_t>(offsets[i]);
    const auto end = static_cast<std::size_t>(offsets[i + 1]);
    const std::size_t nblk = (end - begin) / 4;
    const std::size_t tail_begin = begin + 4 * nblk;
    if (trace) {
      trace->blocks_per_group.push_back(static_cast<std::uint32_t>(nblk));
      trace->tail_per_group.push_back(static_cast<std::uint32_t>(end - tail_begin));
    }
    if (begin == end) continue;

    const LaneVec<4> qi = load_record(i);
    double pix = a.mx(i);
    double piy = a.my(i);
    double piz = a.mz(i);
    LaneVec<4> acc_x{}, acc_y{}, acc_z{};

    // A + B: four record loads, relative vectors, transpose, r^2
    auto load_block = [&](std::size_t k) {
      Block4 b;
      LaneVec<4> rel[4];
      for (std::size_t l = 0; l < 4; ++l) {
        b.j[l] = static_cast<std::size_t>(js[k + l]);
        rel[l] = load_record(b.j[l]) - qi;
      }
      b.d = transpose4(rel[0], rel[1], rel[2], rel[3]);
      b.r2 = b.d.x * b.d.x + b.d.y * b.d.y + b.d.z * b.d.z;
      return b;
    };
    // C + D: df, cutoff mask, accumulate p_i, read-modify-write p_j
    auto apply_block = [&](const Block4& b) {
      const LaneVec<4> r6 = b.r2 * b.r2 * b.r2;
      const LaneVec<4> r14 = r6 * r6 * b.r2;
      const LaneMask<4> in_range = compare_lt(b.r2, v_rc2);
      const LaneVec<4> df = zero_masked(in_range, (v_48 - v_24 * r6) * v_dt / r14);
      const LaneVec<4> fx = df * b.d.x;
      const LaneVec<4> fy = df * b.d.y;
      const LaneVec<4> fz = df * b.d.z;
      acc_x = acc_x + fx;
      acc_y = acc_y + fy;
      acc_z = acc_z + fz;
      for (std::size_t l = 0; l < 4; ++l) {
        a.mx(b.j[l]) += fx[l];
        a.my(b.j[l]) += fy[l];
        a.mz(b.j[l]) += fz[l];
      }
      st.pairs_within_cutoff += static_cast<std::uint64_t>(in_range.count());
    };

    if (!swp) {
      for (std::size_t blk = 0; blk < nblk; ++blk) apply_block(load_block(begin + 4 * blk));
    } else if (nblk > 0) {
      Block4 cur = load_block(begin);
      for (std::size_t blk = 1; blk < nblk; ++blk) {
        const Block4 next = load_block(begin + 4 * blk);
        apply_block(cur);
        cur = next;
      }
      apply_block(cur);
    }
    st.vector_blocks += nblk;

    pix -= reduce_add(acc_x);
    piy -= reduce_add(acc_y);
    piz -= reduce_add(acc_z);
    for (std::size_t k = tail_begin; k < end; ++k) {
      st.pairs_within_cutoff += static_cast<std::uint64_t>(interact_scalar(
          a, static_cast<std::size_t>(js[k]), a.x(i), a.y(i), a.z(i), pix, piy, piz, rc2, dt));
    }
    st.tail_pairs += end - tail_begin;
    a.mx(i) = pix;
    a.my(i) = piy;
    a.mz(i) = piz;
  }
  return st;
}

// ---------------------------------------------------------------------------
// width 8, gather/scatter, remainder loop elimination

struct Block8 {
  LaneMask<8> loop;
  LaneIndex<8> idx;
  LaneVec<8> dx, dy, dz, r2;
};

SweepStats v8_portable(LayoutView& view, const SortedList& list, const SimParams& params,
                       bool swp, SweepTrace* trace) {
  const GatherAccess g(view);
  const double rc = params.cutoff;
  const auto v_rc2 = LaneVec<8>::broadcast(params.cutoff2());
  const auto v_48 = LaneVec<8>::broadcast(48.0);
  const auto v_24 = LaneVec<8>::broadcast(24.0);
  const auto v_dt = LaneVec<8>::broadcast(params.dt);
  const auto offsets = list.offsets();
  const AtomIndex* js = list.j_indices().data();

  SweepStats st;
  for (std::size_t i = 0; i < list.atom_count(); ++i) {
    const auto begin = static_cast<std::size_t>(offsets[i]);
    const auto n = static_cast<std::int32_t>(offsets[i + 1] - offsets[i]);
    if (trace) {
      trace->blocks_per_group.push_back(static_cast<std::uint32_t>((n + 7) / 8));
      trace->tail_per_group.push_back(0);
    }
    if (n == 0) continue;

    const std::size_t ei = g.element(static_cast<std::int32_t>(i));
    const double qix = g.q[0][ei];
    const double qiy = g.q[1][ei];
    const double qiz = g.q[2][ei];
    const auto v_qix = LaneVec<8>::broadcast(qix);
    const auto v_qiy = LaneVec<8>::broadcast(qiy);
    const auto v_qiz = LaneVec<8>::broadcast(qiz);
    // Inactive lanes are parked 2 r_c away along x so the cutoff mask drops them.
    const auto park_x = LaneVec<8>::broadcast(qix + 2.0 * rc);

    LaneIndex<8> counter{{0, 1, 2, 3, 4, 5, 6, 7}};
    LaneIndex<8> n_vec;
    n_vec.v.fill(n);
    LaneVec<8> acc_x{}, acc_y{}, acc_z{};

    // A + B: loop mask, masked index load, masked gather of q_j, r^2
    auto load_block = [&](std::size_t k) {
      Block8 b;
      b.loop = compare_lt(counter, n_vec);
      for (auto& c : counter.v) c += 8;
      for (std::size_t l = 0; l < 8; ++l) {
        b.idx.v[l] = b.loop.test(l) ? js[k + l] : 0;
      }
      LaneVec<8> x, y, z;
      for (std::size_t l = 0; l < 8; ++l) {
        if (!b.loop.test(l)) continue;
        const std::size_t e = g.element(b.idx[l]);
        x[l] = g.q[0][e];
        y[l] = g.q[1][e];
        z[l] = g.q[2][e];
      }
      x = select(b.loop, x, park_x);
      y = select(b.loop, y, v_qiy);
      z = select(b.loop, z, v_qiz);
      b.dx = x - v_qix;
      b.dy = y - v_qiy;
      b.dz = z - v_qiz;
      b.r2 = b.dx * b.dx + b.dy * b.dy + b.dz * b.dz;
      return b;
    };
    // C + D: df, m_total = m_cutoff & m_loop, masked gather/update/scatter of p_j
    auto apply_block = [&](const Block8& b) {
      const LaneVec<8> r6 = b.r2 * b.r2 * b.r2;
      const LaneVec<8> r14 = r6 * r6 * b.r2;
      const LaneMask<8> total = compare_lt(b.r2, v_rc2) & b.loop;
      const LaneVec<8> df = zero_masked(total, (v_48 - v_24 * r6) * v_dt / r14);
      const LaneVec<8> fx = df * b.dx;
      const LaneVec<8> fy = df * b.dy;
      const LaneVec<8> fz = df * b.dz;
      acc_x = acc_x + fx;
      acc_y = acc_y + fy;
      acc_z = acc_z + fz;
      LaneVec<8> px{}, py{}, pz{};
      for (std::size_t l = 0; l < 8; ++l) {
        if (!b.loop.test(l)) continue;
        const std::size_t e = g.element(b.idx[l]);
        px[l] = g.p[0][e];
        py[l] = g.p[1][e];
        pz[l] = g.p[2][e];
      }
      px = px + fx;
      py = py + fy;
      pz = pz + fz;
      for (std::size_t l = 0; l < 8; ++l) {
        if (!b.loop.test(l)) continue;
        const std::size_t e = g.element(b.idx[l]);
        g.p[0][e] = px[l];
        g.p[1][e] = py[l];
        g.p[2][e] = pz[l];
      }
      st.pairs_visited += static_cast<std::uint64_t>(b.loop.count());
      st.pairs_within_cutoff += static_cast<std::uint64_t>(total.count());
      ++st.vector_blocks;
    };

    if (!swp) {
      for (std::int32_t k = 0; k < n; k += 8) apply_block(load_block(begin + k));
    } else {
      Block8 cur = load_block(begin);
      for (std::int32_t k = 8; k < n; k += 8) {
        const Block8 next = load_block(begin + k);
        apply_block(cur);
        cur = next;
      }
      apply_block(cur);
    }

    g.p[0][ei] -= reduce_add(acc_x);
    g.p[1][ei] -= reduce_add(acc_y);
    g.p[2][ei] -= reduce_add(acc_z);
  }
  return st;
}

}  // namespace

SweepStats v4_sweep(LayoutView& view, const SortedList& list, const SimParams& params, bool swp,
                    VectorPath path, SweepTrace* trace) {
  if (view.tag() != LayoutTag::AoS4 && view.tag() != LayoutTag::AoS8) {
    throw ContractError("v4_sweep requires the AoS4 or AoS8 layout");
  }
  require_sorted(view, list, "v4_sweep");
  if (path == VectorPath::Intrinsic) {
    require_intrinsic(4);
#if defined(LJSIMD_HAVE_INTRINSICS)
    return detail::v4_sweep_avx2(view, list, params, swp, trace);
#endif
  }
  if (view.tag() == LayoutTag::AoS4) return v4_portable<4>(view, list, params, swp, trace);
  return v4_portable<8>(view, list, params, swp, trace);
}

SweepStats v8_rle_sweep(LayoutView& view, const SortedList& list, const SimParams& params,
                        bool swp, VectorPath path, SweepTrace* trace) {
  if (view.tag() != LayoutTag::SoA && view.tag() != LayoutTag::AoS8) {
    throw ContractError("v8_rle_sweep requires the SoA or AoS8 layout");
  }
  require_sorted(view, list, "v8_rle_sweep");
  if (view.tag() == LayoutTag::AoS8 && view.size() > (std::size_t{1} << 28)) {
    throw ContractError("v8_rle_sweep: AoS8 element indices overflow 32 bits");
  }
  if (path == VectorPath::Intrinsic) {
    require_intrinsic(8);
#if defined(LJSIMD_HAVE_INTRINSICS)
    return detail::v8_sweep_avx512(view, list, params, swp, trace);
#endif
  }
  return v8_portable(view, list, params, swp, trace);
}

}  // namespace ljsimd
