// Width-8 kernel on 512-bit registers: masked index loads, i32 gathers and
// scatters with scale 8, lane-counter loop mask. Functions carry
// target("avx512f"); callers check intrinsic_available(8) first.

#include <immintrin.h>

#include <bit>

#include "intrinsic_kernels.hpp"
#include "kernel_access.hpp"

#define LJSIMD_AVX512 __attribute__((target("avx512f")))

namespace ljsimd {

namespace {

struct Block {
  __mmask8 loop;
  __m256i elem;  // element indices (atom index, or atom index << 3 for AoS8)
  __m512d dx, dy, dz, r2;
};

struct Consts {
  __m512d rc2, c48, c24, dt, zero;
  __m512i eight, n;
  __m512d qix, qiy, qiz, park_x;
};

struct Acc {
  __m512d x, y, z;
};

template <unsigned Shift>
LJSIMD_AVX512 inline Block load_block(const detail::GatherAccess& g, const AtomIndex* js,
                                      std::size_t k, __m512i& counter, const Consts& c) {
  Block b;
  b.loop = _mm512_cmplt_epi64_mask(counter, c.n);
  counter = _mm512_add_epi64(counter, c.eight);
  const __m256i idx =
      _mm512_castsi512_si256(_mm512_maskz_loadu_epi32(static_cast<__mmask16>(b.loop), js + k));
  if constexpr (Shift == 0) {
    b.elem = idx;
  } else {
    b.elem = _mm256_slli_epi32(idx, Shift);
  }
  // inactive lanes come back as the parked position (q_i.x + 2 r_c, q_i.y, q_i.z)
  const __m512d x = _mm512_mask_i32gather_pd(c.park_x, b.loop, b.elem, g.q[0], 8);
  const __m512d y = _mm512_mask_i32gather_pd(c.qiy, b.loop, b.elem, g.q[1], 8);
  const __m512d z = _mm512_mask_i32gather_pd(c.qiz, b.loop, b.elem, g.q[2], 8);
  b.dx = _mm512_sub_pd(x, c.qix);
  b.dy = _mm512_sub_pd(y, c.qiy);
  b.dz = _mm512_sub_pd(z, c.qiz);
  b.r2 = _mm512_add_pd(_mm512_add_pd(_mm512_mul_pd(b.dx, b.dx), _mm512_mul_pd(b.dy, b.dy)),
                       _mm512_mul_pd(b.dz, b.dz));
  return b;
}

LJSIMD_AVX512 inline void apply_block(const detail::GatherAccess& g, const Block& b,
                                      const Consts& c, Acc& acc, SweepStats& st) {
  const __m512d r6 = _mm512_mul_pd(_mm512_mul_pd(b.r2, b.r2), b.r2);
  const __m512d r14 = _mm512_mul_pd(_mm512_mul_pd(r6, r6), b.r2);
  const __mmask8 cutoff = _mm512_cmp_pd_mask(b.r2, c.rc2, _CMP_LT_OQ);
  const __mmask8 total = static_cast<__mmask8>(cutoff & b.loop);
  const __m512d df = _mm512_maskz_mov_pd(
      total,
      _mm512_div_pd(_mm512_mul_pd(_mm512_sub_pd(c.c48, _mm512_mul_pd(c.c24, r6)), c.dt), r14));

  const __m512d fx = _mm512_mul_pd(df, b.dx);
  const __m512d fy = _mm512_mul_pd(df, b.dy);
  const __m512d fz = _mm512_mul_pd(df, b.dz);
  acc.x = _mm512_add_pd(acc.x, fx);
  acc.y = _mm512_add_pd(acc.y, fy);
  acc.z = _mm512_add_pd(acc.z, fz);

  // p_j: gather, update and scatter under the loop mask only
  __m512d px = _mm512_mask_i32gather_pd(c.zero, b.loop, b.elem, g.p[0], 8);
  __m512d py = _mm512_mask_i32gather_pd(c.zero, b.loop, b.elem, g.p[1], 8);
  __m512d pz = _mm512_mask_i32gather_pd(c.zero, b.loop, b.elem, g.p[2], 8);
  px = _mm512_add_pd(px, fx);
  py = _mm512_add_pd(py, fy);
  pz = _mm512_add_pd(pz, fz);
  _mm512_mask_i32scatter_pd(g.p[0], b.loop, b.elem, px, 8);
  _mm512_mask_i32scatter_pd(g.p[1], b.loop, b.elem, py, 8);
  _mm512_mask_i32scatter_pd(g.p[2], b.loop, b.elem, pz, 8);
  st.pairs_visited += static_cast<std::uint64_t>(std::popcount(static_cast<unsigned>(b.loop)));
  st.pairs_within_cutoff += static_cast<std::uint64_t>(std::popcount(static_cast<unsigned>(total)));
  ++st.vector_blocks;
}

LJSIMD_AVX512 inline double reduce(__m512d v) {
  alignas(64) double t[8];
  _mm512_store_pd(t, v);
  double s = t[0];
  for (int k = 1; k < 8; ++k) s += t[k];
  return s;
}

template <unsigned Shift>
LJSIMD_AVX512 SweepStats v8_avx512(LayoutView& view, const SortedList& list,
                                   const SimParams& params, bool swp, SweepTrace* trace) {
  const detail::GatherAccess g(view);
  Consts c;
  c.rc2 = _mm512_set1_pd(params.cutoff2());
  c.c48 = _mm512_set1_pd(48.0);
  c.c24 = _mm512_set1_pd(24.0);
  c.dt = _mm512_set1_pd(params.dt);
  c.zero = _mm512_setzero_pd();
  c.eight = _mm512_set1_epi64(8);
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
    c.qix = _mm512_set1_pd(qix);
    c.qiy = _mm512_set1_pd(g.q[1][ei]);
    c.qiz = _mm512_set1_pd(g.q[2][ei]);
    c.park_x = _mm512_set1_pd(qix + 2.0 * params.cutoff);
    c.n = _mm512_set1_epi64(n);
    __m512i counter = _mm512_set_epi64(7, 6, 5, 4, 3, 2, 1, 0);
    Acc acc{c.zero, c.zero, c.zero};

    if (!swp) {
      for (std::int32_t k = 0; k < n; k += 8) {
        apply_block(g, load_block<Shift>(g, js, begin + k, counter, c), c, acc, st);
      }
    } else {
      Block cur = load_block<Shift>(g, js, begin, counter, c);
      for (std::int32_t k = 8; k < n; k += 8) {
        const Block next = load_block<Shift>(g, js, begin + k, counter, c);
        apply_block(g, cur, c, acc, st);
        cur = next;
      }
      apply_block(g, cur, c, acc, st);
    }

    g.p[0][ei] -= reduce(acc.x);
    g.p[1][ei] -= reduce(acc.y);
    g.p[2][ei] -= reduce(acc.z);
  }
  return st;
}

}  // namespace

namespace detail {

SweepStats v8_sweep_avx512(LayoutView& view, const SortedList& list, const SimParams& params,
                           bool swp, SweepTrace* trace) {
  if (view.tag() == LayoutTag::SoA) return v8_avx512<0>(view, list, params, swp, trace);
  return v8_avx512<3>(view, list, params, swp, trace);
}

}  // namespace detail

}  // namespace ljsimd
