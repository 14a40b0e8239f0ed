// Width-4 kernel on 256-bit registers. Functions carry target("avx2") so the
// rest of the library keeps its baseline ISA; callers check
// intrinsic_available(4) first.

#include <immintrin.h>

#include <bit>

#include "intrinsic_kernels.hpp"
#include "kernel_access.hpp"

#define LJSIMD_AVX2 __attribute__((target("avx2")))

namespace ljsimd {

namespace {

struct Regs3 {
  __m256d x, y, z;
};

LJSIMD_AVX2 inline Regs3 transpose_rows(__m256d d0, __m256d d1, __m256d d2, __m256d d3) {
  const __m256d t0 = _mm256_unpacklo_pd(d0, d1);  // x0 x1 z0 z1
  const __m256d t1 = _mm256_unpackhi_pd(d0, d1);  // y0 y1 w0 w1
  const __m256d t2 = _mm256_unpacklo_pd(d2, d3);  // x2 x3 z2 z3
  const __m256d t3 = _mm256_unpackhi_pd(d2, d3);  // y2 y3 w2 w3
  return {_mm256_permute2f128_pd(t0, t2, 0x20), _mm256_permute2f128_pd(t1, t3, 0x20),
          _mm256_permute2f128_pd(t0, t2, 0x31)};
}

struct Block {
  std::size_t j[4];
  Regs3 d;
  __m256d r2;
};

struct Consts {
  __m256d rc2, c48, c24, dt, zero;
  __m256i store3;
};

struct Acc {
  __m256d x, y, z;
};

template <std::size_t Stride>
LJSIMD_AVX2 inline Block load_block(const double* q, const AtomIndex* js, std::size_t k,
                                    __m256d qi) {
  Block b;
  for (std::size_t l = 0; l < 4; ++l) b.j[l] = static_cast<std::size_t>(js[k + l]);
  const __m256d d0 = _mm256_sub_pd(_mm256_load_pd(q + b.j[0] * Stride), qi);
  const __m256d d1 = _mm256_sub_pd(_mm256_load_pd(q + b.j[1] * Stride), qi);
  const __m256d d2 = _mm256_sub_pd(_mm256_load_pd(q + b.j[2] * Stride), qi);
  const __m256d d3 = _mm256_sub_pd(_mm256_load_pd(q + b.j[3] * Stride), qi);
  b.d = transpose_rows(d0, d1, d2, d3);
  b.r2 = _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(b.d.x, b.d.x), _mm256_mul_pd(b.d.y, b.d.y)),
                       _mm256_mul_pd(b.d.z, b.d.z));
  return b;
}

template <std::size_t Stride>
LJSIMD_AVX2 inline int apply_block(double* p, const Block& b, const Consts& c, Acc& acc) {
  const __m256d r6 = _mm256_mul_pd(_mm256_mul_pd(b.r2, b.r2), b.r2);
  const __m256d r14 = _mm256_mul_pd(_mm256_mul_pd(r6, r6), b.r2);
  const __m256d in_range = _mm256_cmp_pd(b.r2, c.rc2, _CMP_LT_OQ);
  __m256d df = _mm256_div_pd(_mm256_mul_pd(_mm256_sub_pd(c.c48, _mm256_mul_pd(c.c24, r6)), c.dt),
                             r14);
  df = _mm256_and_pd(df, in_range);

  const __m256d fx = _mm256_mul_pd(df, b.d.x);
  const __m256d fy = _mm256_mul_pd(df, b.d.y);
  const __m256d fz = _mm256_mul_pd(df, b.d.z);
  acc.x = _mm256_add_pd(acc.x, fx);
  acc.y = _mm256_add_pd(acc.y, fy);
  acc.z = _mm256_add_pd(acc.z, fz);

  // back to (fx, fy, fz, 0) records, one per j
  const __m256d t0 = _mm256_unpacklo_pd(fx, fy);
  const __m256d t1 = _mm256_unpackhi_pd(fx, fy);
  const __m256d t2 = _mm256_unpacklo_pd(fz, c.zero);
  const __m256d t3 = _mm256_unpackhi_pd(fz, c.zero);
  const __m256d rec[4] = {
      _mm256_permute2f128_pd(t0, t2, 0x20), _mm256_permute2f128_pd(t1, t3, 0x20),
      _mm256_permute2f128_pd(t0, t2, 0x31), _mm256_permute2f128_pd(t1, t3, 0x31)};
  for (std::size_t l = 0; l < 4; ++l) {
    double* pj = p + b.j[l] * Stride;
    _mm256_maskstore_pd(pj, c.store3, _mm256_add_pd(_mm256_load_pd(pj), rec[l]));
  }
  return std::popcount(static_cast<unsigned>(_mm256_movemask_pd(in_range)));
}

LJSIMD_AVX2 inline double reduce(__m256d v) {
  alignas(32) double t[4];
  _mm256_store_pd(t, v);
  double s = t[0];
  s += t[1];
  s += t[2];
  s += t[3];
  return s;
}

template <std::size_t Stride>
LJSIMD_AVX2 SweepStats v4_avx2(LayoutView& view, const SortedList& list, const SimParams& params,
                               bool swp, SweepTrace* trace) {
  const detail::AoSAccess<Stride> a(view);
  const double rc2 = params.cutoff2();
  const double dt = params.dt;
  Consts c;
  c.rc2 = _mm256_set1_pd(rc2);
  c.c48 = _mm256_set1_pd(48.0);
  c.c24 = _mm256_set1_pd(24.0);
  c.dt = _mm256_set1_pd(dt);
  c.zero = _mm256_setzero_pd();
  c.store3 = _mm256_set_epi64x(0, -1, -1, -1);
  const auto offsets = list.offsets();
  const AtomIndex* js = list.j_indices().data();

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

    const __m256d qi = _mm256_load_pd(a.q + i * Stride);
    double pix = a.mx(i);
    double piy = a.my(i);
    double piz = a.mz(i);
    Acc acc{c.zero, c.zero, c.zero};

    if (!swp) {
      for (std::size_t blk = 0; blk < nblk; ++blk) {
        st.pairs_within_cutoff +=
            apply_block<Stride>(a.p, load_block<Stride>(a.q, js, begin + 4 * blk, qi), c, acc);
      }
    } else if (nblk > 0) {
      Block cur = load_block<Stride>(a.q, js, begin, qi);
      for (std::size_t blk = 1; blk < nblk; ++blk) {
        const Block next = load_block<Stride>(a.q, js, begin + 4 * blk, qi);
        st.pairs_within_cutoff += apply_block<Stride>(a.p, cur, c, acc);
        cur = next;
      }
      st.pairs_within_cutoff += apply_block<Stride>(a.p, cur, c, acc);
    }
    st.vector_blocks += nblk;

    pix -= reduce(acc.x);
    piy -= reduce(acc.y);
    piz -= reduce(acc.z);
    for (std::size_t k = tail_begin; k < end; ++k) {
      st.pairs_within_cutoff += static_cast<std::uint64_t>(detail::interact_scalar(
          a, static_cast<std::size_t>(js[k]), a.x(i), a.y(i), a.z(i), pix, piy, piz, rc2, dt));
    }
    st.tail_pairs += end - tail_begin;
    a.mx(i) = pix;
    a.my(i) = piy;
    a.mz(i) = piz;
  }
  return st;
}

}  // namespace

namespace detail {

SweepStats v4_sweep_avx2(LayoutView& view, const SortedList& list, const SimParams& params,
                         bool swp, SweepTrace* trace) {
  if (view.tag() == LayoutTag::AoS4) return v4_avx2<4>(view, list, params, swp, trace);
  return v4_avx2<8>(view, list, params, swp, trace);
}

}  // namespace detail

LJSIMD_AVX2 Transposed4 transpose4_avx2(const LaneVec<4>& r0, const LaneVec<4>& r1,
                                        const LaneVec<4>& r2, const LaneVec<4>& r3) {
  const Regs3 t = transpose_rows(_mm256_loadu_pd(r0.v.data()), _mm256_loadu_pd(r1.v.data()),
                                 _mm256_loadu_pd(r2.v.data()), _mm256_loadu_pd(r3.v.data()));
  Transposed4 out;
  _mm256_storeu_pd(out.x.v.data(), t.x);
  _mm256_storeu_pd(out.y.v.data(), t.y);
  _mm256_storeu_pd(out.z.v.data(), t.z);
  return out;
}

}  // namespace ljsimd
