#pragma once

#include "ljsimd/kernels.hpp"

namespace ljsimd::detail {

#if defined(LJSIMD_HAVE_INTRINSICS)
SweepStats v4_sweep_avx2(LayoutView& view, const SortedList& list, const SimParams& params,
                         bool swp, SweepTrace* trace);
SweepStats v8_sweep_avx512(LayoutView& view, const SortedList& list, const SimParams& params,
                           bool swp, SweepTrace* trace);
#endif

}  // namespace ljsimd::detail
