#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "ljsimd/kernels.hpp"

namespace ljsimd {

/// Every kernel variant, in reporting order.
enum class KernelId {
  Oracle,
  Pair,
  Sorted,
  SortedSWP,
  AoS4_Sorted,
  AoS4_SortedSWP,
  AoS4_V4,
  AoS4_V4_SWP,
  SoA_V8_RLE,
  SoA_V8_RLE_SWP,
  AoS8_V8_RLE,
  AoS8_V8_RLE_SWP,
  AoS8_V4_SWP,
};

enum class ListKind { None, Pair, Sorted };

struct KernelInfo {
  KernelId id;
  std::string_view name;
  LayoutTag layout;
  ListKind list;
  /// 1 for scalar kernels, otherwise the lane count.
  int width;
  bool swp;
  std::string_view description;
};

[[nodiscard]] std::span<const KernelInfo> list_kernels();
[[nodiscard]] const KernelInfo& kernel_info(KernelId id);
[[nodiscard]] std::optional<KernelId> parse_kernel(std::string_view name);
[[nodiscard]] std::string_view to_string(KernelId id);

/// Path a kernel actually runs on for a requested path: scalar kernels are
/// always portable.
[[nodiscard]] VectorPath effective_path(KernelId id, VectorPath requested);

struct KernelInputs {
  const PairList* pairs = nullptr;
  const SortedList* sorted = nullptr;
};

/// One force sweep of `id` over `view`, adding impulses to its momenta.
/// Throws ContractError on a layout mismatch or a missing list.
SweepStats run_kernel(KernelId id, LayoutView& view, const KernelInputs& inputs,
                      const SimParams& params, VectorPath path, SweepTrace* trace = nullptr);

}  // namespace ljsimd
