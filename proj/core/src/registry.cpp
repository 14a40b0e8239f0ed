#include "ljsimd/registry.hpp"

#include <array>

#include <fmt/format.h>

namespace ljsimd {

namespace {

constexpr std::array kKernels{
    KernelInfo{KernelId::Oracle, "Oracle", LayoutTag::SoA, ListKind::None, 1, false,
               "brute-force O(N^2) reference over all i<j"},
    KernelInfo{KernelId::Pair, "Pair", LayoutTag::SoA, ListKind::Pair, 1, false,
               "flat pair list, both atoms loaded per pair"},
    KernelInfo{KernelId::Sorted, "Sorted", LayoutTag::SoA, ListKind::Sorted, 1, false,
               "sorted list, i-atom held in registers"},
    KernelInfo{KernelId::SortedSWP, "SortedSWP", LayoutTag::SoA, ListKind::Sorted, 1, true,
               "sorted list with software-pipelined inner loop"},
    KernelInfo{KernelId::AoS4_Sorted, "AoS4_Sorted", LayoutTag::AoS4, ListKind::Sorted, 1, false,
               "sorted list on padded 4-element records"},
    KernelInfo{KernelId::AoS4_SortedSWP, "AoS4_SortedSWP", LayoutTag::AoS4, ListKind::Sorted, 1,
               true, "sorted list on AoS4 with software pipelining"},
    KernelInfo{KernelId::AoS4_V4, "AoS4_V4", LayoutTag::AoS4, ListKind::Sorted, 4, false,
               "4 lanes: record loads, transpose, cutoff mask, scalar tail"},
    KernelInfo{KernelId::AoS4_V4_SWP, "AoS4_V4_SWP", LayoutTag::AoS4, ListKind::Sorted, 4, true,
               "4 lanes on AoS4 with software pipelining"},
    KernelInfo{KernelId::SoA_V8_RLE, "SoA_V8_RLE", LayoutTag::SoA, ListKind::Sorted, 8, false,
               "8 lanes: gather/scatter, no conflict detection, remainder loop masked"},
    KernelInfo{KernelId::SoA_V8_RLE_SWP, "SoA_V8_RLE_SWP", LayoutTag::SoA, ListKind::Sorted, 8,
               true, "8 lanes on SoA with software pipelining"},
    KernelInfo{KernelId::AoS8_V8_RLE, "AoS8_V8_RLE", LayoutTag::AoS8, ListKind::Sorted, 8, false,
               "8 lanes on 8-element records, shifted gather indices"},
    KernelInfo{KernelId::AoS8_V8_RLE_SWP, "AoS8_V8_RLE_SWP", LayoutTag::AoS8, ListKind::Sorted, 8,
               true, "8 lanes on AoS8 with software pipelining"},
    KernelInfo{KernelId::AoS8_V4_SWP, "AoS8_V4_SWP", LayoutTag::AoS8, ListKind::Sorted, 4, true,
               "4 lanes on AoS8 records with software pipelining"},
};

}  // namespace

std::span<const KernelInfo> list_kernels() { return kKernels; }

const KernelInfo& kernel_info(KernelId id) {
  for (const KernelInfo& k : kKernels) {
    if (k.id == id) return k;
  }
  throw ContractError("unknown kernel id");
}

std::optional<KernelId> parse_kernel(std::string_view name) {
  for (const KernelInfo& k : kKernels) {
    if (k.name == name) return k.id;
  }
  return std::nullopt;
}

std::string_view to_string(KernelId id) { return kernel_info(id).name; }

VectorPath effective_path(KernelId id, VectorPath requested) {
  return kernel_info(id).width == 1 ? VectorPath::Portable : requested;
}

SweepStats run_kernel(KernelId id, LayoutView& view, const KernelInputs& inputs,
                      const SimParams& params, VectorPath path, SweepTrace* trace) {
  const KernelInfo& info = kernel_info(id);
  if (view.tag() != info.layout) {
    throw ContractError(fmt::format("kernel {} needs the {} layout, got {}", info.name,
                                    to_string(info.layout), to_string(view.tag())));
  }
  if (info.list == ListKind::Pair && inputs.pairs == nullptr) {
    throw ContractError(fmt::format("kernel {} needs a pair list", info.name));
  }
  if (info.list == ListKind::Sorted && inputs.sorted == nullptr) {
    throw ContractError(fmt::format("kernel {} needs a sorted list", info.name));
  }

  switch (id) {
    case KernelId::Oracle: {
      ParticleSystem s = from_layout(view);
      s.params = params;
      SweepStats st;
      const std::vector<Vec3> dp = oracle_sweep(s, &st);
      for (std::size_t i = 0; i < dp.size(); ++i) view.set_momentum(i, s.momenta[i] + dp[i]);
      return st;
    }
    case KernelId::Pair:
      return pair_sweep(view, *inputs.pairs, params);
    case KernelId::Sorted:
    case KernelId::AoS4_Sorted:
      return sorted_sweep(view, *inputs.sorted, params);
    case KernelId::SortedSWP:
    case KernelId::AoS4_SortedSWP:
      return sorted_swp_sweep(view, *inputs.sorted, params);
    case KernelId::AoS4_V4:
    case KernelId::AoS4_V4_SWP:
    case KernelId::AoS8_V4_SWP:
      return v4_sweep(view, *inputs.sorted, params, info.swp, path, trace);
    case KernelId::SoA_V8_RLE:
    case KernelId::SoA_V8_RLE_SWP:
    case KernelId::AoS8_V8_RLE:
    case KernelId::AoS8_V8_RLE_SWP:
      return v8_rle_sweep(view, *inputs.sorted, params, info.swp, path, trace);
  }
  throw ContractError("unknown kernel id");
}

}  // namespace ljsimd
