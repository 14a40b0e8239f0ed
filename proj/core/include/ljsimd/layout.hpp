#pragma once

#include <cstddef>
#include <new>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ljsimd/system.hpp"

namespace ljsimd {

enum class LayoutTag { SoA, AoS4, AoS8 };

[[nodiscard]] std::string_view to_string(LayoutTag tag);
[[nodiscard]] std::optional<LayoutTag> parse_layout(std::string_view name);

template <class T, std::size_t Alignment>
struct AlignedAllocator {
  using value_type = T;
  template <class U>
  struct rebind {
    using other = AlignedAllocator<U, Alignment>;
  };

  AlignedAllocator() noexcept = default;
  template <class U>
  AlignedAllocator(const AlignedAllocator<U, Alignment>&) noexcept {}

  T* allocate(std::size_t n) {
    return static_cast<T*>(::operator new(n * sizeof(T), std::align_val_t{Alignment}));
  }
  void deallocate(T* p, std::size_t) noexcept {
    ::operator delete(p, std::align_val_t{Alignment});
  }
  template <class U>
  bool operator==(const AlignedAllocator<U, Alignment>&) const noexcept {
    return true;
  }
};

/// SoA array selector, in storage order.
enum class SoAField { X = 0, Y, Z, PX, PY, PZ };

/// One of the three memory arrangements consumed by the kernels.
///
///  SoA  : x[] y[] z[] px[] py[] pz[], each array starting on a 64-byte
///         boundary.
///  AoS4 : positions as (x,y,z,pad) records, then momenta as (px,py,pz,pad)
///         records.
///  AoS8 : one (x,y,z,pad,px,py,pz,pad) record per atom.
///
/// Padding slots are written as zero but carry no meaning; kernels never mix
/// them into results.
class LayoutView {
 public:
  static constexpr std::size_t kAlignment = 64;
  using Buffer = std::vector<double, AlignedAllocator<double, kAlignment>>;

  LayoutView(LayoutTag tag, std::size_t n, const SimParams& params);

  [[nodiscard]] LayoutTag tag() const { return tag_; }
  [[nodiscard]] std::size_t size() const { return n_; }
  [[nodiscard]] const SimParams& params() const { return params_; }

  [[nodiscard]] Vec3 position(std::size_t i) const;
  [[nodiscard]] Vec3 momentum(std::size_t i) const;
  void set_position(std::size_t i, Vec3 q);
  void set_momentum(std::size_t i, Vec3 p);
  void reset_momenta();

  /// Entire backing store, including padding.
  [[nodiscard]] std::span<double> storage() { return data_; }
  [[nodiscard]] std::span<const double> storage() const { return data_; }

  /// Offsets into storage() of every slot that holds no atom data.
  [[nodiscard]] std::vector<std::size_t> padding_slots() const;

  // SoA access. Valid only for tag() == SoA.
  [[nodiscard]] double* soa(SoAField f);
  [[nodiscard]] const double* soa(SoAField f) const;

  // AoS access. Valid for AoS4 and AoS8. Atom i's position record begins at
  // aos_positions() + i * record_stride(), its momentum record likewise from
  // aos_momenta(). For AoS8 the two pointers differ by 4 elements.
  [[nodiscard]] double* aos_positions();
  [[nodiscard]] const double* aos_positions() const;
  [[nodiscard]] double* aos_momenta();
  [[nodiscard]] const double* aos_momenta() const;
  [[nodiscard]] std::size_t record_stride() const;

 private:
  [[nodiscard]] std::size_t momentum_offset() const;

  LayoutTag tag_;
  std::size_t n_;
  std::size_t soa_stride_ = 0;
  SimParams params_;
  Buffer data_;
};

/// Element offset of `field` (0..2 position, 3..5 momentum) of atom `atom` in
/// an AoS8 record array: atom * 8 + {0,1,2,4,5,6}[field].
[[nodiscard]] constexpr std::size_t aos8_element(std::size_t atom, int field) {
  return (atom << 3) + static_cast<std::size_t>(field < 3 ? field : field + 1);
}

[[nodiscard]] LayoutView to_layout(const ParticleSystem& system, LayoutTag tag);
[[nodiscard]] ParticleSystem from_layout(const LayoutView& view);

/// Overwrites the momenta held by `view` with those of `system`.
void load_momenta(LayoutView& view, const ParticleSystem& system);

}  // namespace ljsimd
