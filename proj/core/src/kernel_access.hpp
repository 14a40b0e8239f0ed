#pragma once

// Layout adapters shared by the kernels. Each exposes position reads and
// momentum references by atom index so a kernel body is written once per
// algorithm and instantiated per layout.

#include <cstddef>

#include "ljsimd/layout.hpp"
#include "ljsimd/pair_force.hpp"

namespace ljsimd::detail {

struct SoAAccess {
  const double* __restrict qx;
  const double* __restrict qy;
  const double* __restrict qz;
  double* __restrict px;
  double* __restrict py;
  double* __restrict pz;

  explicit SoAAccess(LayoutView& v)
      : qx(v.soa(SoAField::X)),
        qy(v.soa(SoAField::Y)),
        qz(v.soa(SoAField::Z)),
        px(v.soa(SoAField::PX)),
        py(v.soa(SoAField::PY)),
        pz(v.soa(SoAField::PZ)) {}

  double x(std::size_t i) const { return qx[i]; }
  double y(std::size_t i) const { return qy[i]; }
  double z(std::size_t i) const { return qz[i]; }
  double& mx(std::size_t i) const { return px[i]; }
  double& my(std::size_t i) const { return py[i]; }
  double& mz(std::size_t i) const { return pz[i]; }
};

template <std::size_t Stride>
struct AoSAccess {
  const double* q;
  double* p;

  explicit AoSAccess(LayoutView& v) : q(v.aos_positions()), p(v.aos_momenta()) {}

  double x(std::size_t i) const { return q[i * Stride]; }
  double y(std::size_t i) const { return q[i * Stride + 1]; }
  double z(std::size_t i) const { return q[i * Stride + 2]; }
  double& mx(std::size_t i) const { return p[i * Stride]; }
  double& my(std::size_t i) const { return p[i * Stride + 1]; }
  double& mz(std::size_t i) const { return p[i * Stride + 2]; }
};

/// Gather/scatter addressing: coordinate c of atom j lives at
/// q[c][element(j)] (positions) or p[c][element(j)] (momenta).
struct GatherAccess {
  const double* q[3];
  double* p[3];
  unsigned shift;  // 0 for SoA, 3 for AoS8 (8-element records)

  explicit GatherAccess(LayoutView& v) {
    if (v.tag() == LayoutTag::SoA) {
      for (int c = 0; c < 3; ++c) {
        q[c] = v.soa(static_cast<SoAField>(c));
        p[c] = v.soa(static_cast<SoAField>(3 + c));
      }
      shift = 0;
    } else if (v.tag() == LayoutTag::AoS8) {
      double* base = v.storage().data();
      for (int c = 0; c < 3; ++c) {
        q[c] = base + c;
        p[c] = base + 4 + c;
      }
      shift = 3;
    } else {
      throw ContractError("gather/scatter requires the SoA or AoS8 layout");
    }
  }

  std::size_t element(std::int32_t j) const { return static_cast<std::size_t>(j) << shift; }
};

/// Applies one pair interaction with the i-atom momentum held by the caller.
/// Returns 1 if the pair was within the cutoff.
template <class Access>
inline int interact_scalar(const Access& a, std::size_t j, double qix, double qiy, double qiz,
                           double& pix, double& piy, double& piz, double rc2, double dt) {
  const double dx = a.x(j) - qix;
  const double dy = a.y(j) - qiy;
  const double dz = a.z(j) - qiz;
  const double r2 = dx * dx + dy * dy + dz * dz;
  if (!(r2 < rc2)) return 0;
  const double df = pair_terms(r2, dt).df;
  pix -= df * dx;
  piy -= df * dy;
  piz -= df * dz;
  a.mx(j) += df * dx;
  a.my(j) += df * dy;
  a.mz(j) += df * dz;
  return 1;
}

}  // namespace ljsimd::detail
