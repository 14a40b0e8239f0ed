#pragma once

#include "ljsimd/types.hpp"

namespace ljsimd {

/// Intermediate powers of one pair evaluation.
struct PairForceTerms {
  double r2 = 0.0;
  double r6 = 0.0;
  double r14 = 0.0;
  double df = 0.0;
};

/// Impulse coefficient (48 - 24 r^6) dt / r^14 from a squared distance.
///
/// Every kernel, scalar or lane-wise, evaluates exactly this operation
/// sequence so that results only differ by accumulation order.
[[nodiscard]] inline PairForceTerms pair_terms(double r2, double dt) {
  PairForceTerms t;
  t.r2 = r2;
  t.r6 = r2 * r2 * r2;
  t.r14 = t.r6 * t.r6 * r2;
  t.df = (48.0 - 24.0 * t.r6) * dt / t.r14;
  return t;
}

struct PairImpulse {
  double df = 0.0;
  Vec3 rvec;
};

/// LJ impulse between atoms at qi and qj. rvec = qj - qi; no cutoff applied.
/// Apply as p_i -= df * rvec, p_j += df * rvec.
/// Throws DomainError when the points coincide.
[[nodiscard]] PairImpulse compute_pair_force(Vec3 qi, Vec3 qj, double dt);

/// Truncated, shifted LJ potential 4(r^-12 - r^-6) - V(r_c); zero for r >= r_c.
[[nodiscard]] double potential_energy(double r2, double cutoff);

}  // namespace ljsimd
