#include <cmath>

#include <fmt/format.h>

#include "kernel_access.hpp"
#include "ljsimd/kernels.hpp"
#include "ljsimd/pair_force.hpp"

namespace ljsimd {

using detail::AoSAccess;
using detail::interact_scalar;
using detail::SoAAccess;

std::vector<Vec3> oracle_sweep(const ParticleSystem& system, SweepStats* stats) {
  const std::size_t n = system.size();
  const double rc2 = system.params.cutoff2();
  const double dt = system.params.dt;
  std::vector<Vec3> dp(n);
  SweepStats st;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3 qi = system.positions[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vec3 r = system.positions[j] - qi;
      const double r2 = r.x * r.x + r.y * r.y + r.z * r.z;
      ++st.pairs_visited;
      if (r2 == 0.0) {
        throw DomainError(fmt::format("oracle_sweep: atoms {} and {} coincide", i, j));
      }
      if (!(r2 < rc2)) continue;
      ++st.pairs_within_cutoff;
      const double df = pair_terms(r2, dt).df;
      dp[i].x -= df * r.x;
      dp[i].y -= df * r.y;
      dp[i].z -= df * r.z;
      dp[j].x += df * r.x;
      dp[j].y += df * r.y;
      dp[j].z += df * r.z;
    }
  }
  if (stats) *stats += st;
  return dp;
}

namespace {

void require_list(const LayoutView& view, std::size_t list_atoms, const char* who) {
  if (list_atoms != view.size()) {
    throw ContractError(fmt::format("{}: list covers {} atoms but the view holds {}", who,
                                    list_atoms, view.size()));
  }
}

template <class Access>
SweepStats sorted_impl(const Access a, const SortedList& list, double rc2, double dt) {
  const auto offsets = list.offsets();
  const AtomIndex* js = list.j_indices().data();
  const std::size_t n = list.atom_count();
  std::uint64_t within = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double qix = a.x(i);
    const double qiy = a.y(i);
    const double qiz = a.z(i);
    double pix = a.mx(i);
    double piy = a.my(i);
    double piz = a.mz(i);
    const auto end = static_cast<std::size_t>(offsets[i + 1]);
    for (auto k = static_cast<std::size_t>(offsets[i]); k < end; ++k) {
      within += interact_scalar(a, static_cast<std::size_t>(js[k]), qix, qiy, qiz, pix, piy, piz,
                                rc2, dt);
    }
    a.mx(i) = pix;
    a.my(i) = piy;
    a.mz(i) = piz;
  }
  return {list.pair_count(), within, 0, 0};
}

// Inner loop retimed from {ABCD}^n to AB {CDAB}^(n-1) CD, where A loads q_j,
// B forms the relative vector and r^2, C evaluates df and updates momenta and
// D stores p_j. Per pair the arithmetic is unchanged.
template <class Access>
SweepStats sorted_swp_impl(const Access a, const SortedList& list, double rc2, double dt) {
  const auto offsets = list.offsets();
  const AtomIndex* js = list.j_indices().data();
  const std::size_t n = list.atom_count();
  std::uint64_t within = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto begin = static_cast<std::size_t>(offsets[i]);
    const auto end = static_cast<std::size_t>(offsets[i + 1]);
    if (begin == end) continue;

    const double qix = a.x(i);
    const double qiy = a.y(i);
    const double qiz = a.z(i);
    double pix = a.mx(i);
    double piy = a.my(i);
    double piz = a.mz(i);

    // prologue: A, B of the first pair
    auto j = static_cast<std::size_t>(js[begin]);
    double dx = a.x(j) - qix;
    double dy = a.y(j) - qiy;
    double dz = a.z(j) - qiz;
    double r2 = dx * dx + dy * dy + dz * dz;

    for (std::size_t k = begin + 1; k < end; ++k) {
      // A, B of pair k
      const auto jn = static_cast<std::size_t>(js[k]);
      const double dxn = a.x(jn) - qix;
      const double dyn = a.y(jn) - qiy;
      const double dzn = a.z(jn) - qiz;
      const double r2n = dxn * dxn + dyn * dyn + dzn * dzn;

      // C, D of pair k - 1
      if (r2 < rc2) {
        const double df = pair_terms(r2, dt).df;
        pix -= df * dx;
        piy -= df * dy;
        piz -= df * dz;
        a.mx(j) += df * dx;
        a.my(j) += df * dy;
        a.mz(j) += df * dz;
        ++within;
      }
      j = jn;
      dx = dxn;
      dy = dyn;
      dz = dzn;
      r2 = r2n;
    }

    // epilogue: C, D of the last pair
    if (r2 < rc2) {
      const double df = pair_terms(r2, dt).df;
      pix -= df * dx;
      piy -= df * dy;
      piz -= df * dz;
      a.mx(j) += df * dx;
      a.my(j) += df * dy;
      a.mz(j) += df * dz;
      ++within;
    }
    a.mx(i) = pix;
    a.my(i) = piy;
    a.mz(i) = piz;
  }
  return {list.pair_count(), within, 0, 0};
}

}  // namespace

SweepStats pair_sweep(LayoutView& view, const PairList& pairs, const SimParams& params) {
  if (view.tag() != LayoutTag::SoA) {
    throw ContractError("pair_sweep requires the SoA layout");
  }
  require_list(view, pairs.atom_count(), "pair_sweep");
  const SoAAccess a(view);
  const double rc2 = params.cutoff2();
  const double dt = params.dt;
  std::uint64_t within = 0;
  for (const AtomPair& pr : pairs.pairs()) {
    const auto i = static_cast<std::size_t>(pr.i);
    const auto j = static_cast<std::size_t>(pr.j);
    const double dx = a.x(j) - a.x(i);
    const double dy = a.y(j) - a.y(i);
    const double dz = a.z(j) - a.z(i);
    const double r2 = dx * dx + dy * dy + dz * dz;
    if (!(r2 < rc2)) continue;
    const double df = pair_terms(r2, dt).df;
    a.mx(i) -= df * dx;
    a.my(i) -= df * dy;
    a.mz(i) -= df * dz;
    a.mx(j) += df * dx;
    a.my(j) += df * dy;
    a.mz(j) += df * dz;
    ++within;
  }
  return {pairs.size(), within, 0, 0};
}

SweepStats sorted_sweep(LayoutView& view, const SortedList& list, const SimParams& params) {
  require_list(view, list.atom_count(), "sorted_sweep");
  const double rc2 = params.cutoff2();
  switch (view.tag()) {
    case LayoutTag::SoA:
      return sorted_impl(SoAAccess(view), list, rc2, params.dt);
    case LayoutTag::AoS4:
      return sorted_impl(AoSAccess<4>(view), list, rc2, params.dt);
    case LayoutTag::AoS8:
      return sorted_impl(AoSAccess<8>(view), list, rc2, params.dt);
  }
  return {};
}

SweepStats sorted_swp_sweep(LayoutView& view, const SortedList& list, const SimParams& params) {
  require_list(view, list.atom_count(), "sorted_swp_sweep");
  const double rc2 = params.cutoff2();
  switch (view.tag()) {
    case LayoutTag::SoA:
      return sorted_swp_impl(SoAAccess(view), list, rc2, params.dt);
    case LayoutTag::AoS4:
      return sorted_swp_impl(AoSAccess<4>(view), list, rc2, params.dt);
    case LayoutTag::AoS8:
      return sorted_swp_impl(AoSAccess<8>(view), list, rc2, params.dt);
  }
  return {};
}

}  // namespace ljsimd
