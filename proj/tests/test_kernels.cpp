#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>
#include <set>

#include "ljsimd/kernels.hpp"
#include "ljsimd/registry.hpp"
#include "test_support.hpp"

namespace ljsimd {
namespace {

using testing::bits_equal;
using testing::Lists;
using testing::make_lists;
using testing::max_abs_dev;
using testing::oracle_momenta;
using testing::paths_for;
using testing::random_system;
using testing::run_once;
using testing::two_atoms;

std::vector<KernelId> all_ids() {
  std::vector<KernelId> out;
  for (const KernelInfo& k : list_kernels()) out.push_back(k.id);
  return out;
}

std::string id_name(const ::testing::TestParamInfo<KernelId>& info) {
  return std::string(to_string(info.param));
}

Vec3 total(const std::vector<Vec3>& p) {
  Vec3 s{};
  for (const Vec3& v : p) s += v;
  return s;
}

// Lattice with small random displacements: forces stay O(10) so absolute
// rounding stays far below 1e-12.
ParticleSystem jittered_fcc(int cells, double jitter, std::uint64_t seed) {
  ParticleSystem s = centered_fcc(cells);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-jitter, jitter);
  for (Vec3& q : s.positions) q += Vec3{u(rng), u(rng), u(rng)};
  return s;
}

// ---------------------------------------------------------------- oracle

TEST(Oracle, PotentialMinimumLeavesMomentaAlone) {
  const auto p = oracle_momenta(two_atoms(std::pow(2.0, 1.0 / 6.0)));
  EXPECT_NEAR(p[0].x, 0.0, 1e-13);
  EXPECT_NEAR(p[1].x, 0.0, 1e-13);
  EXPECT_EQ(p[0].y, 0.0);
}

TEST(Oracle, UnitDistanceImpulse) {
  const auto p = oracle_momenta(two_atoms(1.0));
  EXPECT_EQ(p[0], (Vec3{-24, 0, 0}));
  EXPECT_EQ(p[1], (Vec3{24, 0, 0}));
}

TEST(Oracle, EquilateralTriangle) {
  ParticleSystem s;
  const double h = std::sqrt(3.0) / 2.0;
  // near the origin so vertex coordinates carry little rounding
  s.positions = {{1, 1, 1}, {2, 1, 1}, {1.5, 1 + h, 1}};
  s.momenta.assign(3, Vec3{});
  const auto p = oracle_momenta(s);
  const Vec3 centroid = (1.0 / 3.0) * (s.positions[0] + s.positions[1] + s.positions[2]);
  for (int k = 0; k < 3; ++k) {
    const double want = 24.0 * std::sqrt(3.0);
    EXPECT_NEAR(std::sqrt(p[k].dot(p[k])), want, 1e-13 * want);
    // repulsive at unit distance: pushed outward along the symmetry axis
    const Vec3 out = s.positions[k] - centroid;
    const double cosang = p[k].dot(out) / std::sqrt(p[k].dot(p[k]) * out.dot(out));
    EXPECT_NEAR(cosang, 1.0, 1e-12);
  }
  const Vec3 t = total(p);
  EXPECT_NEAR(t.x, 0.0, 1e-12);
  EXPECT_NEAR(t.y, 0.0, 1e-12);
  EXPECT_EQ(t.z, 0.0);
}

TEST(Oracle, CoincidentAtomsRejected) {
  ParticleSystem s = two_atoms(1.0);
  s.positions[1] = s.positions[0];
  EXPECT_THROW((void)oracle_sweep(s), DomainError);
}

TEST(Oracle, CountsPairsInsideCutoff) {
  std::mt19937_64 rng(5);
  const ParticleSystem s = random_system(rng, 300);
  SweepStats st;
  (void)oracle_sweep(s, &st);
  EXPECT_EQ(st.pairs_within_cutoff, testing::brute_force_pairs(s, 3.0).size());
  EXPECT_EQ(st.pairs_visited, 300u * 299u / 2u);
}

// ------------------------------------------------------- every kernel

class EveryKernel : public ::testing::TestWithParam<KernelId> {};

TEST_P(EveryKernel, MatchesOracleOnRandomSystems) {
  std::mt19937_64 rng(100 + static_cast<int>(GetParam()));
  std::uniform_int_distribution<std::size_t> size(2, 2000);
  for (int trial = 0; trial < 6; ++trial) {
    const ParticleSystem s = random_system(rng, trial == 0 ? 500 : size(rng));
    const Lists lists = make_lists(s);
    const auto want = oracle_momenta(s);
    SweepStats oracle_stats;
    (void)oracle_sweep(s, &oracle_stats);
    for (VectorPath path : paths_for(GetParam())) {
      SweepStats st;
      const auto got = run_once(GetParam(), s, lists, path, &st);
      EXPECT_LE(max_abs_dev(got, want), 1e-9) << "n=" << s.size() << " " << to_string(path);
      EXPECT_EQ(st.pairs_within_cutoff, oracle_stats.pairs_within_cutoff);
      EXPECT_LE(st.pairs_within_cutoff, st.pairs_visited);
    }
  }
}

TEST_P(EveryKernel, StartsFromExistingMomenta) {
  std::mt19937_64 rng(8);
  ParticleSystem s = random_system(rng, 400);
  std::normal_distribution<double> g(0, 5);
  for (Vec3& p : s.momenta) p = {g(rng), g(rng), g(rng)};
  const Lists lists = make_lists(s);
  for (VectorPath path : paths_for(GetParam())) {
    EXPECT_LE(max_abs_dev(run_once(GetParam(), s, lists, path), oracle_momenta(s)), 1e-9);
  }
}

TEST_P(EveryKernel, ConservesMomentum) {
  const ParticleSystem s = jittered_fcc(10, 0.05, 3);
  const Lists lists = make_lists(s);
  for (VectorPath path : paths_for(GetParam())) {
    const Vec3 t = total(run_once(GetParam(), s, lists, path));
    EXPECT_LE(std::abs(t.x), 1e-8);
    EXPECT_LE(std::abs(t.y), 1e-8);
    EXPECT_LE(std::abs(t.z), 1e-8);
  }
}

TEST(Conservation, OneSweepAtFullScale) {
  const ParticleSystem s = paper_benchmark_system();
  const Lists lists = make_lists(s);
  for (const KernelInfo& k : list_kernels()) {
    if (k.id == KernelId::Oracle) continue;
    const Vec3 t = total(run_once(k.id, s, lists, best_path(std::max(k.width, 4))));
    EXPECT_LE(std::abs(t.x), 1e-8) << k.name;
    EXPECT_LE(std::abs(t.y), 1e-8) << k.name;
    EXPECT_LE(std::abs(t.z), 1e-8) << k.name;
  }
}

TEST_P(EveryKernel, CutoffIsStrict) {
  for (VectorPath path : paths_for(GetParam())) {
    const ParticleSystem out = two_atoms(3.0 + 1e-12);
    const auto p_out = run_once(GetParam(), out, make_lists(out), path);
    EXPECT_EQ(p_out[0], (Vec3{}));
    EXPECT_EQ(p_out[1], (Vec3{}));

    const ParticleSystem in = two_atoms(3.0 - 1e-12);
    const auto p_in = run_once(GetParam(), in, make_lists(in), path);
    EXPECT_NE(p_in[0].x, 0.0);
    EXPECT_EQ(p_in[0].x, -p_in[1].x);
  }
}

TEST_P(EveryKernel, SingleInRangePairIsExact) {
  const ParticleSystem s = two_atoms(1.3);
  const auto want = oracle_momenta(s);
  for (VectorPath path : paths_for(GetParam())) {
    EXPECT_TRUE(bits_equal(run_once(GetParam(), s, make_lists(s), path), want));
  }
}

TEST_P(EveryKernel, EmptyListLeavesMomentaAlone) {
  ParticleSystem s = two_atoms(10.0);
  s.momenta = {{1, 2, 3}, {4, 5, 6}};
  for (VectorPath path : paths_for(GetParam())) {
    EXPECT_TRUE(bits_equal(run_once(GetParam(), s, make_lists(s), path), s.momenta));
  }
}

TEST_P(EveryKernel, IgnoresPadding) {
  std::mt19937_64 rng(21);
  const ParticleSystem s = random_system(rng, 333);
  const Lists lists = make_lists(s);
  const std::vector<double> junk{std::numeric_limits<double>::quiet_NaN(),
                                 std::numeric_limits<double>::infinity(), -1e300, 0.5, 7.0};
  for (VectorPath path : paths_for(GetParam())) {
    const auto clean = run_once(GetParam(), s, lists, path);
    for (double fill : junk) {
      LayoutView v = to_layout(s, kernel_info(GetParam()).layout);
      std::uniform_real_distribution<double> u(-3, 3);
      for (std::size_t k : v.padding_slots()) v.storage()[k] = std::isfinite(fill) ? u(rng) : fill;
      (void)run_kernel(GetParam(), v, {&lists.pairs, &lists.sorted}, s.params, path);
      EXPECT_TRUE(bits_equal(from_layout(v).momenta, clean)) << "fill " << fill;
    }
  }
}

TEST_P(EveryKernel, OutOfRangePairsContributeNothing) {
  const ParticleSystem s = jittered_fcc(5, 0.02, 9);
  const Lists full = make_lists(s);
  std::vector<AtomPair> kept;
  for (const AtomPair& p : full.pairs.pairs()) {
    const Vec3 d = s.positions[static_cast<std::size_t>(p.j)] -
                   s.positions[static_cast<std::size_t>(p.i)];
    const double r2 = d.x * d.x + d.y * d.y + d.z * d.z;
    if (r2 < s.params.cutoff2()) kept.push_back(p);
  }
  ASSERT_LT(kept.size(), full.pairs.size());
  Lists trimmed;
  trimmed.pairs = PairList(s.size(), kept);
  trimmed.sorted = sort_pair_list(trimmed.pairs, s.size());
  const bool vector = kernel_info(GetParam()).width > 1;
  for (VectorPath path : paths_for(GetParam())) {
    const auto a = run_once(GetParam(), s, full, path);
    const auto b = run_once(GetParam(), s, trimmed, path);
    if (vector) {
      // lane blocking differs between the two lists, so only rounding may differ
      EXPECT_LE(max_abs_dev(a, b), 1e-12);
    } else {
      EXPECT_TRUE(bits_equal(a, b));
    }
  }
}

TEST_P(EveryKernel, RejectsForeignLayoutAndMissingList) {
  const KernelInfo& info = kernel_info(GetParam());
  const ParticleSystem s = two_atoms(1.5);
  const Lists lists = make_lists(s);
  for (LayoutTag tag : {LayoutTag::SoA, LayoutTag::AoS4, LayoutTag::AoS8}) {
    if (tag == info.layout) continue;
    LayoutView v = to_layout(s, tag);
    EXPECT_THROW(
        (void)run_kernel(GetParam(), v, {&lists.pairs, &lists.sorted}, s.params,
                         VectorPath::Portable),
        ContractError);
  }
  if (info.list != ListKind::None) {
    LayoutView v = to_layout(s, info.layout);
    EXPECT_THROW((void)run_kernel(GetParam(), v, {}, s.params, VectorPath::Portable),
                 ContractError);
    // lists built for a larger system
    const ParticleSystem big = two_atoms(1.5);
    ParticleSystem three = big;
    three.positions.push_back({60, 60, 60});
    three.momenta.push_back({});
    const Lists other = make_lists(three);
    EXPECT_THROW((void)run_kernel(GetParam(), v, {&other.pairs, &other.sorted}, s.params,
                                  VectorPath::Portable),
                 ContractError);
  }
}

INSTANTIATE_TEST_SUITE_P(Registry, EveryKernel, ::testing::ValuesIn(all_ids()), id_name);

// ------------------------------------------------------- vector paths

class VectorKernel : public ::testing::TestWithParam<KernelId> {};

TEST_P(VectorKernel, IntrinsicPathIsBitIdenticalToPortable) {
  const int w = kernel_info(GetParam()).width;
  if (!intrinsic_available(w)) GTEST_SKIP() << "no intrinsic path for width " << w;
  std::mt19937_64 rng(55);
  std::uniform_int_distribution<std::size_t> size(2, 1500);
  for (int trial = 0; trial < 8; ++trial) {
    const ParticleSystem s = random_system(rng, size(rng));
    const Lists lists = make_lists(s);
    SweepStats sa, sb;
    SweepTrace ta, tb;
    const auto a = run_once(GetParam(), s, lists, VectorPath::Portable, &sa, &ta);
    const auto b = run_once(GetParam(), s, lists, VectorPath::Intrinsic, &sb, &tb);
    EXPECT_TRUE(bits_equal(a, b)) << "n=" << s.size();
    EXPECT_EQ(sa, sb);
    EXPECT_EQ(ta.blocks_per_group, tb.blocks_per_group);
    EXPECT_EQ(ta.tail_per_group, tb.tail_per_group);
  }
}

TEST_P(VectorKernel, BlockCountsFollowWidth) {
  const KernelInfo& info = kernel_info(GetParam());
  const auto w = static_cast<std::uint32_t>(info.width);
  std::mt19937_64 rng(66);
  const ParticleSystem s = random_system(rng, 700);
  const Lists lists = make_lists(s);
  for (VectorPath path : paths_for(GetParam())) {
    SweepStats st;
    SweepTrace tr;
    (void)run_once(GetParam(), s, lists, path, &st, &tr);
    ASSERT_EQ(tr.blocks_per_group.size(), s.size());
    std::uint64_t blocks = 0, tail = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      const auto n = static_cast<std::uint32_t>(lists.sorted.group_size(i));
      if (w == 8) {
        EXPECT_EQ(tr.blocks_per_group[i], (n + 7) / 8);
        EXPECT_EQ(tr.tail_per_group[i], 0u);
      } else {
        EXPECT_EQ(tr.blocks_per_group[i], n / 4);
        EXPECT_EQ(tr.tail_per_group[i], n % 4);
      }
      blocks += tr.blocks_per_group[i];
      tail += tr.tail_per_group[i];
    }
    EXPECT_EQ(st.vector_blocks, blocks);
    EXPECT_EQ(st.tail_pairs, tail);
    EXPECT_EQ(st.pairs_visited, lists.sorted.pair_count());
  }
}

std::vector<KernelId> vector_ids() {
  std::vector<KernelId> out;
  for (const KernelInfo& k : list_kernels()) {
    if (k.width > 1) out.push_back(k.id);
  }
  return out;
}

INSTANTIATE_TEST_SUITE_P(Registry, VectorKernel, ::testing::ValuesIn(vector_ids()), id_name);

// ----------------------------------------------------- SWP retiming

struct SwpPair {
  KernelId plain;
  KernelId retimed;
};

class SwpEquivalence : public ::testing::TestWithParam<SwpPair> {};

TEST_P(SwpEquivalence, BitIdenticalMomenta) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const ParticleSystem s = random_system(rng, 500);
    const Lists lists = make_lists(s);
    for (VectorPath path : paths_for(GetParam().plain)) {
      SweepStats a, b;
      EXPECT_TRUE(bits_equal(run_once(GetParam().plain, s, lists, path, &a),
                             run_once(GetParam().retimed, s, lists, path, &b)));
      EXPECT_EQ(a, b);
    }
  }
}

TEST_P(SwpEquivalence, SingletonGroups) {
  // a chain with spacing 2.9: every group holds at most one partner
  ParticleSystem s;
  for (int k = 0; k < 6; ++k) s.positions.push_back({10 + 2.9 * k, 10, 10});
  s.momenta.assign(s.positions.size(), Vec3{});
  const Lists lists = make_lists(s);
  for (VectorPath path : paths_for(GetParam().plain)) {
    EXPECT_TRUE(bits_equal(run_once(GetParam().plain, s, lists, path),
                           run_once(GetParam().retimed, s, lists, path)));
  }
}

INSTANTIATE_TEST_SUITE_P(
    Variants, SwpEquivalence,
    ::testing::Values(SwpPair{KernelId::Sorted, KernelId::SortedSWP},
                      SwpPair{KernelId::AoS4_Sorted, KernelId::AoS4_SortedSWP},
                      SwpPair{KernelId::AoS4_V4, KernelId::AoS4_V4_SWP},
                      SwpPair{KernelId::SoA_V8_RLE, KernelId::SoA_V8_RLE_SWP},
                      SwpPair{KernelId::AoS8_V8_RLE, KernelId::AoS8_V8_RLE_SWP}),
    [](const auto& info) { return std::string(to_string(info.param.retimed)); });

// ------------------------------------------------ scalar kernel details

TEST(SortedKernel, MatchesPairKernelOnOnePair) {
  const ParticleSystem s = two_atoms(2.2);
  const Lists lists = make_lists(s);
  EXPECT_TRUE(bits_equal(run_once(KernelId::Sorted, s, lists, VectorPath::Portable),
                         run_once(KernelId::Pair, s, lists, VectorPath::Portable)));
}

// atom 0 at the center, partners placed along the axes so that no two
// partners are within the search radius of each other
ParticleSystem star(const std::vector<double>& radii) {
  const Vec3 dirs[6] = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
  ParticleSystem s;
  s.positions.push_back({50, 50, 50});
  for (std::size_t k = 0; k < radii.size(); ++k) {
    s.positions.push_back(s.positions[0] + radii[k] * dirs[k]);
  }
  s.momenta.assign(s.positions.size(), Vec3{});
  return s;
}

TEST(SortedKernel, OutOfRangePartnerUntouched) {
  const ParticleSystem s = star({1.2, 3.1});
  const Lists lists = make_lists(s);
  ASSERT_EQ(lists.sorted.group_size(0), 2u);
  for (KernelId id : {KernelId::Sorted, KernelId::SortedSWP, KernelId::AoS4_Sorted}) {
    const auto p = run_once(id, s, lists, VectorPath::Portable);
    EXPECT_EQ(p[2], (Vec3{}));
    EXPECT_EQ(p[0].x, -p[1].x);
    EXPECT_NE(p[1].x, 0.0);
  }
}

TEST(PairKernel, RequiresSoA) {
  const ParticleSystem s = two_atoms(1.0);
  const Lists lists = make_lists(s);
  LayoutView v = to_layout(s, LayoutTag::AoS4);
  EXPECT_THROW((void)pair_sweep(v, lists.pairs, s.params), ContractError);
}

// ------------------------------------------------------ width 4 details

class V4Kernel : public ::testing::TestWithParam<KernelId> {};

TEST_P(V4Kernel, FullBlockInRange) {
  const ParticleSystem s = star({2.5, 2.5, 2.5, 2.5});
  const Lists lists = make_lists(s);
  ASSERT_EQ(lists.sorted.group_size(0), 4u);
  for (VectorPath path : paths_for(GetParam())) {
    SweepStats st;
    const auto p = run_once(GetParam(), s, lists, path, &st);
    EXPECT_EQ(st.pairs_within_cutoff, 4u);
    EXPECT_EQ(st.vector_blocks, 1u);
    EXPECT_EQ(st.tail_pairs, 0u);
    EXPECT_LE(max_abs_dev(p, oracle_momenta(s)), 1e-9);
  }
}

TEST_P(V4Kernel, FullBlockOutOfRange) {
  const ParticleSystem s = star({3.1, 3.2, 3.05, 3.25});
  const Lists lists = make_lists(s);
  ASSERT_EQ(lists.sorted.group_size(0), 4u);
  for (VectorPath path : paths_for(GetParam())) {
    SweepStats st;
    const auto p = run_once(GetParam(), s, lists, path, &st);
    EXPECT_EQ(st.pairs_within_cutoff, 0u);
    EXPECT_TRUE(bits_equal(p, s.momenta));
  }
}

TEST_P(V4Kernel, FiveNeedOneBlockAndOneTail) {
  const ParticleSystem s = star({2.4, 2.5, 2.6, 3.2, 2.45});
  const Lists lists = make_lists(s);
  ASSERT_EQ(lists.sorted.group_size(0), 5u);
  for (VectorPath path : paths_for(GetParam())) {
    SweepStats st;
    SweepTrace tr;
    const auto p = run_once(GetParam(), s, lists, path, &st, &tr);
    EXPECT_EQ(st.vector_blocks, 1u);
    EXPECT_EQ(st.tail_pairs, 1u);
    EXPECT_EQ(tr.blocks_per_group[0], 1u);
    EXPECT_EQ(tr.tail_per_group[0], 1u);
    EXPECT_EQ(st.pairs_within_cutoff, 4u);
    EXPECT_LE(max_abs_dev(p, oracle_momenta(s)), 1e-9);
  }
}

INSTANTIATE_TEST_SUITE_P(Width4, V4Kernel,
                         ::testing::Values(KernelId::AoS4_V4, KernelId::AoS4_V4_SWP,
                                           KernelId::AoS8_V4_SWP),
                         id_name);

// ------------------------------------------------------ width 8 details

class V8Kernel : public ::testing::TestWithParam<KernelId> {};

// One group (atom 0) with the given number of partners.
struct Fan {
  ParticleSystem system;
  Lists lists;
};

Fan fan(std::size_t partners, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Fan f;
  f.system = random_system(rng, partners + 1, 0.2);
  std::vector<AtomPair> pairs;
  for (std::size_t j = 1; j <= partners; ++j) pairs.push_back({0, static_cast<AtomIndex>(j)});
  std::shuffle(pairs.begin(), pairs.end(), rng);
  f.lists.pairs = PairList(partners + 1, pairs);
  f.lists.sorted = sort_pair_list(f.lists.pairs, partners + 1);
  return f;
}

TEST_P(V8Kernel, RemainderEliminatedByMask) {
  for (std::size_t n : {55u, 8u, 1u, 7u, 9u, 16u, 80u}) {
    const Fan f = fan(n, n);
    for (VectorPath path : paths_for(GetParam())) {
      SweepStats st;
      SweepTrace tr;
      const auto p = run_once(GetParam(), f.system, f.lists, path, &st, &tr);
      EXPECT_EQ(tr.blocks_per_group[0], (n + 7) / 8) << n;
      EXPECT_EQ(st.vector_blocks, (n + 7) / 8) << n;
      EXPECT_EQ(st.tail_pairs, 0u);
      // active loop lanes summed over blocks: the last block has n mod 8 lanes
      EXPECT_EQ(st.pairs_visited, n);
      // only the fan's pairs are listed, so compare with a pair-list run
      const auto want = run_once(KernelId::Pair, f.system, f.lists, VectorPath::Portable);
      EXPECT_LE(max_abs_dev(p, want), 1e-9);
    }
  }
}

TEST_P(V8Kernel, FiftyFiveUsesSevenBlocks) {
  const Fan f = fan(55, 1);
  SweepTrace tr;
  (void)run_once(GetParam(), f.system, f.lists, VectorPath::Portable, nullptr, &tr);
  EXPECT_EQ(tr.blocks_per_group[0], 7u);
  EXPECT_EQ(55 - 6 * 8, 7);
}

TEST_P(V8Kernel, AgreesWithWidthFour) {
  std::mt19937_64 rng(12);
  const ParticleSystem s = random_system(rng, 900);
  const Lists lists = make_lists(s);
  const auto v4 = run_once(KernelId::AoS4_V4, s, lists, best_path(4));
  EXPECT_LE(max_abs_dev(run_once(GetParam(), s, lists, best_path(8)), v4), 1e-9);
}

INSTANTIATE_TEST_SUITE_P(Width8, V8Kernel,
                         ::testing::Values(KernelId::SoA_V8_RLE, KernelId::SoA_V8_RLE_SWP,
                                           KernelId::AoS8_V8_RLE, KernelId::AoS8_V8_RLE_SWP),
                         id_name);

TEST(VectorDispatch, RejectsUnsupportedLayouts) {
  const ParticleSystem s = two_atoms(1.0);
  const Lists lists = make_lists(s);
  LayoutView soa = to_layout(s, LayoutTag::SoA);
  LayoutView aos4 = to_layout(s, LayoutTag::AoS4);
  EXPECT_THROW((void)v4_sweep(soa, lists.sorted, s.params, false, VectorPath::Portable),
               ContractError);
  EXPECT_THROW((void)v8_rle_sweep(aos4, lists.sorted, s.params, false, VectorPath::Portable),
               ContractError);
}

TEST(VectorDispatch, UnavailableIntrinsicPathIsAConfigError) {
  const ParticleSystem s = two_atoms(1.0);
  const Lists lists = make_lists(s);
  LayoutView v = to_layout(s, LayoutTag::SoA);
  if (intrinsic_available(8)) {
    EXPECT_NO_THROW((void)v8_rle_sweep(v, lists.sorted, s.params, false, VectorPath::Intrinsic));
  } else {
    EXPECT_THROW((void)v8_rle_sweep(v, lists.sorted, s.params, false, VectorPath::Intrinsic),
                 ConfigError);
  }
}

// ------------------------------------------------------------ registry

TEST(Registry, Enumeration) {
  const auto kernels = list_kernels();
  EXPECT_GE(kernels.size(), 9u);
  std::set<KernelId> ids;
  std::set<std::string_view> names;
  for (const KernelInfo& k : kernels) {
    ids.insert(k.id);
    names.insert(k.name);
    EXPECT_EQ(parse_kernel(k.name), k.id);
    EXPECT_EQ(&kernel_info(k.id), &k);
    EXPECT_FALSE(k.description.empty());
  }
  EXPECT_EQ(ids.size(), kernels.size());
  EXPECT_EQ(names.size(), kernels.size());
  EXPECT_EQ(kernel_info(KernelId::Oracle).list, ListKind::None);
  EXPECT_EQ(kernel_info(KernelId::Pair).list, ListKind::Pair);
  EXPECT_EQ(kernel_info(KernelId::AoS4_V4).layout, LayoutTag::AoS4);
  EXPECT_EQ(kernel_info(KernelId::AoS8_V4_SWP).layout, LayoutTag::AoS8);
  EXPECT_FALSE(parse_kernel("NoSuchKernel").has_value());
}

TEST(Registry, ScalarKernelsReportPortablePath) {
  EXPECT_EQ(effective_path(KernelId::Sorted, VectorPath::Intrinsic), VectorPath::Portable);
  EXPECT_EQ(effective_path(KernelId::AoS4_V4, VectorPath::Intrinsic), VectorPath::Intrinsic);
}

}  // namespace
}  // namespace ljsimd
