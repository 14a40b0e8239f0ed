#include "ljsimd/lanes.hpp"


namespace ljsimd {

Transposed4 transpose4(const LaneVec<4>& r0, const LaneVec<4>& r1, const LaneVec<4>& r2,
                       const LaneVec<4>& r3) {
  Transposed4 t;
  const LaneVec<4>* rows[4] = {&r0, &r1, &r2, &r3};
  for (std::size_t k = 0; k < 4; ++k) {
    t.x[k] = (*rows[k])[0];
    t.y[k] = (*rows[k])[1];
    t.z[k] = (*rows[k])[2];
  }
  return t;
}

std::array<LaneVec<4>, 4> untranspose4(const Transposed4& t) {
  std::array<LaneVec<4>, 4> r{};
  for (std::size_t k = 0; k < 4; ++k) r[k] = {{t.x[k], t.y[k], t.z[k], 0.0}};
  return r;
}

std::size_t gather_element(LayoutTag tag, std::int32_t atom, int field) {
  switch (tag) {
    case LayoutTag::SoA:
      return static_cast<std::size_t>(atom);
    case LayoutTag::AoS8:
      return aos8_element(static_cast<std::size_t>(atom), field);
    case LayoutTag::AoS4:
      break;
  }
  throw ContractError("gather/scatter requires the SoA or AoS8 layout");
}

namespace {

const double* field_base(const LayoutView& view, int field) {
  if (view.tag() == LayoutTag::SoA) return view.soa(static_cast<SoAField>(field));
  if (view.tag() == LayoutTag::AoS8) return view.storage().data();
  throw ContractError("gather/scatter requires the SoA or AoS8 layout");
}

LaneVec3x8 gather3(const LayoutView& view, const LaneIndex<8>& j_idx, LaneMask<8> mask,
                   LaneVec3x8 out, int first_field) {
  LaneVec<8>* dst[3] = {&out.x, &out.y, &out.z};
  for (int c = 0; c < 3; ++c) {
    const double* base = field_base(view, first_field + c);
    for (std::size_t k = 0; k < 8; ++k) {
      if (mask.test(k)) (*dst[c])[k] = base[gather_element(view.tag(), j_idx[k], first_field + c)];
    }
  }
  return out;
}

}  // namespace

LaneVec3x8 gather_positions(const LayoutView& view, const LaneIndex<8>& j_idx, LaneMask<8> mask,
                            const LaneVec3x8& fallback) {
  return gather3(view, j_idx, mask, fallback, 0);
}

LaneVec3x8 gather_momenta(const LayoutView& view, const LaneIndex<8>& j_idx, LaneMask<8> mask,
                          const LaneVec3x8& fallback) {
  return gather3(view, j_idx, mask, fallback, 3);
}

void scatter_momenta(LayoutView& view, const LaneIndex<8>& j_idx, LaneMask<8> mask,
                     const LaneVec3x8& p) {
  for (std::size_t a = 0; a < 8; ++a) {
    for (std::size_t b = a + 1; b < 8; ++b) {
      if (mask.test(a) && mask.test(b) && j_idx[a] == j_idx[b]) {
        throw ContractError("scatter_momenta: conflicting indices under the active mask");
      }
    }
  }
  const LaneVec<8>* src[3] = {&p.x, &p.y, &p.z};
  for (int c = 0; c < 3; ++c) {
    double* base = const_cast<double*>(field_base(view, 3 + c));
    for (std::size_t k = 0; k < 8; ++k) {
      if (mask.test(k)) base[gather_element(view.tag(), j_idx[k], 3 + c)] = (*src[c])[k];
    }
  }
}

}  // namespace ljsimd
