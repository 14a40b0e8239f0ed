#include "ljsimd/layout.hpp"

#include <algorithm>

namespace ljsimd {

namespace {

constexpr std::size_t round_up(std::size_t v, std::size_t m) { return (v + m - 1) / m * m; }

constexpr std::size_t kDoublesPerLine = LayoutView::kAlignment / sizeof(double);

}  // namespace

std::string_view to_string(LayoutTag tag) {
  switch (tag) {
    case LayoutTag::SoA:
      return "SoA";
    case LayoutTag::AoS4:
      return "AoS4";
    case LayoutTag::AoS8:
      return "AoS8";
  }
  return "?";
}

std::optional<LayoutTag> parse_layout(std::string_view name) {
  for (LayoutTag t : {LayoutTag::SoA, LayoutTag::AoS4, LayoutTag::AoS8}) {
    if (to_string(t) == name) return t;
  }
  return std::nullopt;
}

LayoutView::LayoutView(LayoutTag tag, std::size_t n, const SimParams& params)
    : tag_(tag), n_(n), params_(params) {
  switch (tag_) {
    case LayoutTag::SoA:
      soa_stride_ = round_up(n_, kDoublesPerLine);
      data_.assign(6 * soa_stride_, 0.0);
      break;
    case LayoutTag::AoS4:
      data_.assign(momentum_offset() + 4 * n_, 0.0);
      break;
    case LayoutTag::AoS8:
      data_.assign(8 * n_, 0.0);
      break;
  }
}

std::size_t LayoutView::momentum_offset() const {
  switch (tag_) {
    case LayoutTag::SoA:
      return 3 * soa_stride_;
    case LayoutTag::AoS4:
      return round_up(4 * n_, kDoublesPerLine);
    case LayoutTag::AoS8:
      return 4;
  }
  return 0;
}

std::size_t LayoutView::record_stride() const {
  switch (tag_) {
    case LayoutTag::AoS4:
      return 4;
    case LayoutTag::AoS8:
      return 8;
    case LayoutTag::SoA:
      break;
  }
  throw ContractError("record_stride() requires an AoS layout");
}

double* LayoutView::soa(SoAField f) {
  if (tag_ != LayoutTag::SoA) throw ContractError("soa() requires the SoA layout");
  return data_.data() + static_cast<std::size_t>(f) * soa_stride_;
}

const double* LayoutView::soa(SoAField f) const {
  return const_cast<LayoutView*>(this)->soa(f);
}

double* LayoutView::aos_positions() {
  if (tag_ == LayoutTag::SoA) throw ContractError("aos_positions() requires an AoS layout");
  return data_.data();
}

const double* LayoutView::aos_positions() const {
  return const_cast<LayoutView*>(this)->aos_positions();
}

double* LayoutView::aos_momenta() {
  if (tag_ == LayoutTag::SoA) throw ContractError("aos_momenta() requires an AoS layout");
  return data_.data() + momentum_offset();
}

const double* LayoutView::aos_momenta() const {
  return const_cast<LayoutView*>(this)->aos_momenta();
}

Vec3 LayoutView::position(std::size_t i) const {
  if (tag_ == LayoutTag::SoA) {
    return {soa(SoAField::X)[i], soa(SoAField::Y)[i], soa(SoAField::Z)[i]};
  }
  const double* r = aos_positions() + i * record_stride();
  return {r[0], r[1], r[2]};
}

Vec3 LayoutView::momentum(std::size_t i) const {
  if (tag_ == LayoutTag::SoA) {
    return {soa(SoAField::PX)[i], soa(SoAField::PY)[i], soa(SoAField::PZ)[i]};
  }
  const double* r = aos_momenta() + i * record_stride();
  return {r[0], r[1], r[2]};
}

void LayoutView::set_position(std::size_t i, Vec3 q) {
  if (tag_ == LayoutTag::SoA) {
    soa(SoAField::X)[i] = q.x;
    soa(SoAField::Y)[i] = q.y;
    soa(SoAField::Z)[i] = q.z;
    return;
  }
  double* r = aos_positions() + i * record_stride();
  r[0] = q.x;
  r[1] = q.y;
  r[2] = q.z;
}

void LayoutView::set_momentum(std::size_t i, Vec3 p) {
  if (tag_ == LayoutTag::SoA) {
    soa(SoAField::PX)[i] = p.x;
    soa(SoAField::PY)[i] = p.y;
    soa(SoAField::PZ)[i] = p.z;
    return;
  }
  double* r = aos_momenta() + i * record_stride();
  r[0] = p.x;
  r[1] = p.y;
  r[2] = p.z;
}

void LayoutView::reset_momenta() {
  for (std::size_t i = 0; i < n_; ++i) set_momentum(i, Vec3{});
}

std::vector<std::size_t> LayoutView::padding_slots() const {
  std::vector<std::size_t> slots;
  switch (tag_) {
    case LayoutTag::SoA:
      for (std::size_t f = 0; f < 6; ++f) {
        for (std::size_t k = n_; k < soa_stride_; ++k) slots.push_back(f * soa_stride_ + k);
      }
      break;
    case LayoutTag::AoS4: {
      const std::size_t mo = momentum_offset();
      for (std::size_t i = 0; i < n_; ++i) slots.push_back(4 * i + 3);
      for (std::size_t k = 4 * n_; k < mo; ++k) slots.push_back(k);
      for (std::size_t i = 0; i < n_; ++i) slots.push_back(mo + 4 * i + 3);
      break;
    }
    case LayoutTag::AoS8:
      for (std::size_t i = 0; i < n_; ++i) {
        slots.push_back(8 * i + 3);
        slots.push_back(8 * i + 7);
      }
      break;
  }
  return slots;
}

LayoutView to_layout(const ParticleSystem& system, LayoutTag tag) {
  if (system.momenta.size() != system.positions.size()) {
    throw ContractError("to_layout: positions and momenta differ in length");
  }
  LayoutView view(tag, system.size(), system.params);
  for (std::size_t i = 0; i < system.size(); ++i) {
    view.set_position(i, system.positions[i]);
    view.set_momentum(i, system.momenta[i]);
  }
  return view;
}

ParticleSystem from_layout(const LayoutView& view) {
  ParticleSystem s;
  s.params = view.params();
  s.positions.resize(view.size());
  s.momenta.resize(view.size());
  for (std::size_t i = 0; i < view.size(); ++i) {
    s.positions[i] = view.position(i);
    s.momenta[i] = view.momentum(i);
  }
  return s;
}

void load_momenta(LayoutView& view, const ParticleSystem& system) {
  if (system.size() != view.size()) {
    throw ContractError("load_momenta: atom counts differ");
  }
  for (std::size_t i = 0; i < view.size(); ++i) view.set_momentum(i, system.momenta[i]);
}

}  // namespace ljsimd
