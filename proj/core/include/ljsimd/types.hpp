#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ljsimd {

/// Atom index as stored in pair lists and gather index vectors.
using AtomIndex = std::int32_t;

/// Raised when a simulation, lattice or list configuration cannot be honored.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when the LJ math is evaluated outside its domain (r = 0).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a kernel is handed data that breaks its calling contract
/// (wrong layout, list built for a different system).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend constexpr Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend constexpr Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend constexpr Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
  constexpr Vec3& operator+=(Vec3 b) {
    x += b.x;
    y += b.y;
    z += b.z;
    return *this;
  }
  constexpr Vec3& operator-=(Vec3 b) {
    x -= b.x;
    y -= b.y;
    z -= b.z;
    return *this;
  }
  friend constexpr bool operator==(const Vec3&, const Vec3&) = default;

  [[nodiscard]] constexpr double dot(Vec3 b) const { return x * b.x + y * b.y + z * b.z; }
  [[nodiscard]] bool finite() const {
    return std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
  }
};

/// Run parameters in reduced LJ units (sigma = epsilon = 1).
struct SimParams {
  double box_edge = 100.0;
  double cutoff = 3.0;
  double search_radius = 3.3;
  double dt = 1.0;
  int n_sweeps = 100;

  [[nodiscard]] double cutoff2() const { return cutoff * cutoff; }
  [[nodiscard]] double search_radius2() const { return search_radius * search_radius; }

  /// Throws ConfigError unless 0 < r_c < r_s and box_edge > 2 r_s.
  void validate() const;
};

}  // namespace ljsimd
