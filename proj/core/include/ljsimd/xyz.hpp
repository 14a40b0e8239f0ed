#pragma once

#include <iosfwd>
#include <string>

#include "ljsimd/system.hpp"

namespace ljsimd {

// Extended XYZ dump: atom count, a comment line carrying the run parameters as
// key=value pairs, then one "x y z px py pz" line per atom. Reals are written
// with 17 significant digits so a read reproduces the system bit for bit.

void write_xyz(std::ostream& out, const ParticleSystem& system);
void write_xyz_file(const std::string& path, const ParticleSystem& system);

/// Throws ConfigError on malformed input. Parameters absent from the comment
/// line keep their SimParams defaults.
[[nodiscard]] ParticleSystem read_xyz(std::istream& in);
[[nodiscard]] ParticleSystem read_xyz_file(const std::string& path);

}  // namespace ljsimd
