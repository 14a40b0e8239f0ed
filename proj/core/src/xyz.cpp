#include "ljsimd/xyz.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>

#include <fmt/format.h>

namespace ljsimd {

namespace {

double parse_real(std::string_view s, std::size_t line) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ConfigError(fmt::format("xyz line {}: '{}' is not a number", line, s));
  }
  return v;
}

void apply_key(SimParams& p, std::string_view key, std::string_view value) {
  if (key == "box_edge") {
    p.box_edge = parse_real(value, 2);
  } else if (key == "cutoff") {
    p.cutoff = parse_real(value, 2);
  } else if (key == "search_radius") {
    p.search_radius = parse_real(value, 2);
  } else if (key == "dt") {
    p.dt = parse_real(value, 2);
  } else if (key == "n_sweeps") {
    p.n_sweeps = static_cast<int>(parse_real(value, 2));
  }
}

}  // namespace

void write_xyz(std::ostream& out, const ParticleSystem& system) {
  const SimParams& p = system.params;
  out << system.size() << '\n';
  out << fmt::format(
      "box_edge={:.16e} cutoff={:.16e} search_radius={:.16e} dt={:.16e} n_sweeps={} "
      "Properties=pos:R:3:momenta:R:3\n",
      p.box_edge, p.cutoff, p.search_radius, p.dt, p.n_sweeps);
  for (std::size_t i = 0; i < system.size(); ++i) {
    const Vec3 q = system.positions[i];
    const Vec3 m = system.momenta[i];
    out << fmt::format("{:.16e} {:.16e} {:.16e} {:.16e} {:.16e} {:.16e}\n", q.x, q.y, q.z, m.x,
                       m.y, m.z);
  }
}

void write_xyz_file(const std::string& path, const ParticleSystem& system) {
  std::ofstream out(path);
  if (!out) throw ConfigError(fmt::format("cannot open '{}' for writing", path));
  write_xyz(out, system);
  if (!out) throw ConfigError(fmt::format("write to '{}' failed", path));
}

ParticleSystem read_xyz(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ConfigError("xyz: missing atom count");
  std::size_t n = 0;
  {
    std::istringstream head(line);
    if (!(head >> n)) throw ConfigError(fmt::format("xyz: bad atom count '{}'", line));
  }

  ParticleSystem s;
  if (!std::getline(in, line)) throw ConfigError("xyz: missing comment line");
  {
    std::istringstream comment(line);
    std::string token;
    while (comment >> token) {
      const auto eq = token.find('=');
      if (eq == std::string::npos) continue;
      apply_key(s.params, std::string_view(token).substr(0, eq),
                std::string_view(token).substr(eq + 1));
    }
  }

  s.positions.resize(n);
  s.momenta.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::getline(in, line)) {
      throw ConfigError(fmt::format("xyz: expected {} atoms, found {}", n, i));
    }
    std::istringstream row(line);
    std::string f[6];
    for (auto& t : f) {
      if (!(row >> t)) throw ConfigError(fmt::format("xyz line {}: expected 6 columns", i + 3));
    }
    const std::size_t ln = i + 3;
    s.positions[i] = {parse_real(f[0], ln), parse_real(f[1], ln), parse_real(f[2], ln)};
    s.momenta[i] = {parse_real(f[3], ln), parse_real(f[4], ln), parse_real(f[5], ln)};
  }
  return s;
}

ParticleSystem read_xyz_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(fmt::format("cannot open '{}'", path));
  return read_xyz(in);
}

}  // namespace ljsimd
